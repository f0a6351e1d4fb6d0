// Brute-force engine over the relation lattice: exponent matrices of ratio
// columns, Smith normal form, cokernel invariants, membership certificates.
#pragma once

#include <optional>

#include "ratiogroup/family.hpp"

namespace ratiogroup {

using FactoredRational = PrimeExponentMap;
using Matrix = std::vector<std::vector<BigInt>>;

struct SnfResult {
    std::vector<BigInt> invariants;  // nonzero diagonal entries, d1 | d2 | ...
    int64_t rank = 0;
    int rows = 0, cols = 0;
    int det_sign_u = 1, det_sign_v = 1;  // by construction of the elementary ops
    Matrix U;      // when requested: U*A*V = diag(invariants)
    Matrix V;
    Matrix U_inv;  // when requested: A*V = U_inv*diag(invariants)
};

struct SnfOptions {
    bool want_u = false;
    bool want_v = false;
    bool want_u_inv = false;
};

SnfResult snf(Matrix a, const SnfOptions& opts = {});

struct ExponentMatrix {
    std::vector<int64_t> primes;        // row labels, ascending
    std::vector<int64_t> indices;       // column labels: the n of each column
    std::vector<std::map<int, int64_t>> columns;  // row -> exponent, sparse
    int64_t k = 1, N = 0;

    Matrix dense() const;
    std::string grid() const;  // plain-text rows "p: e_k ... e_N"
};

/// Columns are the reduced fractions (an+b)/(An+B) for n in [k, N]; rows are
/// all primes appearing. An optional restriction keeps only n = n0 (mod M).
ExponentMatrix exponent_matrix(const RatioFamily& f, int64_t N,
                               std::optional<std::pair<int64_t, int64_t>> restrict_class = {});

struct QuotientInvariants {
    std::vector<BigInt> torsion;         // invariant factors > 1
    int64_t free_rank_over_support = 0;  // rows - rank at this N (not stabilized)
    bool stabilized = false;             // torsion unchanged from N/2 to N
    int64_t N = 0;
    int64_t support_size = 0;
};

QuotientInvariants quotient_invariants(const RatioFamily& f, int64_t N,
                                       std::optional<std::pair<int64_t, int64_t>> restrict_class = {});

struct MembershipResult {
    enum class Status { in_lattice, torsion_class, not_decided };
    Status status;
    std::vector<std::pair<int64_t, int>> certificate;  // (n, +-1), repeats allowed
    BigInt minimal_v = 0;                              // for torsion_class
    std::string note;
    int64_t N = 0;
};

/// Decides whether r is a product of ratio powers with indices <= N; on
/// failure reports the minimal v >= 2 with r^v representable when one exists.
MembershipResult membership(const RatioFamily& f, const FactoredRational& r, int64_t N);

struct NotRepresentable : std::runtime_error {
    BigInt minimal_v;
    explicit NotRepresentable(const std::string& what, BigInt v)
        : std::runtime_error(what), minimal_v(std::move(v)) {}
};

/// Explicit certificate for r at index bound N; the product of the chosen
/// ratios is verified exactly before returning.
std::vector<std::pair<int64_t, int>> represent(const RatioFamily& f, const FactoredRational& r,
                                               int64_t N);

/// Exact product of (a n + b)/(A n + B) over a certificate.
BigRat certificate_product(const RatioFamily& f, const std::vector<std::pair<int64_t, int>>& cert);

}  // namespace ratiogroup
