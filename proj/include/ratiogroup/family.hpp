// Ratio families (an+b)/(An+B): normalization, the working modulus
// delta = 2(aA|Delta|)^3, residue-class constructions, and the
// cross-multiplication congruence test.
#pragma once

#include <optional>

#include "ratiogroup/arith.hpp"

namespace ratiogroup {

struct RatioFamily {
    int64_t a, b, A, B;  // as given, a > 0, A > 0
    int64_t k;           // ratios are taken for n >= k; raised so both forms are positive

    int64_t delta;                 // aB - Ab, nonzero
    int64_t alpha, beta;           // gcd(a,b), gcd(A,B)
    int64_t a1, b1, A1, B1;        // reduced parts
    BigRat rho;                    // alpha/beta in lowest terms
    PrimeExponentMap rho_factored;
    PrimeExponentMap rho0;         // part of rho supported on primes dividing gcd(a1, A1)
    int64_t delta1;                // a1*B1 - A1*b1
    int64_t delta_mod;             // delta = 2*(a*A*|Delta|)^3, the working modulus
    int64_t torsion_exponent;      // 2*phi(delta_mod)
    int64_t gcd_a1A1;

    enum class Case { first, second };
    Case case_tag;

    // (prime, exponent) with prime^exponent || delta_mod, ascending.
    std::vector<std::pair<int64_t, int64_t>> delta_primes;

    int64_t num(int64_t n) const { return a * n + b; }
    int64_t den(int64_t n) const { return A * n + B; }
    int64_t num1(int64_t n) const { return a1 * n + b1; }
    int64_t den1(int64_t n) const { return A1 * n + B1; }
    BigRat ratio(int64_t n) const { return BigRat(num(n), den(n)); }

    /// Torsion primes: divisors of delta_mod outside gcd(a1, A1).
    std::vector<int64_t> torsion_primes() const;
};

/// Validates parameters and computes every derived field. Throws on
/// Delta = 0 or nonpositive leading coefficients.
RatioFamily normalize_family(int64_t a, int64_t b, int64_t A, int64_t B, int64_t k = 1);

struct CoprimeClass {
    bool first_case;
    // First case: s mod modulus with ((as+b)(As+B), aA|Delta|) = 1.
    int64_t s = 0;
    int64_t modulus = 0;
    // Second case: classes (n mod modulus) with 2 || a1*n+b1 (resp. 2 || A1*n+B1)
    // and everything else coprime to a*A*|Delta|.
    int64_t n1 = 0, n1_modulus = 0;
    int64_t n2 = 0, n2_modulus = 0;
};

/// Step-1 dichotomy. Throws if neither case admits a class.
CoprimeClass coprime_class(const RatioFamily& f);

enum class Side { numerator, denominator };

struct CaptureClass {
    int64_t prime;
    int64_t exponent;
    Side side;
    BigInt n0;       // representative, >= k
    BigInt modulus;  // arithmetic progression n = n0 (mod modulus)
    // Relation induced at the representative:
    // g(rho) * prod_q g(q)^{torsion_exponents[q]} * chi(r1) * conj(chi)(r2) = 1.
    std::map<int64_t, int64_t> torsion_exponents;
    BigInt r1, r2;  // delta-coprime cofactors of the reduced forms at n0
};

struct CaptureResult {
    std::optional<CaptureClass> cls;
    std::string reason;  // set when not capturable
};

/// Builds an arithmetic progression on which prime^exponent exactly divides
/// the designated reduced form while every delta-prime valuation and
/// delta-cofactor class is frozen.
CaptureResult capture_class(const RatioFamily& f, int64_t prime, int64_t exponent, Side side);

/// Multiplicity-lemma congruence: decides whether the two ratios agree mod s,
/// both by direct cross-multiplication and by the Delta0*(n-n') test, and
/// checks the two decisions agree.
bool ratio_congruent(int64_t u1, int64_t v1, int64_t u2, int64_t v2, int64_t n, int64_t nprime,
                     int64_t s);

/// Two-dimensional reduction: the single-function family whose characters
/// control pairs g1(an+b) g2(An+B) = 1; requires b > 0, B > 0.
RatioFamily reduce_pair(int64_t a, int64_t b, int64_t A, int64_t B);

}  // namespace ratiogroup
