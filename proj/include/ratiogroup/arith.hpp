// Exact integer arithmetic: factorization, CRT, unit groups, multiplicative orders.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ratiogroup {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Finitely supported map prime -> signed exponent. Keys are certified
/// primes, exponents are never zero.
struct PrimeExponentMap {
    std::map<BigInt, long> entries;

    bool operator==(const PrimeExponentMap&) const = default;

    /// Exact product of p^e over all entries (requires all exponents >= 0).
    BigInt reconstruct_integer() const;
    /// Exact positive rational with signed exponents.
    BigRat reconstruct_rational() const;

    void mul_assign(const PrimeExponentMap& other, int sign = 1);
    long exponent_of(const BigInt& p) const;
};

/// Deterministic Miller-Rabin, exact for n < 3.3e24.
bool is_prime(const BigInt& n);

/// Prime factorization of n >= 1. Trial division below 1e6 followed by
/// Brent's rho with certified primality of every factor.
PrimeExponentMap factorize(const BigInt& n);
PrimeExponentMap factorize_rational(const BigRat& r);

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod);
int64_t inv_mod(int64_t a, int64_t m);
BigInt inv_mod_big(const BigInt& a, const BigInt& m);

/// Solves x = r_i (mod m_i) for pairwise coprime moduli. Returns
/// (residue, product). Throws naming the offending pair otherwise.
std::pair<BigInt, BigInt> crt_solve(const std::vector<std::pair<BigInt, BigInt>>& congruences);

struct UnitGroup {
    int64_t modulus = 1;
    struct Generator {
        int64_t residue;        // lifted generator mod modulus
        int64_t order;
        int64_t prime_power;    // the prime-power block it generates
        int64_t local_residue;  // generator mod prime_power
    };
    std::vector<Generator> generators;  // orders multiply to phi(modulus)
    int64_t phi = 1;

    /// Exponent vector of a reduced residue in the generator basis.
    std::vector<int64_t> dlog(int64_t x) const;
};

/// Canonical generator basis of (Z/m)^*: one generator per odd prime power
/// (smallest primitive root), the pair {-1, 3} for 2^t with t >= 3, lifted
/// to modulus m by CRT. Ordering: primes ascending, -1 before 3.
const UnitGroup& unit_group(int64_t m);

int64_t euler_phi(int64_t m);

/// Least e >= 1 with x^e = 1 (mod m); throws if gcd(x, m) > 1.
int64_t multiplicative_order(int64_t x, int64_t m);

/// All primes <= n, cached and shared.
const std::vector<int32_t>& primes_upto(int32_t n);

int64_t valuation(BigInt n, const BigInt& p);
int64_t valuation_i64(int64_t n, int64_t p);

inline int64_t to_i64(const BigInt& n, const char* what = "value") {
    if (n > std::numeric_limits<int64_t>::max() || n < std::numeric_limits<int64_t>::min())
        throw std::overflow_error(std::string(what) + " exceeds 64-bit range");
    return static_cast<int64_t>(n);
}

}  // namespace ratiogroup
