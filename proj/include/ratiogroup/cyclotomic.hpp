// Exact arithmetic in the ring Q(zeta_N) for a root of unity of known order.
#pragma once

#include <complex>
#include <cstdint>
#include <map>

#include "ratiogroup/arith.hpp"

namespace ratiogroup {

/// Element of Q(zeta_N), kept in a canonical basis so equality and zero
/// tests are exact. The basis is the tensor product over prime powers
/// q = p^a || N of {zeta_q^i : 0 <= i < phi(q)}; a global exponent e is
/// canonical when each of its local CRT coordinates lies below phi(q).
class Cyclotomic {
  public:
    static constexpr int64_t kMaxOrder = 10'000'000;

    Cyclotomic() : order_(1) {}

    /// exp(2*pi*i*k/N), canonical.
    static Cyclotomic root(int64_t k, int64_t N);
    static Cyclotomic rational(const BigRat& c);
    static Cyclotomic integer(long c) { return rational(BigRat(c)); }
    /// Builds sum_e coeff[e] * zeta_N^e and canonicalizes once.
    static Cyclotomic from_exponents(int64_t N, const std::map<int64_t, BigRat>& coeff);

    int64_t order() const { return order_; }
    const std::map<int64_t, BigRat>& coefficients() const { return coeff_; }

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const;
    bool is_rational() const;
    BigRat rational_value() const;  // requires is_rational()

    Cyclotomic embedded(int64_t new_order) const;

    Cyclotomic conj() const;
    Cyclotomic pow(int64_t e) const;  // integer powers; negative only for nonzero roots

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    Cyclotomic operator*(const BigRat& s) const;
    bool operator==(const Cyclotomic& other) const;
    bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

    std::complex<double> to_complex() const;
    std::string str() const;

  private:
    int64_t order_;
    std::map<int64_t, BigRat> coeff_;
};

}  // namespace ratiogroup
