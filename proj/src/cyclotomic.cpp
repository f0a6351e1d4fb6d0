#include "ratiogroup/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

namespace ratiogroup {

namespace {

// Per-order reduction data: one block per prime power q = p^a || N.
struct OrderData {
    int64_t n = 1;
    struct Block {
        int64_t p, q;        // prime, prime power
        int64_t phi;         // phi(q)
        int64_t step;        // N_i * (N_i^{-1} mod q) mod N: shifts this local coordinate only
        int64_t sub;         // p^{a-1}
        int64_t coord_mul;   // local coordinate = e * coord_mul mod q
    };
    std::vector<Block> blocks;
};

const OrderData& order_data(int64_t n) {
    static std::mutex mu;
    static std::map<int64_t, OrderData> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    OrderData d;
    d.n = n;
    for (const auto& [pb, a] : factorize(n).entries) {
        int64_t p = to_i64(pb);
        int64_t q = 1;
        for (long i = 0; i < a; ++i) q *= p;
        OrderData::Block b;
        b.p = p;
        b.q = q;
        b.phi = q / p * (p - 1);
        b.sub = q / p;
        int64_t ni = n / q;
        int64_t mi = inv_mod(ni % q, q);
        b.coord_mul = mi;
        b.step = static_cast<int64_t>(static_cast<__int128>(ni) * mi % n);
        d.blocks.push_back(b);
    }
    return cache.emplace(n, std::move(d)).first->second;
}

}  // namespace

Cyclotomic Cyclotomic::from_exponents(int64_t n, const std::map<int64_t, BigRat>& raw) {
    if (n < 1) throw std::domain_error("cyclotomic order must be positive");
    if (n > kMaxOrder) throw std::overflow_error("cyclotomic order above configured cap");
    const OrderData& d = order_data(n);
    Cyclotomic out;
    out.order_ = n;
    std::vector<std::pair<int64_t, BigRat>> work(raw.begin(), raw.end());
    while (!work.empty()) {
        auto [e, c] = std::move(work.back());
        work.pop_back();
        if (c == 0) continue;
        e %= n;
        if (e < 0) e += n;
        const OrderData::Block* offending = nullptr;
        int64_t local = 0;
        for (const auto& b : d.blocks) {
            local = static_cast<int64_t>(static_cast<__int128>(e) * b.coord_mul % b.q);
            if (local >= b.phi) {
                offending = &b;
                break;
            }
        }
        if (!offending) {
            BigRat& slot = out.coeff_[e];
            slot += c;
            if (slot == 0) out.coeff_.erase(e);
            continue;
        }
        // zeta_q^{(p-1)p^{a-1}+r} = -sum_{j=0}^{p-2} zeta_q^{j p^{a-1}+r}.
        const auto& b = *offending;
        int64_t r = local - (b.p - 1) * b.sub;
        for (int64_t j = 0; j <= b.p - 2; ++j) {
            int64_t target = j * b.sub + r;
            __int128 shift = static_cast<__int128>(target - local) * b.step;
            int64_t e2 = static_cast<int64_t>((static_cast<__int128>(e) + shift % n + n) % n);
            work.emplace_back(e2, -c);
        }
    }
    return out;
}

Cyclotomic Cyclotomic::root(int64_t k, int64_t n) {
    if (n < 1) throw std::domain_error("cyclotomic order must be positive");
    k %= n;
    if (k < 0) k += n;
    // Reduce k/n so unrelated roots stay in small fields.
    int64_t g = std::gcd(k, n);
    if (g > 1) {
        k /= g;
        n /= g;
    }
    return from_exponents(n, {{k, BigRat(1)}});
}

Cyclotomic Cyclotomic::rational(const BigRat& c) {
    Cyclotomic out;
    out.order_ = 1;
    if (c != 0) out.coeff_[0] = c;
    return out;
}

bool Cyclotomic::is_one() const {
    return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1;
}

bool Cyclotomic::is_rational() const {
    return coeff_.empty() || (coeff_.size() == 1 && coeff_.begin()->first == 0);
}

BigRat Cyclotomic::rational_value() const {
    if (coeff_.empty()) return BigRat(0);
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return coeff_.begin()->second;
}

Cyclotomic Cyclotomic::embedded(int64_t new_order) const {
    if (new_order % order_ != 0) throw std::domain_error("embedding order must be a multiple");
    if (new_order == order_) return *this;
    int64_t k = new_order / order_;
    std::map<int64_t, BigRat> raw;
    for (const auto& [e, c] : coeff_) raw[e * k] = c;
    return from_exponents(new_order, raw);
}

Cyclotomic Cyclotomic::conj() const {
    std::map<int64_t, BigRat> raw;
    for (const auto& [e, c] : coeff_) raw[(order_ - e) % order_] += c;
    return from_exponents(order_, raw);
}

Cyclotomic Cyclotomic::pow(int64_t e) const {
    if (e < 0) return conj().pow(-e);  // valid for roots of unity
    Cyclotomic acc = rational(BigRat(1));
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

namespace {

std::pair<Cyclotomic, Cyclotomic> align(const Cyclotomic& a, const Cyclotomic& b) {
    int64_t n = std::lcm(a.order(), b.order());
    if (n > Cyclotomic::kMaxOrder) throw std::overflow_error("cyclotomic order above configured cap");
    return {a.embedded(n), b.embedded(n)};
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    std::map<int64_t, BigRat> raw = x.coefficients();
    for (const auto& [e, c] : y.coefficients()) raw[e] += c;
    return Cyclotomic::from_exponents(x.order(), raw);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& [e, c] : out.coeff_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator*(const BigRat& s) const {
    if (s == 0) return Cyclotomic();
    Cyclotomic out = *this;
    for (auto& [e, c] : out.coeff_) c *= s;
    return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    std::map<int64_t, BigRat> raw;
    for (const auto& [e1, c1] : x.coefficients())
        for (const auto& [e2, c2] : y.coefficients()) raw[(e1 + e2) % x.order()] += c1 * c2;
    return Cyclotomic::from_exponents(x.order(), raw);
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
    if (order_ == other.order_) return coeff_ == other.coeff_;
    auto [x, y] = align(*this, other);
    return x.coefficients() == y.coefficients();
}

std::complex<double> Cyclotomic::to_complex() const {
    long double re = 0, im = 0;
    for (const auto& [e, c] : coeff_) {
        long double v = boost::multiprecision::numerator(c).convert_to<long double>() /
                        boost::multiprecision::denominator(c).convert_to<long double>();
        long double ang = 2.0L * M_PIl * static_cast<long double>(e) / static_cast<long double>(order_);
        re += v * std::cos(ang);
        im += v * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclotomic::str() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeff_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e != 0) os << "*z" << order_ << "^" << e;
    }
    return os.str();
}

}  // namespace ratiogroup
