#include "ratiogroup/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>

namespace ratiogroup {

BigInt PrimeExponentMap::reconstruct_integer() const {
    BigInt out = 1;
    for (const auto& [p, e] : entries) {
        if (e < 0) throw std::domain_error("negative exponent in integer reconstruction");
        out *= boost::multiprecision::pow(p, static_cast<unsigned>(e));
    }
    return out;
}

BigRat PrimeExponentMap::reconstruct_rational() const {
    BigInt num = 1, den = 1;
    for (const auto& [p, e] : entries) {
        if (e >= 0)
            num *= boost::multiprecision::pow(p, static_cast<unsigned>(e));
        else
            den *= boost::multiprecision::pow(p, static_cast<unsigned>(-e));
    }
    return BigRat(num, den);
}

void PrimeExponentMap::mul_assign(const PrimeExponentMap& other, int sign) {
    for (const auto& [p, e] : other.entries) {
        long& slot = entries[p];
        slot += sign * e;
        if (slot == 0) entries.erase(p);
    }
}

long PrimeExponentMap::exponent_of(const BigInt& p) const {
    auto it = entries.find(p);
    return it == entries.end() ? 0 : it->second;
}

const std::vector<int32_t>& primes_upto(int32_t n) {
    static std::mutex mu;
    static std::vector<int32_t> primes;
    static int32_t sieved_to = 0;
    std::scoped_lock lock(mu);
    if (n > sieved_to) {
        int32_t limit = std::max(n, 1 << 20);
        std::vector<bool> comp(limit + 1, false);
        primes.clear();
        for (int64_t i = 2; i <= limit; ++i) {
            if (comp[i]) continue;
            primes.push_back(static_cast<int32_t>(i));
            for (int64_t j = i * i; j <= limit; j += i) comp[j] = true;
        }
        sieved_to = limit;
    }
    return primes;
}

namespace {

bool miller_rabin(const BigInt& n, const BigInt& a) {
    if (n % a == 0) return n == a;
    BigInt d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    BigInt x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Witness set certifies primality below 3.317e24 (Sorenson-Webster).
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!miller_rabin(n, a)) return false;
    return true;
}

namespace {

BigInt brent_rho(const BigInt& n) {
    // n odd composite, no factor below 1e6. Deterministic parameter schedule.
    for (BigInt c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1, ys = 2, q = 1;
        const long m = 128;
        long r = 1;
        while (d == 1) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (long k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (long i = 0; i < std::min(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = q * boost::multiprecision::abs(x - y) % n;
                }
                d = boost::multiprecision::gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = boost::multiprecision::gcd(boost::multiprecision::abs(x - ys), n);
            }
        }
        if (d != n) return d;
    }
}

void factor_into(const BigInt& n, std::map<BigInt, long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    BigInt d = brent_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

PrimeExponentMap factorize(const BigInt& n) {
    if (n < 1) throw std::domain_error("factorize requires n >= 1");
    PrimeExponentMap out;
    BigInt rest = n;
    for (int32_t p : primes_upto(1'000'000)) {
        if (BigInt(p) * p > rest) break;
        while (rest % p == 0) {
            out.entries[p] += 1;
            rest /= p;
        }
    }
    if (rest > 1) {
        if (is_prime(rest))
            out.entries[rest] += 1;
        else
            factor_into(rest, out.entries);
    }
    return out;
}

PrimeExponentMap factorize_rational(const BigRat& r) {
    if (r <= 0) throw std::domain_error("factorize_rational requires a positive rational");
    PrimeExponentMap out = factorize(boost::multiprecision::numerator(r));
    out.mul_assign(factorize(boost::multiprecision::denominator(r)), -1);
    return out;
}

int64_t pow_mod(int64_t base, int64_t exp, int64_t mod) {
    if (mod <= 0) throw std::domain_error("pow_mod modulus must be positive");
    base %= mod;
    if (base < 0) base += mod;
    __int128 acc = 1, b = base;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<int64_t>(acc);
}

namespace {

// Returns gcd and Bezout coefficient x with a*x = gcd (mod b0).
BigInt big_inv_mod(const BigInt& a0, const BigInt& m) {
    BigInt old_r = a0 % m, r = m;
    if (old_r < 0) old_r += m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::domain_error("big_inv_mod: arguments not coprime");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

}  // namespace

int64_t inv_mod(int64_t a, int64_t m) { return to_i64(big_inv_mod(BigInt(a), BigInt(m))); }

BigInt inv_mod_big(const BigInt& a, const BigInt& m) { return big_inv_mod(a, m); }

std::pair<BigInt, BigInt> crt_solve(const std::vector<std::pair<BigInt, BigInt>>& congruences) {
    for (const auto& [r, m] : congruences)
        if (m < 1) throw std::domain_error("crt_solve: modulus must be positive");
    for (size_t i = 0; i < congruences.size(); ++i)
        for (size_t j = i + 1; j < congruences.size(); ++j)
            if (boost::multiprecision::gcd(congruences[i].second, congruences[j].second) != 1)
                throw std::invalid_argument(
                    "crt_solve: moduli not coprime: " + congruences[i].second.str() + ", " +
                    congruences[j].second.str());
    BigInt r = 0, m = 1;
    for (const auto& [ri, mi] : congruences) {
        if (mi == 1) continue;
        BigInt t = ((ri - r) % mi + mi) % mi;
        t = t * big_inv_mod(m, mi) % mi;
        r += m * t;
        m *= mi;
    }
    return {r, m};
}

int64_t euler_phi(int64_t m) {
    if (m < 1) throw std::domain_error("euler_phi requires m >= 1");
    int64_t out = m;
    int64_t rest = m;
    for (int32_t p : primes_upto(1'000'000)) {
        if (static_cast<int64_t>(p) * p > rest) break;
        if (rest % p == 0) {
            out -= out / p;
            while (rest % p == 0) rest /= p;
        }
    }
    if (rest > 1) out -= out / rest;
    return out;
}

int64_t valuation(BigInt n, const BigInt& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    n = boost::multiprecision::abs(n);
    int64_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int64_t valuation_i64(int64_t n, int64_t p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    if (n < 0) n = -n;
    int64_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

namespace {

int64_t smallest_primitive_root(int64_t p, int64_t pk, int64_t phik) {
    PrimeExponentMap pf = factorize(phik);
    for (int64_t g = 2;; ++g) {
        if (g % p == 0) continue;
        bool primitive = true;
        for (const auto& [q, e] : pf.entries) {
            if (pow_mod(g, phik / to_i64(q), pk) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
}

UnitGroup build_unit_group(int64_t m) {
    UnitGroup ug;
    ug.modulus = m;
    ug.phi = 1;
    if (m <= 2) return ug;
    PrimeExponentMap mf = factorize(m);
    for (const auto& [pb, e] : mf.entries) {
        int64_t p = to_i64(pb);
        int64_t pk = 1;
        for (long i = 0; i < e; ++i) pk *= p;
        int64_t rest = m / pk;
        auto lift = [&](int64_t g) {
            if (rest == 1) return g % m;
            return to_i64(crt_solve({{g, pk}, {1, rest}}).first);
        };
        if (p == 2) {
            if (e == 1) continue;
            if (e == 2) {
                ug.generators.push_back({lift(3), 2, pk, 3});
                ug.phi *= 2;
            } else {
                ug.generators.push_back({lift(pk - 1), 2, pk, pk - 1});
                ug.generators.push_back({lift(3), pk / 4, pk, 3});
                ug.phi *= pk / 2;
            }
        } else {
            int64_t phik = pk / p * (p - 1);
            int64_t g = smallest_primitive_root(p, pk, phik);
            ug.generators.push_back({lift(g), phik, pk, g});
            ug.phi *= phik;
        }
    }
    return ug;
}

constexpr int64_t kDlogTableLimit = 1 << 25;

// Discrete log inside one cyclic subgroup <g> mod pk, via a full table for
// small pk and baby-step/giant-step otherwise.
struct CyclicDlog {
    std::vector<int32_t> table;
    int64_t pk = 0, g = 0, order = 0;

    std::optional<int64_t> lookup(int64_t x) const {
        if (!table.empty()) {
            int32_t v = table[x];
            if (v < 0) return std::nullopt;
            return v;
        }
        int64_t s = static_cast<int64_t>(std::sqrt(static_cast<double>(order))) + 1;
        std::map<int64_t, int64_t> baby;
        int64_t cur = 1 % pk;
        for (int64_t j = 0; j < s; ++j) {
            baby.emplace(cur, j);
            cur = static_cast<int64_t>(static_cast<__int128>(cur) * g % pk);
        }
        int64_t factor = pow_mod(inv_mod(g, pk), s, pk);
        int64_t gamma = x;
        for (int64_t i = 0; i <= s; ++i) {
            auto it = baby.find(gamma);
            if (it != baby.end() && i * s + it->second < order) return i * s + it->second;
            gamma = static_cast<int64_t>(static_cast<__int128>(gamma) * factor % pk);
        }
        return std::nullopt;
    }
};

const CyclicDlog& cyclic_dlog(int64_t pk, int64_t g, int64_t order) {
    static std::mutex mu;
    static std::map<std::pair<int64_t, int64_t>, CyclicDlog> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_pair(pk, g);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    CyclicDlog d;
    d.pk = pk;
    d.g = g;
    d.order = order;
    if (pk <= kDlogTableLimit) {
        d.table.assign(pk, -1);
        int64_t cur = 1 % pk;
        for (int64_t j = 0; j < order; ++j) {
            d.table[cur] = static_cast<int32_t>(j);
            cur = static_cast<int64_t>(static_cast<__int128>(cur) * g % pk);
        }
    }
    return cache.emplace(key, std::move(d)).first->second;
}

}  // namespace

const UnitGroup& unit_group(int64_t m) {
    if (m < 1) throw std::domain_error("unit_group requires m >= 1");
    static std::mutex mu;
    static std::map<int64_t, UnitGroup> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, build_unit_group(m)).first;
    return it->second;
}

std::vector<int64_t> UnitGroup::dlog(int64_t x) const {
    x %= modulus;
    if (x < 0) x += modulus;
    if (modulus == 1) return {};
    if (std::gcd(x, modulus) != 1) throw std::domain_error("dlog of non-unit");
    std::vector<int64_t> out(generators.size());
    for (size_t i = 0; i < generators.size(); ++i) {
        const Generator& gen = generators[i];
        int64_t xi = x % gen.prime_power;
        if (gen.prime_power % 2 == 0 && gen.prime_power >= 8 && gen.local_residue == gen.prime_power - 1) {
            // Sign generator of (Z/2^t)^*: x = (-1)^a 3^k; the companion <3>
            // generator is next in the list. a = 0 iff x lies in <3>.
            const Generator& g3 = generators[i + 1];
            const CyclicDlog& d = cyclic_dlog(gen.prime_power, g3.local_residue, g3.order);
            auto k = d.lookup(xi);
            if (k) {
                out[i] = 0;
                out[i + 1] = *k;
            } else {
                k = d.lookup(gen.prime_power - xi);
                if (!k) throw std::logic_error("dlog: 2-part decomposition failed");
                out[i] = 1;
                out[i + 1] = *k;
            }
            ++i;
            continue;
        }
        const CyclicDlog& d = cyclic_dlog(gen.prime_power, gen.local_residue, gen.order);
        auto k = d.lookup(xi);
        if (!k) throw std::logic_error("dlog: residue outside cyclic factor");
        out[i] = *k;
    }
    return out;
}

int64_t multiplicative_order(int64_t x, int64_t m) {
    if (m < 1) throw std::domain_error("multiplicative_order requires m >= 1");
    if (m == 1) return 1;
    x %= m;
    if (x < 0) x += m;
    if (std::gcd(x, m) != 1) throw std::domain_error("multiplicative_order: gcd(x, m) > 1");
    int64_t e = euler_phi(m);
    PrimeExponentMap pf = factorize(e);
    for (const auto& [qb, k] : pf.entries) {
        int64_t q = to_i64(qb);
        for (long i = 0; i < k; ++i) {
            if (pow_mod(x, e / q, m) == 1)
                e /= q;
            else
                break;
        }
    }
    return e;
}

}  // namespace ratiogroup
