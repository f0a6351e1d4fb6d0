#include "ratiogroup/family.hpp"

#include <limits>
#include <numeric>

namespace ratiogroup {

std::vector<int64_t> RatioFamily::torsion_primes() const {
    std::vector<int64_t> out;
    for (const auto& [p, e] : delta_primes)
        if (gcd_a1A1 % p != 0) out.push_back(p);
    return out;
}

namespace {

// Scan bound guard: delta = 2(aA|D|)^3 must fit comfortably in int64.
constexpr int64_t kMaxCoefficientProduct = 1'600'000;

RatioFamily::Case classify(const RatioFamily& f) {
    int64_t m = f.a * f.A * std::abs(f.delta);
    int64_t scan = m % 2 == 0 ? m : 2 * m;
    int64_t rad = 2 * m;  // coprimality target: every prime of delta
    for (int64_t s = f.k; s < f.k + scan; ++s) {
        BigInt prod = BigInt(f.num(s)) * f.den(s);
        if (boost::multiprecision::gcd(prod, BigInt(rad)) == 1) return RatioFamily::Case::first;
    }
    return RatioFamily::Case::second;
}

}  // namespace

RatioFamily normalize_family(int64_t a, int64_t b, int64_t A, int64_t B, int64_t k) {
    if (a <= 0 || A <= 0) throw std::domain_error("normalize_family requires a > 0 and A > 0");
    if (k < 1) throw std::domain_error("normalize_family requires k >= 1");
    RatioFamily f;
    f.a = a;
    f.b = b;
    f.A = A;
    f.B = B;
    f.delta = a * B - A * b;
    if (f.delta == 0) throw std::domain_error("degenerate family: aB - Ab = 0");
    // Raise k until both linear forms are positive.
    f.k = k;
    while (f.a * f.k + f.b <= 0 || f.A * f.k + f.B <= 0) ++f.k;

    f.alpha = std::gcd(a, b);
    f.beta = std::gcd(A, B);
    if (f.alpha == 0) f.alpha = a;  // b == 0
    if (f.beta == 0) f.beta = A;    // B == 0
    f.a1 = a / f.alpha;
    f.b1 = b / f.alpha;
    f.A1 = A / f.beta;
    f.B1 = B / f.beta;
    f.delta1 = f.a1 * f.B1 - f.A1 * f.b1;
    if (f.delta != f.alpha * f.beta * f.delta1)
        throw std::logic_error("Delta decomposition failed");
    f.rho = BigRat(f.alpha, f.beta);
    f.rho_factored = factorize_rational(f.rho);
    f.gcd_a1A1 = std::gcd(f.a1, f.A1);
    for (const auto& [p, e] : f.rho_factored.entries)
        if (f.gcd_a1A1 % to_i64(p) == 0) f.rho0.entries[p] = e;

    int64_t coeff = a * A * std::abs(f.delta);
    if (coeff > kMaxCoefficientProduct)
        throw std::overflow_error("family too large: a*A*|Delta| above desk-scale bound");
    f.delta_mod = 2 * coeff * coeff * coeff;
    f.torsion_exponent = 2 * euler_phi(f.delta_mod);
    for (const auto& [p, e] : factorize(f.delta_mod).entries)
        f.delta_primes.emplace_back(to_i64(p), e);
    f.case_tag = classify(f);
    return f;
}

CoprimeClass coprime_class(const RatioFamily& f) {
    int64_t m = f.a * f.A * std::abs(f.delta);
    CoprimeClass out;
    if (f.case_tag == RatioFamily::Case::first) {
        out.first_case = true;
        out.modulus = m;
        int64_t scan = m % 2 == 0 ? m : 2 * m;
        for (int64_t s = f.k; s < f.k + scan; ++s) {
            BigInt prod = BigInt(f.num(s)) * f.den(s);
            if (boost::multiprecision::gcd(prod, BigInt(2 * m)) == 1) {
                out.s = s % m;
                return out;
            }
        }
        throw std::logic_error("first-case family lost its coprime class");
    }
    out.first_case = false;
    int64_t modd = m;
    while (modd % 2 == 0) modd /= 2;
    int64_t period = 4 * modd;
    out.n1_modulus = out.n2_modulus = period;
    bool have1 = false, have2 = false;
    for (int64_t n = f.k; n < f.k + period && !(have1 && have2); ++n) {
        int64_t u = f.num1(n), v = f.den1(n);
        if (!have1 && u % 2 == 0 && u % 4 != 0 && std::gcd(u / 2, 2 * m) == 1 &&
            std::gcd(v, 2 * m) == 1) {
            out.n1 = n % period;
            have1 = true;
        }
        if (!have2 && v % 2 == 0 && v % 4 != 0 && std::gcd(v / 2, 2 * m) == 1 &&
            std::gcd(u, 2 * m) == 1) {
            out.n2 = n % period;
            have2 = true;
        }
    }
    if (!have1 || !have2) throw std::logic_error("family violates Step 1 dichotomy");
    return out;
}

namespace {

// Strips every delta-prime from n, returning (cofactor, per-prime valuations).
std::pair<BigInt, std::map<int64_t, int64_t>> split_delta_part(const RatioFamily& f, BigInt n) {
    std::map<int64_t, int64_t> vals;
    for (const auto& [q, aq] : f.delta_primes) {
        int64_t v = 0;
        while (n % q == 0) {
            n /= q;
            ++v;
        }
        if (v) vals[q] = v;
    }
    return {n, vals};
}

}  // namespace

CaptureResult capture_class(const RatioFamily& f, int64_t p, int64_t e, Side side) {
    bool p_divides_delta = false;
    for (const auto& [q, a] : f.delta_primes) p_divides_delta |= (q == p);
    if (!p_divides_delta) throw std::invalid_argument("capture_class: prime does not divide delta");
    if (f.gcd_a1A1 % p == 0)
        throw std::invalid_argument("capture_class: prime divides gcd(a1, A1)");
    if (e < 1) throw std::invalid_argument("capture_class: exponent must be positive");

    int64_t u = side == Side::numerator ? f.a1 : f.A1;
    int64_t v = side == Side::numerator ? f.b1 : f.B1;
    if (u % p == 0)
        return {std::nullopt, "prime divides the leading coefficient; the form is never divisible"};

    // Exact p-power: u*n + v = p^e (mod p^{e+1}), making the cofactor 1 mod p.
    BigInt M = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e + 1));
    BigInt target = ((M / p - v) % M + M) % M;
    BigInt n0 = target * inv_mod_big(u % M, M) % M;
    while (n0 < f.k) n0 += M;

    // Keep the other delta primes off both reduced forms where possible.
    for (const auto& [q, aq] : f.delta_primes) {
        if (q == p) continue;
        bool num_can = f.a1 % q != 0;  // whether q can divide the form at all
        bool den_can = f.A1 % q != 0;
        if (!num_can && !den_can) continue;
        int64_t best_j = -1;
        int64_t best_weight = std::numeric_limits<int64_t>::max();
        for (int64_t j = 0; j < q; ++j) {
            BigInt n = n0 + BigInt(j) * M;
            bool num_hit = (f.a1 * (n % q) + f.b1) % q == 0;
            bool den_hit = (f.A1 * (n % q) + f.B1) % q == 0;
            if (!num_hit && !den_hit) {
                best_j = j;
                break;
            }
            // Fallback (q = 2 in second-case families): least total valuation.
            int64_t w = valuation(BigInt(f.a1) * n + f.b1, q) + valuation(BigInt(f.A1) * n + f.B1, q);
            if (w < best_weight) {
                best_weight = w;
                best_j = j;
            }
        }
        n0 += BigInt(best_j) * M;
        M *= q;
    }

    // Freeze each prime's exact valuations and the cofactor classes mod q^aq.
    // The form changes by a1*M along the class, so v_q(M) >= c + aq + 1 - v_q(a1)
    // pins both the exact power q^c and the cofactor mod q^aq.
    for (const auto& [q, aq] : f.delta_primes) {
        int64_t cnum = valuation(BigInt(f.a1) * n0 + f.b1, q);
        int64_t cden = valuation(BigInt(f.A1) * n0 + f.B1, q);
        int64_t va1 = f.a1 % q == 0 ? valuation_i64(f.a1, q) : 0;
        int64_t vA1 = f.A1 % q == 0 ? valuation_i64(f.A1, q) : 0;
        int64_t need = std::max({cnum + aq + 1 - va1, cden + aq + 1 - vA1, int64_t(0)});
        int64_t have = valuation(M, q);
        for (int64_t i = have; i < need; ++i) M *= q;
    }

    CaptureClass out;
    out.prime = p;
    out.exponent = e;
    out.side = side;
    out.n0 = n0;
    out.modulus = M;

    BigInt num = BigInt(f.a1) * n0 + f.b1;
    BigInt den = BigInt(f.A1) * n0 + f.B1;
    auto [r1, vnum] = split_delta_part(f, num);
    auto [r2, vden] = split_delta_part(f, den);
    out.r1 = r1;
    out.r2 = r2;
    for (int64_t q : f.torsion_primes()) {
        int64_t d = (vnum.count(q) ? vnum[q] : 0) - (vden.count(q) ? vden[q] : 0);
        if (d != 0) out.torsion_exponents[q] = d;
    }

    // The valuation profile must be constant along the class.
    for (int t = 1; t <= 2; ++t) {
        BigInt n = n0 + t * M;
        auto [rr1, v1] = split_delta_part(f, BigInt(f.a1) * n + f.b1);
        auto [rr2, v2] = split_delta_part(f, BigInt(f.A1) * n + f.B1);
        if (v1 != vnum || v2 != vden) throw std::logic_error("capture_class: profile not frozen");
    }
    return {out, ""};
}

bool ratio_congruent(int64_t u1, int64_t v1, int64_t u2, int64_t v2, int64_t n, int64_t nprime,
                     int64_t s) {
    if (s < 1) throw std::domain_error("ratio_congruent requires s >= 1");
    BigInt d2n = BigInt(u2) * n + v2;
    BigInt d2np = BigInt(u2) * nprime + v2;
    if (boost::multiprecision::gcd(d2n * d2np, BigInt(s)) != 1)
        throw std::domain_error("ratio_congruent: denominators share a factor with s");
    BigInt lhs = (BigInt(u1) * n + v1) * d2np - (BigInt(u1) * nprime + v1) * d2n;
    bool direct = lhs % s == 0;
    BigInt delta0 = BigInt(u1) * v2 - BigInt(u2) * v1;
    bool via_delta = (delta0 * (BigInt(n) - nprime)) % s == 0;
    if (direct != via_delta) throw std::logic_error("multiplicity-lemma decision mismatch");
    return direct;
}

RatioFamily reduce_pair(int64_t a, int64_t b, int64_t A, int64_t B) {
    if (b <= 0 || B <= 0) throw std::domain_error("reduce_pair requires b > 0 and B > 0");
    if (a * B - A * b == 0) throw std::domain_error("degenerate family: aB - Ab = 0");
    int64_t Ab = A * b;
    int64_t aB1 = a * B + 1;
    return normalize_family(Ab * aB1, 1, Ab, 1);
}

}  // namespace ratiogroup
