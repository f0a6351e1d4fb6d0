#include "ratiogroup/dirichlet.hpp"

#include <numeric>
#include <sstream>

namespace ratiogroup {

DirichletCharacter DirichletCharacter::from_exponents(int64_t m, std::vector<int64_t> e) {
    const UnitGroup& ug = unit_group(m);
    if (e.size() != ug.generators.size())
        throw std::invalid_argument("exponent vector length does not match generator count");
    DirichletCharacter chi;
    chi.modulus_ = m;
    chi.exponents_.resize(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
        int64_t o = ug.generators[i].order;
        chi.exponents_[i] = ((e[i] % o) + o) % o;
    }
    chi.order_ = 1;
    for (size_t i = 0; i < e.size(); ++i) {
        int64_t o = ug.generators[i].order;
        chi.order_ = std::lcm(chi.order_, o / std::gcd(o, chi.exponents_[i]));
    }
    chi.steps_.resize(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
        int64_t o = ug.generators[i].order;
        int64_t g = std::gcd(o, chi.exponents_[i]);
        int64_t mi = o / g;  // order of the value at generator i
        chi.steps_[i] = static_cast<int64_t>(
            static_cast<__int128>(chi.exponents_[i] / g) % mi * (chi.order_ / mi) % chi.order_);
    }
    return chi;
}

DirichletCharacter DirichletCharacter::principal(int64_t m) {
    return from_exponents(m, std::vector<int64_t>(unit_group(m).generators.size(), 0));
}

std::optional<int64_t> DirichletCharacter::eval_exponent(int64_t n) const {
    n %= modulus_;
    if (n < 0) n += modulus_;
    if (modulus_ == 1) return 0;
    if (std::gcd(n, modulus_) != 1) return std::nullopt;
    std::vector<int64_t> t = unit_group(modulus_).dlog(n);
    __int128 acc = 0;
    for (size_t i = 0; i < t.size(); ++i) acc += static_cast<__int128>(t[i]) * steps_[i];
    return static_cast<int64_t>(acc % order_);
}

Cyclotomic DirichletCharacter::operator()(int64_t n) const {
    auto e = eval_exponent(n);
    if (!e) return Cyclotomic();
    return Cyclotomic::root(*e, order_);
}

DirichletCharacter DirichletCharacter::times(const DirichletCharacter& other) const {
    if (modulus_ != other.modulus_) throw std::invalid_argument("character moduli differ");
    std::vector<int64_t> e(exponents_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] + other.exponents_[i];
    return from_exponents(modulus_, e);
}

DirichletCharacter DirichletCharacter::conj() const {
    std::vector<int64_t> e(exponents_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = -exponents_[i];
    return from_exponents(modulus_, e);
}

std::string DirichletCharacter::label() const {
    std::ostringstream os;
    os << "m=" << modulus_ << ";e=";
    for (size_t i = 0; i < exponents_.size(); ++i) {
        if (i) os << ",";
        os << exponents_[i];
    }
    return os.str();
}

DirichletCharacter DirichletCharacter::parse_label(const std::string& text) {
    if (text.rfind("m=", 0) != 0) throw std::invalid_argument("bad character label: " + text);
    size_t semi = text.find(";e=");
    if (semi == std::string::npos) throw std::invalid_argument("bad character label: " + text);
    int64_t m = std::stoll(text.substr(2, semi - 2));
    std::vector<int64_t> e;
    std::istringstream is(text.substr(semi + 3));
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) e.push_back(std::stoll(tok));
    return from_exponents(m, e);
}

namespace {

// Conductor of a prime-power component, read off the component orders.
int64_t component_conductor(const DirichletCharacter& chi) {
    if (chi.is_principal()) return 1;
    int64_t m = chi.modulus();
    if (m % 2 == 0) {
        if (m == 4) return 4;
        // chi((-1)^a 3^k) = (-1)^{eps a} zeta^{e3 k}. Units congruent to 1 mod 4
        // are generated by -3 and 9; mod 2^c (c >= 3) by 3^{2^{c-2}} alone.
        int64_t eps = chi.exponents()[0];
        int64_t e3 = chi.exponents()[1];
        int64_t o3 = unit_group(m).generators[1].order;
        int64_t m3 = o3 / std::gcd(o3, e3);  // order of chi(3)
        if (eps == 1 && m3 == 2) return 4;
        return std::max<int64_t>(8, 4 * m3);
    }
    int64_t p = to_i64(factorize(m).entries.begin()->first);
    int64_t order = chi.order();
    int64_t ppart = 1;
    while (order % p == 0) {
        order /= p;
        ppart *= p;
    }
    return p * ppart;
}

}  // namespace

std::vector<DirichletCharacter> chi_decompose(const DirichletCharacter& chi) {
    const UnitGroup& ug = unit_group(chi.modulus());
    std::vector<DirichletCharacter> out;
    for (const auto& [pb, e] : factorize(chi.modulus()).entries) {
        int64_t p = to_i64(pb);
        int64_t pk = 1;
        for (long i = 0; i < e; ++i) pk *= p;
        std::vector<int64_t> local;
        for (size_t i = 0; i < ug.generators.size(); ++i)
            if (ug.generators[i].prime_power == pk) local.push_back(chi.exponents()[i]);
        out.push_back(DirichletCharacter::from_exponents(pk, local));
    }
    return out;
}

CharacterInvariants chi_invariants(const DirichletCharacter& chi) {
    int64_t cond = 1;
    for (const auto& comp : chi_decompose(chi)) cond *= component_conductor(comp);
    return {chi.order(), cond, cond == chi.modulus()};
}

std::vector<DirichletCharacter> enumerate_characters(int64_t m, std::optional<int64_t> order_divides) {
    const UnitGroup& ug = unit_group(m);
    std::vector<std::vector<int64_t>> choices(ug.generators.size());
    for (size_t i = 0; i < ug.generators.size(); ++i) {
        int64_t o = ug.generators[i].order;
        if (order_divides) {
            int64_t g = std::gcd(o, *order_divides);
            for (int64_t j = 0; j < g; ++j) choices[i].push_back(j * (o / g));
        } else {
            for (int64_t j = 0; j < o; ++j) choices[i].push_back(j);
        }
    }
    std::vector<DirichletCharacter> out;
    std::vector<size_t> idx(choices.size(), 0);
    while (true) {
        std::vector<int64_t> e(choices.size());
        for (size_t i = 0; i < choices.size(); ++i) e[i] = choices[i][idx[i]];
        out.push_back(DirichletCharacter::from_exponents(m, e));
        if (choices.empty()) break;
        size_t i = choices.size();
        bool rolled = true;
        while (i > 0) {
            --i;
            if (++idx[i] < choices[i].size()) {
                rolled = false;
                break;
            }
            idx[i] = 0;
        }
        if (rolled) break;
    }
    return out;
}

DirichletCharacter induce(const DirichletCharacter& chi, int64_t m) {
    if (m % chi.modulus() != 0) throw std::invalid_argument("induce: target modulus not a multiple");
    const UnitGroup& ug = unit_group(m);
    std::vector<int64_t> e(ug.generators.size());
    int64_t order = chi.order();
    for (size_t i = 0; i < ug.generators.size(); ++i) {
        auto k = chi.eval_exponent(ug.generators[i].residue);
        if (!k) throw std::invalid_argument("induce: generator not coprime to source modulus");
        int64_t o = ug.generators[i].order;
        if ((static_cast<__int128>(*k) * o) % order != 0)
            throw std::logic_error("induce: incompatible value order");
        e[i] = static_cast<int64_t>(static_cast<__int128>(*k) * o / order % o);
    }
    return DirichletCharacter::from_exponents(m, e);
}

Cyclotomic gauss_sum(const DirichletCharacter& chi) {
    int64_t m = chi.modulus();
    if (factorize(m).entries.size() != 1)
        throw std::invalid_argument("gauss_sum requires a prime-power modulus");
    if (!chi_invariants(chi).primitive)
        throw std::invalid_argument("gauss_sum requires a primitive character");
    int64_t n = std::lcm(chi.order(), m);
    std::map<int64_t, BigRat> raw;
    for (int64_t r = 0; r < m; ++r) {
        auto k = chi.eval_exponent(r);
        if (!k) continue;
        int64_t e = static_cast<int64_t>((static_cast<__int128>(*k) * (n / chi.order()) +
                                          static_cast<__int128>(r) * (n / m)) %
                                         n);
        raw[e] += 1;
    }
    return Cyclotomic::from_exponents(n, raw);
}

int64_t ramanujan_sum(int64_t m, int64_t x) {
    if (m < 1) throw std::domain_error("ramanujan_sum requires m >= 1");
    x %= m;
    if (x < 0) x += m;
    int64_t g = x == 0 ? m : std::gcd(m, x);
    std::vector<int64_t> divisors{1};
    for (const auto& [pb, e] : factorize(g).entries) {
        int64_t p = to_i64(pb);
        size_t base = divisors.size();
        int64_t pk = 1;
        for (long i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pk);
        }
    }
    int64_t out = 0;
    for (int64_t d : divisors) {
        int64_t q = m / d;
        int64_t mu = 1;
        for (const auto& [p, e] : factorize(q).entries) {
            if (e > 1) {
                mu = 0;
                break;
            }
            mu = -mu;
        }
        out += mu * d;
    }
    return out;
}

}  // namespace ratiogroup
