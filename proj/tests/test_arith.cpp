#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "ratiogroup/arith.hpp"

using namespace ratiogroup;

TEST_CASE("factorize basics") {
    CHECK(factorize(1).entries.empty());

    PrimeExponentMap f = factorize(6750);
    CHECK(f.entries == std::map<BigInt, long>{{2, 1}, {3, 3}, {5, 3}});

    // delta of the (5n+1)/(5n-1) family: 2^4 * 5^9.
    PrimeExponentMap d = factorize(31250000);
    CHECK(d.entries == std::map<BigInt, long>{{2, 4}, {5, 9}});

    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize beyond 64 bits") {
    BigInt m61 = (BigInt(1) << 61) - 1;  // Mersenne prime
    CHECK(is_prime(m61));
    BigInt n = m61 * 6;
    PrimeExponentMap f = factorize(n);
    CHECK(f.entries == std::map<BigInt, long>{{2, 1}, {3, 1}, {m61, 1}});
    CHECK(f.reconstruct_integer() == n);

    BigInt big = BigInt("10000000000000000000000000000000000");  // 10^34 = 2^34 5^34
    PrimeExponentMap g = factorize(big);
    CHECK(g.entries == std::map<BigInt, long>{{2, 34}, {5, 34}});

    // Semiprime with both factors above the trial-division bound.
    BigInt p1 = 1000003, p2 = 1000033;
    PrimeExponentMap h = factorize(p1 * p2);
    CHECK(h.entries == std::map<BigInt, long>{{p1, 1}, {p2, 1}});
}

TEST_CASE("factorize reconstructs n exactly for n <= 1e5") {
    for (int64_t n = 1; n <= 100000; ++n) {
        CHECK(factorize(n).reconstruct_integer() == n);
    }
}

TEST_CASE("crt_solve") {
    auto [r1, m1] = crt_solve({{1, 3}, {2, 5}});
    CHECK(r1 == 7);
    CHECK(m1 == 15);

    auto [r2, m2] = crt_solve({{0, 4}, {3, 27}, {2, 25}});
    CHECK(r2 == 2352);
    CHECK(m2 == 2700);

    CHECK_THROWS_AS(crt_solve({{1, 4}, {1, 6}}), std::invalid_argument);
}

TEST_CASE("crt_solve random systems satisfy every congruence") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        // Build pairwise coprime moduli with product <= 1e9.
        std::vector<std::pair<BigInt, BigInt>> sys;
        int64_t prod = 1;
        std::vector<int64_t> pool = {4, 9, 25, 49, 11, 13, 17, 19, 23, 27, 29, 31, 8, 5, 3, 2, 7};
        std::shuffle(pool.begin(), pool.end(), rng);
        for (int64_t m : pool) {
            bool coprime = true;
            for (auto& [r, mm] : sys)
                if (boost::multiprecision::gcd(BigInt(m), mm) != 1) coprime = false;
            if (!coprime) continue;
            if (prod > 1'000'000'000 / m) break;
            prod *= m;
            sys.push_back({static_cast<int64_t>(rng() % m), m});
        }
        auto [r, m] = crt_solve(sys);
        CHECK(m == prod);
        for (auto& [ri, mi] : sys) CHECK(r % mi == ri);
    }
}

TEST_CASE("unit_group canonical bases") {
    const UnitGroup& g5 = unit_group(5);
    REQUIRE(g5.generators.size() == 1);
    CHECK(g5.generators[0].residue == 2);
    CHECK(g5.generators[0].order == 4);

    const UnitGroup& g16 = unit_group(16);
    REQUIRE(g16.generators.size() == 2);
    CHECK(g16.generators[0].residue == 15);
    CHECK(g16.generators[0].order == 2);
    CHECK(g16.generators[1].residue == 3);
    CHECK(g16.generators[1].order == 4);

    CHECK(unit_group(2).generators.empty());
    CHECK(unit_group(1).generators.empty());
}

TEST_CASE("unit_group order product and coverage up to 3000") {
    for (int64_t m = 1; m <= 3000; ++m) {
        const UnitGroup& ug = unit_group(m);
        int64_t prod = 1;
        for (auto& g : ug.generators) prod *= g.order;
        CHECK(prod == euler_phi(m));
        CHECK(ug.phi == prod);
        if (m % 97 == 0 || m <= 64) {
            // Exhaustive coverage on a subset: the generated set hits phi(m) residues.
            std::set<int64_t> seen;
            std::vector<int64_t> exps(ug.generators.size(), 0);
            for (int64_t idx = 0;; ++idx) {
                __int128 v = 1;
                for (size_t i = 0; i < exps.size(); ++i)
                    v = v * pow_mod(ug.generators[i].residue, exps[i], m) % m;
                seen.insert(static_cast<int64_t>(v % m));
                size_t j = 0;
                while (j < exps.size() && ++exps[j] == ug.generators[j].order) exps[j++] = 0;
                if (j == exps.size()) break;
                if (exps.empty()) break;
            }
            CHECK(static_cast<int64_t>(seen.size()) == euler_phi(m));
        }
    }
}

TEST_CASE("dlog round trip on assorted moduli") {
    for (int64_t m : {5, 16, 27, 125, 15, 240, 9975, 1953125}) {
        const UnitGroup& ug = unit_group(m);
        for (int64_t x = 1; x < std::min<int64_t>(m, 500); ++x) {
            if (std::gcd(x, m) != 1) continue;
            auto e = ug.dlog(x);
            __int128 v = 1;
            for (size_t i = 0; i < e.size(); ++i) v = v * pow_mod(ug.generators[i].residue, e[i], m) % m;
            CHECK(static_cast<int64_t>(v) == x % m);
        }
    }
}

TEST_CASE("dlog exponent vectors are unique: exhaustive on small moduli") {
    for (int64_t m : {7, 8, 16, 45, 96, 625, 9975}) {
        const UnitGroup& ug = unit_group(m);
        std::set<std::vector<int64_t>> seen;
        int64_t units = 0;
        for (int64_t x = 1; x < m; ++x) {
            if (std::gcd(x, m) != 1) continue;
            ++units;
            seen.insert(ug.dlog(x));
        }
        if (m == 1) units = 1;
        CHECK(static_cast<int64_t>(seen.size()) == units);
        CHECK(units == euler_phi(m));
    }
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(3, 5) == 4);  // 3 is a primitive root mod 5
    CHECK(multiplicative_order(1, 7) == 1);
    CHECK(multiplicative_order(7, 16) == 2);
    CHECK_THROWS_AS(multiplicative_order(10, 15), std::domain_error);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        int64_t m = 2 + static_cast<int64_t>(rng() % 4000);
        int64_t x = 1 + static_cast<int64_t>(rng() % (m - 1));
        if (std::gcd(x, m) != 1) continue;
        int64_t e = multiplicative_order(x, m);
        CHECK(euler_phi(m) % e == 0);
        CHECK(pow_mod(x, e, m) == 1);
        for (int64_t d = 1; d < e && d <= 50; ++d) CHECK(pow_mod(x, d, m) != 1);
    }
}

TEST_CASE("3 is a primitive root mod 5^k") {
    int64_t pk = 5;
    for (int k = 1; k <= 9; ++k) {
        CHECK(multiplicative_order(3, pk) == euler_phi(pk));
        pk *= 5;
    }
}
