// Dirichlet characters: enumeration, evaluation, conductor, Gauss and
// Ramanujan sums. Characters are labelled by exponent vectors against the
// canonical generator basis of unit_group(m).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratiogroup/cyclotomic.hpp"

namespace ratiogroup {

class DirichletCharacter {
  public:
    DirichletCharacter() = default;
    static DirichletCharacter principal(int64_t modulus);
    static DirichletCharacter from_exponents(int64_t modulus, std::vector<int64_t> exponents);

    int64_t modulus() const { return modulus_; }
    const std::vector<int64_t>& exponents() const { return exponents_; }

    /// Order of the character in the dual group.
    int64_t order() const { return order_; }
    bool is_principal() const { return order_ == 1; }

    /// Value as an exponent of zeta_{order()}; nullopt when gcd(n, m) > 1.
    std::optional<int64_t> eval_exponent(int64_t n) const;
    /// Value as an exact cyclotomic number (zero allowed).
    Cyclotomic operator()(int64_t n) const;

    DirichletCharacter times(const DirichletCharacter& other) const;
    DirichletCharacter conj() const;

    /// Serialized as m=<modulus>;e=<e1,...,er>.
    std::string label() const;
    static DirichletCharacter parse_label(const std::string& text);

    bool operator==(const DirichletCharacter& other) const {
        return modulus_ == other.modulus_ && exponents_ == other.exponents_;
    }

  private:
    int64_t modulus_ = 1;
    std::vector<int64_t> exponents_;
    int64_t order_ = 1;
    std::vector<int64_t> steps_;  // exponent contribution per generator, mod order_
};

struct CharacterInvariants {
    int64_t order;
    int64_t conductor;
    bool primitive;
};

CharacterInvariants chi_invariants(const DirichletCharacter& chi);

/// All characters mod m whose order divides the filter (all of them when the
/// filter is absent), in lexicographic exponent-vector order.
std::vector<DirichletCharacter> enumerate_characters(int64_t m,
                                                     std::optional<int64_t> order_divides = {});

/// Prime-power components; their pointwise product equals chi on units.
std::vector<DirichletCharacter> chi_decompose(const DirichletCharacter& chi);

/// Lift a character to a larger modulus (values agree on units of m).
DirichletCharacter induce(const DirichletCharacter& chi, int64_t m);

/// Gauss sum of a primitive character to a prime-power modulus.
Cyclotomic gauss_sum(const DirichletCharacter& chi);

/// Ramanujan sum c_m(x) via the Moebius formula.
int64_t ramanujan_sum(int64_t m, int64_t x);

}  // namespace ratiogroup
