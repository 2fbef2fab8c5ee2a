#pragma once

#include "qgenus/cyc_int.hpp"

#include <array>
#include <cstdint>
#include <gmpxx.h>
#include <vector>

namespace qgenus {

bool is_prime(std::int64_t n);

// Multiplicative order of p modulo 5 (1, 2 or 4); p must not be 5.
int order_mod5(std::int64_t p);

// F_p[x]/(g) for a monic irreducible factor g of x^4+x^3+x^2+x+1 mod p.
// Elements are coefficient arrays; only the first f entries are used.
class ResidueField {
public:
    using Elem = std::array<std::int64_t, 4>;

    std::int64_t p() const { return p_; }
    int f() const { return f_; }
    int root_index() const { return root_index_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }  // low to high, monic
    const Elem& zeta_image() const { return zeta_powers_[1]; }
    const Elem& zeta_power(int e) const { return zeta_powers_[((e % 5) + 5) % 5]; }
    mpz_class order() const;  // q = p^f

    Elem zero() const { return Elem{}; }
    Elem one() const { return from_int(1); }
    Elem from_int(std::int64_t v) const;
    Elem from_mpz(const mpz_class& v) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, const mpz_class& e) const;
    bool is_zero(const Elem& a) const;

    friend ResidueField build_residue_field(std::int64_t p, int root_index);

private:
    std::int64_t p_ = 0;
    int f_ = 0;
    int root_index_ = 0;
    std::vector<std::int64_t> modulus_;
    std::array<Elem, 5> zeta_powers_{};
    mpz_class char_exponent_;  // (q - 1) / 5

    friend int quintic_character(const ResidueField& rf, const Elem& a);
};

// root_index ranges over 0 .. 4/f - 1. The factors of the cyclotomic
// polynomial are ordered by their constant data: for f = 1 the root r
// ascending, for f = 2 the trace s of g = x^2 - s x + 1 ascending.
ResidueField build_residue_field(std::int64_t p, int root_index);
int residue_field_count(std::int64_t p);

ResidueField::Elem reduce(const CycInt& y, const ResidueField& rf);

// The exponent e in F_5 with a^((q-1)/5) = zeta_image^e. Throws for a = 0.
int quintic_character(const ResidueField& rf, const ResidueField::Elem& a);

// Pairs (i, j) in F_5^2 with z^i (1+z)^j a fifth power in the residue field.
struct NormConditionSubgroup {
    std::vector<std::array<int, 2>> basis;
    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(int i, int j) const;
};

NormConditionSubgroup norm_condition_subgroup(const ResidueField& rf);

// The two characters (chi(z), chi(1+z)) that define the subgroup above.
std::array<int, 2> unit_characters(const ResidueField& rf);

}  // namespace qgenus
