#pragma once

#include "qgenus/cyc_int.hpp"
#include "qgenus/residue_field.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qgenus {

enum class SplittingType { RamifiedLambda, Inert, SplitTwo, SplitFour };

SplittingType splitting_type(std::int64_t p);
std::string to_string(SplittingType s);

struct FPrime {
    CycInt element;
    std::int64_t p = 0;
    ResidueField rf;
    bool normalized = false;  // element is congruent to a rational integer mod 5
};

// Largest box half-width tried by the norm-p search for p = 1 mod 5.
inline constexpr int kMaxPrimeSearchBox = 64;

// Primes above p != 5, one per residue field, in root_index order. Results
// are memoised process-wide behind a mutex.
std::vector<FPrime> primes_above(std::int64_t p);

// Replaces pi by the first unit multiple, in canonical_units() order, that is
// congruent to a rational integer mod 5, if one exists. Since +1 comes first,
// elements already of that shape are kept.
FPrime normalize(const FPrime& pi);

bool is_congruent_to_rational_mod5(const CycInt& y);

// conj(pi, 4) is an associate of pi, which for prime elements is the same as
// having an associate of the shape a z^2 + a z^3 + b.
bool is_sigma2_fixed(const CycInt& pi);

// Integer factorisation by trial division, primes ascending.
std::vector<std::pair<std::int64_t, int>> factor_integer(std::int64_t n);

struct RadicandPrime {
    FPrime prime;
    int exponent = 0;
};

struct Radicand {
    std::int64_t n = 0;
    std::vector<std::pair<std::int64_t, int>> rational_factors;
    std::vector<RadicandPrime> primes;  // sorted by p, then root_index
    int v5 = 0;                         // exponent of 5 in n
    int e_lambda = 0;                   // 4 * v5 reduced mod 5
    int g = 0;
    bool lambda_ramifies = false;
    int d = 0;
    CycInt unit;             // exact unit with unit * lambda^(4 v5) * prod pi^e = n
    UnitClass unit_class;    // class of `unit` modulo fifth powers (sign absorbed)

    CycInt reconstruct() const;
};

Radicand factor_radicand(std::int64_t n);

// (a, b) in F_5^2 with u = z^a (1+z)^b times a fifth power, for a unit u.
UnitClass unit_class_mod_fifth_powers(const CycInt& u);

}  // namespace qgenus
