#pragma once

#include "qgenus/fp_linalg.hpp"
#include "qgenus/primes.hpp"
#include "qgenus/residue_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgenus {

struct QStarResult {
    int qstar = 0;
    NormConditionSubgroup common_subgroup;
};

QStarResult compute_qstar(const Radicand& rad);

// Hasse's count d - 3 + q*; throws consistency_error when negative.
int compute_t(const Radicand& rad, const QStarResult& qs);

// Exponent vectors over F_5 with respect to the S-unit basis
// (z, 1+z, pi_1, ..., pi_g, lambda).
using ExponentVector = fp::Vec;

struct SUnitBasis {
    std::vector<CycInt> elements;
    std::vector<std::string> names;
    int size() const { return static_cast<int>(elements.size()); }
    int lambda_index() const { return size() - 1; }
};

SUnitBasis s_unit_basis(const Radicand& rad);

// Vector of n itself, and of each rational prime p | n (both modulo fifth powers).
ExponentVector radicand_vector(const Radicand& rad);
ExponentVector rational_prime_vector(const Radicand& rad, std::int64_t p);

CycInt realize(const SUnitBasis& basis, const ExponentVector& v);

enum class GeneratorMethod { PrimePairing, KernelSearch };
std::string to_string(GeneratorMethod m);

struct GenusGenerator {
    ExponentVector exponents;
    CycInt value;       // a realisation; differs from prod B^v by a fifth power at most
    std::string label;  // human readable factorisation
};

struct GenusGenerators {
    std::vector<GenusGenerator> generators;
    GeneratorMethod method = GeneratorMethod::KernelSearch;
    int count() const { return static_cast<int>(generators.size()); }
};

// Basis of the S-unit exponent vectors that are lambda-units and fifth powers
// modulo lambda^5 (the Kummer generators of the genus field, before removing n).
fp::Mat genus_kernel(const Radicand& rad);

// General route: a kernel basis modulo n's vector, preferring rational
// generators first and then generators supported on primes fixed by z -> z^4.
GenusGenerators kernel_search_generators(const Radicand& rad);

// Prime-pairing route, valid only when every prime element is normalised.
// Qualifying primes first, then the products pi_first * pi_i^h; candidates
// dependent on earlier ones (modulo n) are dropped, so pairings go first.
GenusGenerators prime_pairing_generators(const Radicand& rad);

// Chooses the pairing route when applicable, cross-checks it against the
// kernel search, and verifies the count equals t.
GenusGenerators genus_generators(const Radicand& rad, int t);

struct C1Matrix {
    int rows = 0;
    int cols = 0;
    bool has_wild_column = false;
    fp::Mat entries;
    int extra_cols_possible = 0;
    int rank() const;
};

// Entries from a table of basis pairings (bilinearity).
C1Matrix build_c1(const Radicand& rad, const GenusGenerators& gens, const QStarResult& qs);
// Entries from symbols of the realised elements directly.
C1Matrix build_c1_direct(const Radicand& rad, const GenusGenerators& gens, const QStarResult& qs);

struct Interval {
    int lo = 0;
    int hi = 0;
    bool contains(int v) const { return lo <= v && v <= hi; }
    bool operator==(const Interval&) const = default;
};

enum class SpecialFamily {
    SevenMod25Products,       // all p = +-7 mod 25, r >= 2
    MixedRamifiedLambda,      // +-7 mod 25 primes and other +-2 mod 5 primes, n != +-1,+-7 mod 25
    MixedUnramifiedLambda,    // same, s >= 2 and n = +-1,+-7 mod 25
    SingleMinusOneMod5,       // n = p, p = -1 mod 5
    SevenMod25TimesMinusOne,  // n = p q, p = +-7 mod 25, q = -1 mod 5
};

std::string to_string(SpecialFamily f);

struct SpecialCase {
    SpecialFamily family;
    int r = 0;  // number of primes = +-7 mod 25
    int s = 0;  // number of other primes = +-2 mod 5
    int t = 0;
    int s1 = 0;
    Interval bounds;
    std::optional<int> nonstrong_floor;  // lower rank bound without strong ambiguity
    bool operator==(const SpecialCase&) const = default;
};

std::optional<SpecialCase> classify_special_case(const Radicand& rad);

struct RankReport {
    std::int64_t n = 0;
    int t = 0;
    int qstar = 0;
    int d = 0;
    int g = 0;
    bool lambda_ramifies = false;
    bool assume_strong = false;
    int s1_strong = 0;
    Interval s1_range_nonstrong;
    int lambda2_rank_strong = 0;
    Interval bounds_strong;
    Interval bounds_nonstrong;
    std::optional<SpecialCase> matched;

    const Interval& bounds() const { return assume_strong ? bounds_strong : bounds_nonstrong; }
    bool operator==(const RankReport&) const = default;
};

// Rank bounds 2t - s1 <= rank <= 4t - 3 s1.
Interval rank_bounds(int t, int s1);

struct GenusAnalysis {
    Radicand rad;
    QStarResult qs;
    int t = 0;
    GenusGenerators gens;
    C1Matrix c1;
    RankReport report;
};

GenusAnalysis analyze(std::int64_t n, bool assume_strong = false);
RankReport rank_report(std::int64_t n, bool assume_strong);

}  // namespace qgenus
