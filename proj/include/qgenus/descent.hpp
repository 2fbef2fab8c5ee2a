#pragma once

#include "qgenus/genus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgenus {

// w: generators that are rational integers (up to fifth powers).
// r: generators whose prime support consists of rational primes and primes
//    fixed by z -> z^4 (shape a z^2 + a z^3 + b up to units). Unit factors
//    are ignored.
struct ShapeCounts {
    int w = 0;
    int r = 0;
};

ShapeCounts generator_shape_counts(const Radicand& rad, const GenusGenerators& gens);

// Factorisation patterns of N for which the 5-class group of Q(N^(1/5)) is
// known to be trivial or cyclic.
enum class CyclicPattern {
    PrimePowerPm2Mod5,                // p^a, p = +-2 mod 5
    TwoOtherPm2UnramifiedLambda,      // q1^a q2^b, N = +-1,+-7 mod 25
    PrimePowerMinus1Mod5,             // p^a, p = -1 mod 5
    TwoPm7Mod25,                      // p1^a p2^b, p_i = +-7 mod 25
    Pm7TimesOtherRamifiedLambda,      // p^a q^b, N != +-1,+-7 mod 25
    TwoOtherPm2RamifiedLambda,        // q1^a q2^b, N != +-1,+-7 mod 25
    TwoPm7TimesOtherUnramifiedLambda, // p1 p2 q, N = +-1,+-7 mod 25
    Pm7TimesTwoOtherUnramifiedLambda, // p q1 q2, N = +-1,+-7 mod 25
    ThreeOtherPm2UnramifiedLambda,    // q1 q2 q3, N = +-1,+-7 mod 25
    Minus1Mod5TimesPm7Mod25,          // p^a q^b, p = -1 mod 5, q = +-7 mod 25
};

std::string to_string(CyclicPattern p);
std::optional<CyclicPattern> classify_cyclic_pattern(std::int64_t N);

struct DescentReport {
    std::int64_t n = 0;
    int t = 0;
    int w = 0;
    int r = 0;
    int plus_part_bound = 0;          // bound on rank (S_K / lambda S_K)^+
    bool real_prime_hypothesis = false;  // every prime = +-2 or -1 mod 5, 5 not dividing n
    bool assume_strong = false;
    std::optional<int> known_sk_rank;
    std::vector<int> s1_candidates;   // s1 values consistent with branch and known rank
    bool t_equals_s1 = false;         // exact case: rank S_L = rank of the plus part
    int sl_upper = 0;
    int sl_lower = 0;                 // pessimistic, over every unknown s2
    int sl_lower_if_s2_zero = 0;      // valid under the prime hypothesis only
    std::optional<CyclicPattern> cyclic_pattern;
    bool operator==(const DescentReport&) const = default;
};

DescentReport descent_report(const GenusAnalysis& a, bool assume_strong,
                             std::optional<int> known_sk_rank = std::nullopt);
DescentReport descent_report(std::int64_t n, bool assume_strong,
                             std::optional<int> known_sk_rank = std::nullopt);

}  // namespace qgenus
