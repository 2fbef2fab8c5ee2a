#include "qgenus/descent.hpp"

#include "qgenus/errors.hpp"

#include <algorithm>

namespace qgenus {

namespace {

constexpr int P = 5;

bool fifth_power_class_mod25(std::int64_t n)
{
    const int r = static_cast<int>(n % 25);
    return r == 1 || r == 7 || r == 18 || r == 24;
}

}  // namespace

ShapeCounts generator_shape_counts(const Radicand& rad, const GenusGenerators& gens)
{
    const int dim = rad.g + 3;
    fp::Mat rational, shaped;
    for (const auto& [p, e] : rad.rational_factors) rational.push_back(rational_prime_vector(rad, p));
    shaped = rational;
    for (int k = 0; k < 2; ++k) {
        fp::Vec e(dim, 0);
        e[k] = 1;
        shaped.push_back(e);
    }
    for (int j = 0; j < rad.g; ++j)
        if (is_sigma2_fixed(rad.primes[j].prime.element)) {
            fp::Vec e(dim, 0);
            e[2 + j] = 1;
            shaped.push_back(e);
        }
    ShapeCounts c;
    for (const auto& g : gens.generators) {
        if (fp::in_span(rational, g.exponents, P)) ++c.w;
        if (fp::in_span(shaped, g.exponents, P)) ++c.r;
    }
    return c;
}

std::string to_string(CyclicPattern p)
{
    switch (p) {
    case CyclicPattern::PrimePowerPm2Mod5: return "p^a with p = +-2 mod 5";
    case CyclicPattern::TwoOtherPm2UnramifiedLambda: return "q1^a q2^b with q_i = +-2 mod 5, not +-7 mod 25; N = +-1,+-7 mod 25";
    case CyclicPattern::PrimePowerMinus1Mod5: return "p^a with p = -1 mod 5";
    case CyclicPattern::TwoPm7Mod25: return "p1^a p2^b with p_i = +-7 mod 25";
    case CyclicPattern::Pm7TimesOtherRamifiedLambda: return "p^a q^b with p = +-7 mod 25, q = +-2 mod 5 not +-7 mod 25; N != +-1,+-7 mod 25";
    case CyclicPattern::TwoOtherPm2RamifiedLambda: return "q1^a q2^b with q_i = +-2 mod 5, not +-7 mod 25; N != +-1,+-7 mod 25";
    case CyclicPattern::TwoPm7TimesOtherUnramifiedLambda: return "p1^a p2^b q^c with p_i = +-7 mod 25, q = +-2 mod 5 not +-7 mod 25; N = +-1,+-7 mod 25";
    case CyclicPattern::Pm7TimesTwoOtherUnramifiedLambda: return "p^a q1^b q2^c with p = +-7 mod 25, q_i = +-2 mod 5 not +-7 mod 25; N = +-1,+-7 mod 25";
    case CyclicPattern::ThreeOtherPm2UnramifiedLambda: return "q1 q2 q3 (any exponents) with q_i = +-2 mod 5, not +-7 mod 25; N = +-1,+-7 mod 25";
    case CyclicPattern::Minus1Mod5TimesPm7Mod25: return "p^a q^b with p = -1 mod 5, q = +-7 mod 25";
    }
    return "?";
}

std::optional<CyclicPattern> classify_cyclic_pattern(std::int64_t N)
{
    if (N < 2) throw invalid_input("classify_cyclic_pattern: N must be >= 2");
    int pm7 = 0, other = 0, minus1 = 0;
    for (const auto& [p, e] : factor_integer(N)) {
        if (e >= 5) throw invalid_input("classify_cyclic_pattern: N must be fifth-power free");
        const int p25 = static_cast<int>(p % 25), p5 = static_cast<int>(p % 5);
        if (p == 5 || p5 == 1) return std::nullopt;
        if (p25 == 7 || p25 == 18)
            ++pm7;
        else if (p5 == 2 || p5 == 3)
            ++other;
        else
            ++minus1;
    }
    const bool unram = fifth_power_class_mod25(N);
    const int total = pm7 + other + minus1;

    if (minus1 > 0) {
        if (minus1 == 1 && total == 1) return CyclicPattern::PrimePowerMinus1Mod5;
        if (minus1 == 1 && pm7 == 1 && total == 2) return CyclicPattern::Minus1Mod5TimesPm7Mod25;
        return std::nullopt;
    }
    if (total == 1) return CyclicPattern::PrimePowerPm2Mod5;
    if (pm7 == 2 && other == 0) return CyclicPattern::TwoPm7Mod25;  // such N is always = +-1,+-7 mod 25
    if (pm7 == 0 && other == 2) return unram ? CyclicPattern::TwoOtherPm2UnramifiedLambda : CyclicPattern::TwoOtherPm2RamifiedLambda;
    if (pm7 == 1 && other == 1 && !unram) return CyclicPattern::Pm7TimesOtherRamifiedLambda;
    if (pm7 == 2 && other == 1 && unram) return CyclicPattern::TwoPm7TimesOtherUnramifiedLambda;
    if (pm7 == 1 && other == 2 && unram) return CyclicPattern::Pm7TimesTwoOtherUnramifiedLambda;
    if (pm7 == 0 && other == 3 && unram) return CyclicPattern::ThreeOtherPm2UnramifiedLambda;
    return std::nullopt;
}

DescentReport descent_report(const GenusAnalysis& a, bool assume_strong, std::optional<int> known_sk_rank)
{
    const Radicand& rad = a.rad;
    const RankReport& rr = a.report;
    DescentReport d;
    d.n = rad.n;
    d.t = a.t;
    d.assume_strong = assume_strong;
    d.known_sk_rank = known_sk_rank;

    // Shape counts are taken on the shape-preferring kernel basis.
    const ShapeCounts sc = generator_shape_counts(rad, kernel_search_generators(rad));
    d.w = sc.w;
    d.r = sc.r;
    if (!(0 <= d.w && d.w <= d.r && d.r <= d.t)) throw consistency_error("descent: shape counts out of order");
    d.plus_part_bound = d.t - d.r;

    d.real_prime_hypothesis = rad.v5 == 0;
    for (const auto& [p, e] : rad.rational_factors)
        if (p % 5 == 1) d.real_prime_hypothesis = false;
    if (d.real_prime_hypothesis) {
        if (d.r != d.t) throw consistency_error("descent: generators not all of rational/real shape under the prime hypothesis");
        d.plus_part_bound = 0;
    }

    const Interval range = assume_strong ? Interval{rr.s1_strong, rr.s1_strong} : rr.s1_range_nonstrong;
    for (int s = range.lo; s <= range.hi; ++s) {
        if (known_sk_rank && !rank_bounds(d.t, s).contains(*known_sk_rank)) continue;
        d.s1_candidates.push_back(s);
    }
    if (d.s1_candidates.empty())
        throw consistency_error("descent: no s1 value is consistent with the given rank of S_K for n = " +
                                std::to_string(rad.n));

    d.sl_upper = 0;
    d.sl_lower = d.t;
    d.sl_lower_if_s2_zero = d.t;
    d.t_equals_s1 = true;
    for (int s : d.s1_candidates) {
        int upper = d.plus_part_bound + (d.t - s);
        if (s == d.t) upper = d.plus_part_bound;  // rank S_L equals the plus part exactly
        else d.t_equals_s1 = false;
        d.sl_upper = std::max(d.sl_upper, std::min(upper, 2 * d.t - s));
        // With the prime hypothesis, t - s1 - s2 <= rank S_L and s2 <= t - s1.
        const int lower_opt = d.real_prime_hypothesis ? d.t - s : 0;
        d.sl_lower = std::min(d.sl_lower, 0);
        d.sl_lower_if_s2_zero = std::min(d.sl_lower_if_s2_zero, lower_opt);
    }
    if (d.sl_lower > d.sl_upper) throw consistency_error("descent: empty S_L interval");
    d.cyclic_pattern = classify_cyclic_pattern(rad.n);
    return d;
}

DescentReport descent_report(std::int64_t n, bool assume_strong, std::optional<int> known_sk_rank)
{
    return descent_report(analyze(n, assume_strong), assume_strong, known_sk_rank);
}

}  // namespace qgenus
