#include "properties.hpp"

#include "qgenus/hilbert_symbol.hpp"
#include "qgenus/primes.hpp"
#include "test_support.hpp"

namespace qgenus::test {

namespace {

void record(PropertyResult& r, bool ok, const std::string& what)
{
    ++r.cases;
    if (ok) return;
    if (r.failures++ == 0) r.first_failure = what;
}

std::vector<FPrime> prime_pool()
{
    std::vector<FPrime> out;
    for (std::int64_t p : {2, 3, 7, 11, 13, 19, 29, 31, 41}) {
        auto ps = primes_above(p);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

}  // namespace

PropertyResult symbol_bilinearity(int cases, std::uint64_t seed)
{
    PropertyResult r{"symbol bilinearity"};
    std::mt19937_64 rng(seed);
    const auto pool = prime_pool();
    for (int i = 0; i < cases; ++i) {
        const FPrime& pi = pool[rng() % pool.size()];
        const CycInt a1 = random_nonzero_cyc(rng, 6), a2 = random_nonzero_cyc(rng, 6), b = random_nonzero_cyc(rng, 6);
        const int lhs = tame_hilbert_symbol(a1 * a2, b, pi);
        const int rhs = (tame_hilbert_symbol(a1, b, pi) + tame_hilbert_symbol(a2, b, pi)) % 5;
        const int lhs2 = tame_hilbert_symbol(b, a1 * a2, pi);
        const int rhs2 = (tame_hilbert_symbol(b, a1, pi) + tame_hilbert_symbol(b, a2, pi)) % 5;
        record(r, lhs == rhs && lhs2 == rhs2, a1.str() + ", " + a2.str() + ", " + b.str() + " at p=" + std::to_string(pi.p));
    }
    return r;
}

PropertyResult wild_symbol_twist_stability(int cases, std::uint64_t seed)
{
    PropertyResult r{"product formula under fifth-power twists"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        const CycInt a = random_nonzero_cyc(rng, 3), b = random_nonzero_cyc(rng, 3), c = random_nonzero_cyc(rng, 1);
        const CycInt c5 = pow(c, 5);
        const int base = wild_symbol_at_lambda(a, b);
        const bool ok = wild_symbol_at_lambda(a * c5, b) == base && wild_symbol_at_lambda(a, b * c5) == base;
        record(r, ok, a.str() + ", " + b.str() + " twisted by (" + c.str() + ")^5");
    }
    return r;
}

PropertyResult norm_multiplicativity(int cases, std::uint64_t seed)
{
    PropertyResult r{"norm multiplicativity"};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < cases; ++i) {
        const CycInt a = random_cyc(rng, 1000), b = random_cyc(rng, 1000);
        record(r, (a * b).norm() == a.norm() * b.norm(), a.str() + ", " + b.str());
    }
    return r;
}

PropertyResult lambda_valuation_additivity(int cases, std::uint64_t seed)
{
    PropertyResult r{"lambda-valuation additivity"};
    std::mt19937_64 rng(seed);
    const CycInt l = CycInt::lambda();
    for (int i = 0; i < cases; ++i) {
        const CycInt a = random_nonzero_cyc(rng, 200) * pow(l, rng() % 6);
        const CycInt b = random_nonzero_cyc(rng, 200) * pow(l, rng() % 6);
        record(r, lambda_valuation(a * b) == lambda_valuation(a) + lambda_valuation(b), a.str() + ", " + b.str());
    }
    return r;
}

std::vector<PropertyResult> all_properties(int cases, std::uint64_t seed)
{
    return {symbol_bilinearity(cases, seed), wild_symbol_twist_stability(cases, seed + 1),
            norm_multiplicativity(cases, seed + 2), lambda_valuation_additivity(cases, seed + 3)};
}

}  // namespace qgenus::test
