#include "qgenus/errors.hpp"
#include "qgenus/hilbert_symbol.hpp"
#include "qgenus/primes.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace qgenus;

namespace {

// For p = 1 mod 5 with residue field F_p and z -> r: the exponent e with
// a(r)^((p-1)/5) = r^e, from plain modular arithmetic.
int power_residue_exponent(const CycInt& a, const FPrime& pi)
{
    const mpz_class p = pi.p;
    const mpz_class r = pi.rf.zeta_image()[0];
    mpz_class v = 0, rk = 1;
    for (int k = 0; k < 4; ++k) {
        v += a[k] * rk;
        rk = rk * r % p;
    }
    v %= p;
    if (v < 0) v += p;
    mpz_class lhs;
    const mpz_class ex = (p - 1) / 5;
    mpz_powm(lhs.get_mpz_t(), v.get_mpz_t(), ex.get_mpz_t(), p.get_mpz_t());
    mpz_class rp = 1;
    for (int e = 0; e < 5; ++e) {
        if (rp == lhs) return e;
        rp = rp * r % p;
    }
    throw std::logic_error("not a fifth root of unity");
}

std::vector<FPrime> split_primes()
{
    std::vector<FPrime> out;
    for (std::int64_t p : {11, 31, 41, 61, 71}) {
        auto ps = primes_above(p);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<FPrime> all_small_primes()
{
    std::vector<FPrime> out;
    for (std::int64_t p : {2, 3, 7, 11, 19, 29, 31}) {
        auto ps = primes_above(p);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

int mod5(long v) { return static_cast<int>(((v % 5) + 5) % 5); }

}  // namespace

TEST(HilbertSymbol, MatchesPowerResidueAgainstThePrime)
{
    std::mt19937_64 rng(31);
    for (const auto& pi : split_primes()) {
        for (int it = 0; it < 200; ++it) {
            const CycInt a = test::random_nonzero_cyc(rng, 200);
            if (valuation(a, pi.element) != 0) continue;
            const int e = power_residue_exponent(a, pi);
            EXPECT_EQ(tame_hilbert_symbol(a, pi.element, pi), mod5(kSymbolConventionSign * e));
            EXPECT_EQ(tame_hilbert_symbol(pi.element, a, pi), mod5(-kSymbolConventionSign * e));
        }
    }
}

TEST(HilbertSymbol, UnitsPairTrivially)
{
    for (const auto& pi : all_small_primes())
        for (const auto& u : canonical_units())
            EXPECT_EQ(tame_hilbert_symbol(unit_value(u), CycInt::one_plus_zeta(), pi), 0);
}

TEST(HilbertSymbol, Antisymmetry)
{
    std::mt19937_64 rng(32);
    for (const auto& pi : all_small_primes())
        for (int it = 0; it < 100; ++it) {
            const CycInt a = test::random_nonzero_cyc(rng, 30), b = test::random_nonzero_cyc(rng, 30);
            EXPECT_EQ(mod5(tame_hilbert_symbol(a, b, pi) + tame_hilbert_symbol(b, a, pi)), 0);
            EXPECT_EQ(tame_hilbert_symbol(a, -a, pi), 0);
        }
}

TEST(HilbertSymbol, Steinberg)
{
    std::mt19937_64 rng(33);
    for (const auto& pi : all_small_primes())
        for (int it = 0; it < 100; ++it) {
            const CycInt a = test::random_nonzero_cyc(rng, 30);
            const CycInt b = CycInt(1) - a;
            if (b.is_zero()) continue;
            EXPECT_EQ(tame_hilbert_symbol(a, b, pi), 0);
        }
}

TEST(HilbertSymbol, WildSymbolVanishesOnHighPrincipalUnits)
{
    // 1 + lambda^6 y is a local fifth power at lambda, so its symbol there is trivial.
    std::mt19937_64 rng(34);
    const CycInt l6 = pow(CycInt::lambda(), 6);
    for (int it = 0; it < 100; ++it) {
        const CycInt x = CycInt(1) + l6 * test::random_cyc(rng, 1);
        const CycInt b = test::random_nonzero_cyc(rng, 3);
        if (x.is_zero()) continue;
        EXPECT_EQ(wild_symbol_at_lambda(x, b), 0) << x.str() << " " << b.str();
    }
}

TEST(HilbertSymbol, WildSymbolOfZetaAndLambda)
{
    // (z, lambda) is the product of tame symbols of z at primes dividing lambda: none.
    EXPECT_EQ(wild_symbol_at_lambda(CycInt::zeta(), CycInt::lambda()), 0);
    // At 2 the residue field has 16 elements and z^3 = z^((16-1)/5), so (z, 2) is 3 there and 2 at lambda.
    EXPECT_EQ(wild_symbol_at_lambda(CycInt::zeta(), CycInt(2)), mod5(-3 * kSymbolConventionSign));
}

TEST(HilbertSymbol, SupportPrimes)
{
    const auto s = support_primes(CycInt(11), CycInt(3));
    EXPECT_EQ(s.size(), 5u);
    EXPECT_TRUE(support_primes(CycInt::zeta(), CycInt::lambda()).empty());
    EXPECT_THROW(support_primes(CycInt(0), CycInt(1)), invalid_input);
}

TEST(HilbertSymbol, MismatchedPrimeRejected)
{
    auto ps = primes_above(11);
    FPrime bad = ps[0];
    bad.rf = ps[1].rf;
    EXPECT_THROW(tame_hilbert_symbol(CycInt(2), CycInt(3), bad), std::exception);
}
