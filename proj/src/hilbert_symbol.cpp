#include "qgenus/hilbert_symbol.hpp"

#include "qgenus/errors.hpp"
#include "qgenus/fp_linalg.hpp"

namespace qgenus {

int tame_hilbert_symbol(const CycInt& a, const CycInt& b, const FPrime& pi)
{
    if (a.is_zero() || b.is_zero()) throw invalid_input("tame_hilbert_symbol: zero argument");
    if (pi.p == 5) throw invalid_input("tame_hilbert_symbol: prime above 5");
    if (!pi.rf.is_zero(reduce(pi.element, pi.rf)))
        throw invalid_input("tame_hilbert_symbol: residue field does not belong to the prime");

    const Divider by_pi(pi.element);
    CycInt ua = a, ub = b;
    const long alpha = by_pi.strip(ua);
    const long beta = by_pi.strip(ub);
    // (-1) is a fifth power, so the sign factor never contributes.
    const int ca = beta % 5 ? quintic_character(pi.rf, reduce(ua, pi.rf)) : 0;
    const int cb = alpha % 5 ? quintic_character(pi.rf, reduce(ub, pi.rf)) : 0;
    return fp::normalize(kSymbolConventionSign * (beta * ca - alpha * cb), 5);
}

std::vector<FPrime> support_primes(const CycInt& a, const CycInt& b)
{
    mpz_class na = abs(a.norm());
    mpz_class nb = abs(b.norm());
    if (na == 0 || nb == 0) throw invalid_input("support_primes: zero argument");
    mpz_class m = na * nb;
    while (mpz_divisible_ui_p(m.get_mpz_t(), 5)) m /= 5;

    // Trial division up to kTrialLimit; anything left must then be prime.
    constexpr unsigned long kTrialLimit = 1000000;
    std::vector<std::int64_t> rational;
    for (unsigned long d = 2; m > 1; d += (d == 2 ? 1 : 2)) {
        if (mpz_cmp_ui(m.get_mpz_t(), d * d) < 0) {
            if (!m.fits_slong_p()) throw invalid_input("support_primes: norm cofactor too large");
            rational.push_back(m.get_si());
            break;
        }
        if (d > kTrialLimit) throw invalid_input("support_primes: norm has a prime factor beyond trial-division range");
        if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            rational.push_back(static_cast<std::int64_t>(d));
            while (mpz_divisible_ui_p(m.get_mpz_t(), d)) m /= d;
        }
    }

    std::vector<FPrime> out;
    for (std::int64_t p : rational) {
        for (const auto& pi : primes_above(p)) {
            const Divider by_pi(pi.element);
            if (by_pi.divide(a) || by_pi.divide(b)) out.push_back(pi);
        }
    }
    return out;
}

int wild_symbol_at_lambda(const CycInt& a, const CycInt& b)
{
    int s = 0;
    for (const auto& pi : support_primes(a, b)) s += tame_hilbert_symbol(a, b, pi);
    return fp::normalize(-s, 5);
}

}  // namespace qgenus
