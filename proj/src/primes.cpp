#include "qgenus/primes.hpp"

#include "qgenus/errors.hpp"
#include "qgenus/lambda5.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace qgenus {

namespace {

using i64 = std::int64_t;

// Norm of a small element, in 128-bit arithmetic.
__int128 small_norm(const std::array<i64, 4>& c)
{
    // Same folding as CycInt multiplication, specialised to fixed width.
    auto mul = [](const std::array<__int128, 4>& a, const std::array<__int128, 4>& b) {
        std::array<__int128, 9> r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r[i + j] += a[i] * b[j];
        for (int k = 8; k >= 5; --k) r[k - 5] += r[k];
        return std::array<__int128, 4>{r[0] - r[4], r[1] - r[4], r[2] - r[4], r[3] - r[4]};
    };
    auto conj = [](const std::array<__int128, 4>& a, int k) {
        std::array<__int128, 5> r{};
        for (int i = 0; i < 4; ++i) r[(i * k) % 5] += a[i];
        return std::array<__int128, 4>{r[0] - r[4], r[1] - r[4], r[2] - r[4], r[3] - r[4]};
    };
    std::array<__int128, 4> a{c[0], c[1], c[2], c[3]};
    auto h = mul(a, conj(a, 4));
    auto n = mul(h, conj(h, 2));
    return n[0];
}

std::vector<FPrime> match_to_fields(i64 p, const std::vector<CycInt>& elems)
{
    const int count = residue_field_count(p);
    std::vector<FPrime> out(count);
    std::vector<bool> used(elems.size(), false);
    for (int idx = 0; idx < count; ++idx) {
        ResidueField rf = build_residue_field(p, idx);
        int hit = -1;
        for (size_t k = 0; k < elems.size(); ++k) {
            if (!rf.is_zero(reduce(elems[k], rf))) continue;
            if (hit >= 0 || used[k])
                throw consistency_error("primes_above: prime-to-field matching is not a bijection at p = " +
                                        std::to_string(p));
            hit = static_cast<int>(k);
        }
        if (hit < 0)
            throw consistency_error("primes_above: no prime element for residue field at p = " + std::to_string(p));
        used[hit] = true;
        out[idx] = FPrime{elems[hit], p, rf, false};
    }
    return out;
}

std::vector<FPrime> search_split_two(i64 p)
{
    const i64 bound = static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(p)))) + 1;
    for (i64 a = 1; a <= bound; ++a) {
        for (i64 b = bound; b >= -bound; --b) {
            if (a * a + a * b - b * b != p) continue;
            CycInt pi1(b, 0, a, a);
            CycInt pi2(a - b, 0, a, a);
            if (pi1 * pi2 != CycInt(p)) throw consistency_error("primes_above: pi1 * pi2 != p");
            return match_to_fields(p, {pi1, pi2});
        }
    }
    throw search_exhausted("primes_above: no representation p = a^2 + ab - b^2 for p = " + std::to_string(p));
}

std::vector<FPrime> search_split_four(i64 p)
{
    for (int B = 1; B <= kMaxPrimeSearchBox; ++B) {
        std::array<i64, 4> c{};
        // shell of the box [-B, B]^4: at least one coordinate at +-B
        for (c[0] = -B; c[0] <= B; ++c[0])
            for (c[1] = -B; c[1] <= B; ++c[1])
                for (c[2] = -B; c[2] <= B; ++c[2])
                    for (c[3] = -B; c[3] <= B; ++c[3]) {
                        if (std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3])}) != B)
                            continue;
                        if (small_norm(c) != p) continue;
                        CycInt pi(c[0], c[1], c[2], c[3]);
                        return match_to_fields(p, {pi, pi.conj(2), pi.conj(3), pi.conj(4)});
                    }
    }
    throw search_exhausted("primes_above: box search exceeded bound for p = " + std::to_string(p));
}

std::mutex memo_mutex;
std::map<i64, std::vector<FPrime>>& memo()
{
    static std::map<i64, std::vector<FPrime>> m;
    return m;
}

}  // namespace

SplittingType splitting_type(std::int64_t p)
{
    if (!is_prime(p)) throw invalid_input("splitting_type: argument is not prime");
    if (p == 5) return SplittingType::RamifiedLambda;
    switch (order_mod5(p)) {
    case 1: return SplittingType::SplitFour;
    case 2: return SplittingType::SplitTwo;
    default: return SplittingType::Inert;
    }
}

std::string to_string(SplittingType s)
{
    switch (s) {
    case SplittingType::RamifiedLambda: return "ramified";
    case SplittingType::Inert: return "inert";
    case SplittingType::SplitTwo: return "split-two";
    case SplittingType::SplitFour: return "split-four";
    }
    return "?";
}

std::vector<FPrime> primes_above(std::int64_t p)
{
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo().find(p);
        if (it != memo().end()) return it->second;
    }
    std::vector<FPrime> found;
    switch (splitting_type(p)) {
    case SplittingType::RamifiedLambda:
        throw invalid_input("primes_above: p = 5 is handled through lambda");
    case SplittingType::Inert: found = match_to_fields(p, {CycInt(p)}); break;
    case SplittingType::SplitTwo: found = search_split_two(p); break;
    case SplittingType::SplitFour: found = search_split_four(p); break;
    }
    for (auto& fp : found)
        if (is_congruent_to_rational_mod5(fp.element)) fp.normalized = true;
    std::lock_guard<std::mutex> lock(memo_mutex);
    return memo().emplace(p, std::move(found)).first->second;
}

bool is_congruent_to_rational_mod5(const CycInt& y)
{
    for (int i = 1; i < 4; ++i)
        if (!mpz_divisible_ui_p(y[i].get_mpz_t(), 5)) return false;
    return true;
}

FPrime normalize(const FPrime& pi)
{
    FPrime out = pi;
    out.normalized = false;
    for (const auto& u : canonical_units()) {
        CycInt cand = unit_value(u) * pi.element;
        if (!is_congruent_to_rational_mod5(cand)) continue;
        out.element = cand;
        out.normalized = true;
        break;
    }
    return out;
}

bool is_sigma2_fixed(const CycInt& pi)
{
    return are_associate(pi.conj(4), pi);
}

std::vector<std::pair<std::int64_t, int>> factor_integer(std::int64_t n)
{
    if (n < 1) throw invalid_input("factor_integer: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

UnitClass unit_class_mod_fifth_powers(const CycInt& u)
{
    const UnitCoords target = lambda5_unit_coords(u);
    const UnitCoords cz = lambda5_unit_coords(CycInt::zeta());
    const UnitCoords cw = lambda5_unit_coords(CycInt::one_plus_zeta());
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i) ok = (a * cz[i] + b * cw[i]) % 5 == target[i];
            if (ok) return UnitClass{1, a, b};
        }
    throw consistency_error("unit_class_mod_fifth_powers: argument is not a global unit class");
}

CycInt Radicand::reconstruct() const
{
    CycInt v = unit * pow(CycInt::lambda(), static_cast<unsigned>(4 * v5));
    for (const auto& rp : primes) v *= pow(rp.prime.element, static_cast<unsigned>(rp.exponent));
    return v;
}

Radicand factor_radicand(std::int64_t n)
{
    if (n < 2) throw invalid_input("radicand must be an integer >= 2");
    Radicand rad;
    rad.n = n;
    rad.rational_factors = factor_integer(n);
    CycInt rest(n);
    for (const auto& [p, e] : rad.rational_factors) {
        if (e >= 5) throw invalid_input("radicand must be fifth-power free");
        if (p == 5) {
            rad.v5 = e;
            continue;
        }
        for (const auto& raw : primes_above(p)) {
            FPrime pi = normalize(raw);
            rad.primes.push_back({pi, e});
            CycInt pe = pow(pi.element, static_cast<unsigned>(e));
            auto q = exact_div(rest, pe);
            if (!q) throw consistency_error("factor_radicand: prime power does not divide n");
            rest = std::move(*q);
        }
    }
    if (rad.v5) {
        auto q = exact_div(rest, pow(CycInt::lambda(), static_cast<unsigned>(4 * rad.v5)));
        if (!q) throw consistency_error("factor_radicand: lambda power does not divide n");
        rest = std::move(*q);
    }
    mpz_class un = rest.norm();
    if (un != 1 && un != -1) throw consistency_error("factor_radicand: cofactor is not a unit");
    rad.unit = rest;
    rad.unit_class = unit_class_mod_fifth_powers(rest);
    rad.e_lambda = (4 * rad.v5) % 5;
    rad.g = static_cast<int>(rad.primes.size());
    rad.lambda_ramifies = rad.v5 > 0 || !is_fifth_power_unit_class(CycInt(n));
    rad.d = rad.g + (rad.lambda_ramifies ? 1 : 0);
    return rad;
}

}  // namespace qgenus
