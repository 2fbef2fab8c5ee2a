#include "qgenus/residue_field.hpp"

#include "qgenus/errors.hpp"
#include "qgenus/fp_linalg.hpp"

#include <algorithm>

namespace qgenus {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 mulmod(i64 a, i64 b, i64 m)
{
    return static_cast<i64>(static_cast<i128>(a) * b % m);
}

i64 powmod(i64 a, i64 e, i64 m)
{
    i64 r = 1 % m;
    a %= m;
    if (a < 0) a += m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

i64 sqrt_mod(i64 n, i64 p)
{
    n %= p;
    if (n < 0) n += p;
    if (n == 0) return 0;
    if (powmod(n, (p - 1) / 2, p) != 1) throw consistency_error("sqrt_mod: not a square");
    // Tonelli-Shanks
    i64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    i64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    i64 m = s, c = powmod(z, q, p), t = powmod(n, q, p), r = powmod(n, (q + 1) / 2, p);
    while (t != 1) {
        i64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        i64 b = c;
        for (i64 j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

std::vector<std::vector<i64>> cyclotomic_factors(i64 p)
{
    const int f = order_mod5(p);
    std::vector<std::vector<i64>> out;
    if (f == 1) {
        i64 r = 0;
        for (i64 a = 2; a < p; ++a) {
            r = powmod(a, (p - 1) / 5, p);
            if (r != 1) break;
        }
        std::vector<i64> roots;
        for (int k = 1; k <= 4; ++k) roots.push_back(powmod(r, k, p));
        std::sort(roots.begin(), roots.end());
        for (i64 x : roots) out.push_back({(p - x) % p, 1});
    } else if (f == 2) {
        // s = z + z^-1 satisfies s^2 + s - 1 = 0, so s = (-1 +- sqrt 5) / 2.
        i64 w = sqrt_mod(5, p);
        i64 inv2 = (p + 1) / 2;
        std::vector<i64> traces = {mulmod((p - 1 + w) % p, inv2, p), mulmod((2 * p - 1 - w) % p, inv2, p)};
        std::sort(traces.begin(), traces.end());
        for (i64 s : traces) out.push_back({1, (p - s) % p, 1});
    } else {
        out.push_back({1 % p, 1 % p, 1 % p, 1 % p, 1});
    }
    return out;
}

}  // namespace

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

int order_mod5(std::int64_t p)
{
    switch (((p % 5) + 5) % 5) {
    case 1: return 1;
    case 4: return 2;
    case 2:
    case 3: return 4;
    default: throw invalid_input("order_mod5: p is divisible by 5");
    }
}

int residue_field_count(std::int64_t p)
{
    return 4 / order_mod5(p);
}

mpz_class ResidueField::order() const
{
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(f_));
    return q;
}

ResidueField::Elem ResidueField::from_int(std::int64_t v) const
{
    Elem e{};
    v %= p_;
    e[0] = v < 0 ? v + p_ : v;
    return e;
}

ResidueField::Elem ResidueField::from_mpz(const mpz_class& v) const
{
    Elem e{};
    e[0] = static_cast<std::int64_t>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_)));
    return e;
}

ResidueField::Elem ResidueField::add(const Elem& a, const Elem& b) const
{
    Elem r{};
    for (int i = 0; i < f_; ++i) {
        r[i] = a[i] + b[i];
        if (r[i] >= p_) r[i] -= p_;
    }
    return r;
}

ResidueField::Elem ResidueField::sub(const Elem& a, const Elem& b) const
{
    Elem r{};
    for (int i = 0; i < f_; ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) r[i] += p_;
    }
    return r;
}

ResidueField::Elem ResidueField::mul(const Elem& a, const Elem& b) const
{
    std::array<i64, 7> t{};
    for (int i = 0; i < f_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < f_; ++j) t[i + j] = (t[i + j] + mulmod(a[i], b[j], p_)) % p_;
    }
    for (int k = 2 * f_ - 2; k >= f_; --k) {
        i64 c = t[k];
        if (c == 0) continue;
        t[k] = 0;
        for (int i = 0; i < f_; ++i) t[k - f_ + i] = ((t[k - f_ + i] - mulmod(c, modulus_[i], p_)) % p_ + p_) % p_;
    }
    Elem r{};
    for (int i = 0; i < f_; ++i) r[i] = t[i];
    return r;
}

ResidueField::Elem ResidueField::pow(const Elem& a, const mpz_class& e) const
{
    if (e < 0) throw invalid_input("negative exponent in residue field");
    Elem r = one();
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        r = mul(r, r);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) r = mul(r, a);
    }
    return r;
}

bool ResidueField::is_zero(const Elem& a) const
{
    for (int i = 0; i < f_; ++i)
        if (a[i] != 0) return false;
    return true;
}

ResidueField build_residue_field(std::int64_t p, int root_index)
{
    if (!is_prime(p)) throw invalid_input("build_residue_field: p must be prime");
    if (p == 5) throw invalid_input("build_residue_field: p = 5 has no tame residue field");
    if (p > (std::int64_t{1} << 31)) throw invalid_input("build_residue_field: p too large");
    auto factors = cyclotomic_factors(p);
    if (root_index < 0 || root_index >= static_cast<int>(factors.size()))
        throw invalid_input("build_residue_field: root_index out of range");

    ResidueField rf;
    rf.p_ = p;
    rf.f_ = order_mod5(p);
    rf.root_index_ = root_index;
    rf.modulus_ = factors[root_index];
    rf.char_exponent_ = (rf.order() - 1) / 5;

    ResidueField::Elem x{};
    if (rf.f_ == 1)
        x[0] = (p - rf.modulus_[0]) % p;
    else
        x[1] = 1;
    rf.zeta_powers_[0] = rf.one();
    for (int e = 1; e < 5; ++e) rf.zeta_powers_[e] = rf.mul(rf.zeta_powers_[e - 1], x);
    if (rf.mul(rf.zeta_powers_[4], x) != rf.one() || rf.zeta_powers_[1] == rf.one())
        throw consistency_error("build_residue_field: zeta image does not have order 5");
    return rf;
}

ResidueField::Elem reduce(const CycInt& y, const ResidueField& rf)
{
    ResidueField::Elem acc = rf.zero();
    for (int i = 0; i < 4; ++i) {
        if (y[i] == 0) continue;
        acc = rf.add(acc, rf.mul(rf.from_mpz(y[i]), rf.zeta_power(i)));
    }
    return acc;
}

int quintic_character(const ResidueField& rf, const ResidueField::Elem& a)
{
    if (rf.is_zero(a)) throw invalid_input("quintic_character: zero has no character value");
    auto y = rf.pow(a, rf.char_exponent_);
    for (int e = 0; e < 5; ++e)
        if (y == rf.zeta_powers_[e]) return e;
    throw consistency_error("quintic_character: power is not a 5th root of unity");
}

std::array<int, 2> unit_characters(const ResidueField& rf)
{
    return {quintic_character(rf, reduce(CycInt::zeta(), rf)),
            quintic_character(rf, reduce(CycInt::one_plus_zeta(), rf))};
}

bool NormConditionSubgroup::contains(int i, int j) const
{
    fp::Mat rows;
    for (auto& b : basis) rows.push_back({b[0], b[1]});
    return fp::in_span(rows, {fp::normalize(i, 5), fp::normalize(j, 5)}, 5);
}

NormConditionSubgroup norm_condition_subgroup(const ResidueField& rf)
{
    auto ch = unit_characters(rf);
    NormConditionSubgroup g;
    for (auto& v : fp::kernel({{ch[0], ch[1]}}, 2, 5)) g.basis.push_back({v[0], v[1]});
    return g;
}

}  // namespace qgenus
