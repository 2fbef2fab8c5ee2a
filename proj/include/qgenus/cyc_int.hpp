#pragma once

#include <array>
#include <compare>
#include <gmpxx.h>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace qgenus {

// Element c0 + c1 z + c2 z^2 + c3 z^3 of Z[z], z a primitive 5th root of
// unity. z^4 is always rewritten as -1 - z - z^2 - z^3, so the coordinates
// are canonical.
class CycInt {
public:
    CycInt() = default;
    explicit CycInt(long c0);
    explicit CycInt(const mpz_class& c0);
    CycInt(mpz_class c0, mpz_class c1, mpz_class c2, mpz_class c3);
    CycInt(long c0, long c1, long c2, long c3);

    static CycInt zeta();
    static CycInt lambda();          // 1 - z
    static CycInt one_plus_zeta();   // 1 + z
    static CycInt zeta_pow(int k);   // z^(k mod 5)

    const mpz_class& operator[](int i) const { return c_[i]; }
    const std::array<mpz_class, 4>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;

    // Image under the automorphism z -> z^k, k in {1,2,3,4}.
    CycInt conj(int k) const;
    mpz_class norm() const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);
    CycInt operator-() const;

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend bool operator==(const CycInt& a, const CycInt& b) { return a.c_ == b.c_; }
    friend bool operator<(const CycInt& a, const CycInt& b);

    std::string str() const;

private:
    std::array<mpz_class, 4> c_{};
};

CycInt pow(const CycInt& a, unsigned e);

// a / b when b divides a in Z[z], otherwise nullopt. Throws on b = 0.
std::optional<CycInt> exact_div(const CycInt& a, const CycInt& b);

// Divisibility tester for a fixed nonzero divisor; caches the conjugate
// cofactor so repeated valuations do not recompute it.
class Divider {
public:
    explicit Divider(const CycInt& d);
    std::optional<CycInt> divide(const CycInt& a) const;
    // Largest k with d^k | a, dividing a in place. kInfiniteValuation for a = 0.
    int strip(CycInt& a) const;
    const CycInt& divisor() const { return d_; }

private:
    CycInt d_;
    CycInt cofactor_;
    mpz_class norm_;
};

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

int valuation(const CycInt& y, const CycInt& pi);
int lambda_valuation(const CycInt& y);

// True when u * v = a unit, tested by exact division both ways.
bool are_associate(const CycInt& a, const CycInt& b);

// +/- z^a (1+z)^b with a, b in 0..4.
struct UnitClass {
    int sign = 1;
    int a = 0;
    int b = 0;
    auto operator<=>(const UnitClass&) const = default;
};

CycInt unit_value(const UnitClass& u);

// The 50 classes in canonical order: sign +1 before -1, then a, then b.
const std::vector<UnitClass>& canonical_units();

}  // namespace qgenus
