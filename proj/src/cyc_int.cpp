#include "qgenus/cyc_int.hpp"

#include "qgenus/errors.hpp"

#include <sstream>

namespace qgenus {

namespace {

// Fold a polynomial in z of degree <= 8 into the canonical basis.
CycInt fold(std::array<mpz_class, 9>& r)
{
    for (int k = 8; k >= 5; --k) {
        r[k - 5] += r[k];
    }
    // z^4 = -1 - z - z^2 - z^3
    return CycInt(r[0] - r[4], r[1] - r[4], r[2] - r[4], r[3] - r[4]);
}

}  // namespace

CycInt::CycInt(long c0) : c_{mpz_class(c0), 0, 0, 0} {}

CycInt::CycInt(const mpz_class& c0) : c_{c0, 0, 0, 0} {}

CycInt::CycInt(mpz_class c0, mpz_class c1, mpz_class c2, mpz_class c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}
{
}

CycInt::CycInt(long c0, long c1, long c2, long c3)
    : c_{mpz_class(c0), mpz_class(c1), mpz_class(c2), mpz_class(c3)}
{
}

CycInt CycInt::zeta() { return CycInt(0, 1, 0, 0); }
CycInt CycInt::lambda() { return CycInt(1, -1, 0, 0); }
CycInt CycInt::one_plus_zeta() { return CycInt(1, 1, 0, 0); }

CycInt CycInt::zeta_pow(int k)
{
    k = ((k % 5) + 5) % 5;
    if (k == 4) return CycInt(-1, -1, -1, -1);
    CycInt r;
    r.c_[k] = 1;
    return r;
}

bool CycInt::is_zero() const
{
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool CycInt::is_rational() const
{
    return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

CycInt CycInt::conj(int k) const
{
    k = ((k % 5) + 5) % 5;
    if (k == 0) throw invalid_input("conj: exponent must be a unit mod 5");
    std::array<mpz_class, 9> r{};
    for (int i = 0; i < 4; ++i) r[(i * k) % 5] += c_[i];
    return fold(r);
}

mpz_class CycInt::norm() const
{
    // a * conj4(a) is fixed by z -> z^4; multiplying by its z -> z^2 image
    // gives the full product of conjugates.
    CycInt h = *this * conj(4);
    CycInt n = h * h.conj(2);
    if (!n.is_rational()) throw consistency_error("norm: product of conjugates not rational");
    return n.c_[0];
}

CycInt& CycInt::operator+=(const CycInt& o)
{
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o)
{
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

CycInt& CycInt::operator*=(const CycInt& o)
{
    *this = *this * o;
    return *this;
}

CycInt CycInt::operator-() const
{
    return CycInt(-c_[0], -c_[1], -c_[2], -c_[3]);
}

CycInt operator*(const CycInt& a, const CycInt& b)
{
    std::array<mpz_class, 9> r{};
    for (int i = 0; i < 4; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return fold(r);
}

bool operator<(const CycInt& a, const CycInt& b)
{
    for (int i = 0; i < 4; ++i) {
        int c = cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string CycInt::str() const
{
    static const char* names[4] = {"", "z", "z^2", "z^3"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c_[i] == 0) continue;
        mpz_class c = c_[i];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            c = abs(c);
        } else if (c < 0 && i > 0 && c == -1) {
            os << "-";
            c = 1;
        }
        if (i == 0 || c != 1) os << c;
        if (i > 0) os << names[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycInt pow(const CycInt& a, unsigned e)
{
    CycInt result(1);
    CycInt base = a;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Divider::Divider(const CycInt& d) : d_(d)
{
    if (d.is_zero()) throw invalid_input("division by zero in Z[z]");
    cofactor_ = d.conj(2) * d.conj(3) * d.conj(4);
    CycInt n = d * cofactor_;
    norm_ = n[0];
}

std::optional<CycInt> Divider::divide(const CycInt& a) const
{
    CycInt m = a * cofactor_;
    std::array<mpz_class, 4> q;
    for (int i = 0; i < 4; ++i) {
        if (!mpz_divisible_p(m[i].get_mpz_t(), norm_.get_mpz_t())) return std::nullopt;
        mpz_divexact(q[i].get_mpz_t(), m[i].get_mpz_t(), norm_.get_mpz_t());
    }
    return CycInt(q[0], q[1], q[2], q[3]);
}

int Divider::strip(CycInt& a) const
{
    if (a.is_zero()) return kInfiniteValuation;
    int k = 0;
    while (auto q = divide(a)) {
        a = std::move(*q);
        ++k;
    }
    return k;
}

std::optional<CycInt> exact_div(const CycInt& a, const CycInt& b)
{
    return Divider(b).divide(a);
}

int valuation(const CycInt& y, const CycInt& pi)
{
    CycInt a = y;
    return Divider(pi).strip(a);
}

int lambda_valuation(const CycInt& y)
{
    static const Divider by_lambda(CycInt::lambda());
    CycInt a = y;
    return by_lambda.strip(a);
}

bool are_associate(const CycInt& a, const CycInt& b)
{
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return exact_div(a, b).has_value() && exact_div(b, a).has_value();
}

CycInt unit_value(const UnitClass& u)
{
    CycInt v = CycInt::zeta_pow(u.a) * pow(CycInt::one_plus_zeta(), static_cast<unsigned>(u.b));
    return u.sign < 0 ? -v : v;
}

const std::vector<UnitClass>& canonical_units()
{
    static const std::vector<UnitClass> units = [] {
        std::vector<UnitClass> v;
        for (int s : {1, -1})
            for (int a = 0; a < 5; ++a)
                for (int b = 0; b < 5; ++b) v.push_back({s, a, b});
        return v;
    }();
    return units;
}

}  // namespace qgenus
