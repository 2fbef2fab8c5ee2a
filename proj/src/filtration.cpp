#include "qgenus/filtration.hpp"

#include "qgenus/errors.hpp"
#include "qgenus/residue_field.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace qgenus {

namespace {

using fp::Mat;
using fp::Vec;

Mat zero_mat(int n) { return Mat(n, Vec(n, 0)); }

Mat add(const Mat& a, const Mat& b, int p)
{
    Mat r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] = (a[i][j] + b[i][j]) % p;
    return r;
}

Mat scale(const Mat& a, int c, int p)
{
    Mat r = a;
    for (auto& row : r)
        for (auto& x : row) x = fp::normalize(static_cast<long>(x) * c, p);
    return r;
}

// Coefficients of poly(lambda)^k truncated mod lambda^e.
Vec poly_mul_trunc(const Vec& a, const Vec& b, int e, int p)
{
    Vec r(e, 0);
    for (int i = 0; i < e && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j < e && j < static_cast<int>(b.size()); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

// Matrix of the ring automorphism z -> z^3 on F_5[lambda]/(lambda^e).
Mat rho_block(int e)
{
    const Vec rho_lambda = {0, 3, 2, 1};  // 1 - (1 - lambda)^3 = 3 lambda - 3 lambda^2 + lambda^3
    Mat m(e, Vec(e, 0));
    Vec pw(e, 0);
    pw[0] = 1;
    for (int k = 0; k < e; ++k) {
        for (int r = 0; r < e; ++r) m[r][k] = pw[r];
        pw = poly_mul_trunc(pw, rho_lambda, e, 5);
    }
    return m;
}

std::string seq_str(const std::vector<int>& v)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

// ---- enumeration engine -------------------------------------------------

class Enumerator {
public:
    explicit Enumerator(const FiltrationModule& S) : ell_(S.ell), dim_(S.dim)
    {
        size_ = 1;
        for (int i = 0; i < dim_; ++i) size_ *= ell_;
    }

    std::int64_t size() const { return size_; }

    Vec decode(std::int64_t code) const
    {
        Vec v(dim_);
        for (int i = 0; i < dim_; ++i) {
            v[i] = static_cast<int>(code % ell_);
            code /= ell_;
        }
        return v;
    }

    std::int64_t encode(const Vec& v) const
    {
        std::int64_t c = 0;
        for (int i = dim_ - 1; i >= 0; --i) c = c * ell_ + v[i];
        return c;
    }

    using Set = std::vector<char>;

    Set all() const { return Set(size_, 1); }

    Set filter(const std::function<bool(const Vec&)>& pred, const Set& within) const
    {
        Set out(size_, 0);
        for (std::int64_t c = 0; c < size_; ++c)
            if (within[c] && pred(decode(c))) out[c] = 1;
        return out;
    }

    Set image(const std::function<Vec(const Vec&)>& f, const Set& of) const
    {
        Set out(size_, 0);
        for (std::int64_t c = 0; c < size_; ++c)
            if (of[c]) out[encode(f(decode(c)))] = 1;
        return out;
    }

    Set intersect(const Set& a, const Set& b) const
    {
        Set out(size_);
        for (std::int64_t c = 0; c < size_; ++c) out[c] = a[c] && b[c];
        return out;
    }

    Set sum(const Set& a, const Set& b) const
    {
        Set out = a;
        std::vector<std::int64_t> members;
        for (std::int64_t c = 0; c < size_; ++c)
            if (out[c]) members.push_back(c);
        for (std::int64_t c = 0; c < size_; ++c) {
            if (!b[c] || out[c]) continue;
            const Vec g = decode(c);
            std::vector<std::int64_t> grown;
            for (std::int64_t m : members) {
                Vec v = decode(m);
                for (int k = 1; k < ell_; ++k) {
                    for (int i = 0; i < dim_; ++i) v[i] = (v[i] + g[i]) % ell_;
                    std::int64_t code = encode(v);
                    if (!out[code]) {
                        out[code] = 1;
                        grown.push_back(code);
                    }
                }
            }
            members.insert(members.end(), grown.begin(), grown.end());
        }
        return out;
    }

    int log_size(const Set& s) const
    {
        std::int64_t n = std::count(s.begin(), s.end(), 1);
        int k = 0;
        while (n > 1) {
            if (n % ell_) throw consistency_error("enumeration: subgroup order is not a power of ell");
            n /= ell_;
            ++k;
        }
        return k;
    }

    Vec apply(const Mat& m, const Vec& v) const { return fp::mul(m, v, ell_); }

private:
    int ell_;
    int dim_;
    std::int64_t size_ = 1;
};

// ---- linear algebra engine ----------------------------------------------

Mat image_of(const Mat& m, const Mat& rows, int p)
{
    Mat out;
    for (const auto& r : rows) out.push_back(fp::mul(m, r, p));
    return fp::rref(out, p).rows;
}

Mat sum_of(const Mat& a, const Mat& b, int p)
{
    Mat s = a;
    s.insert(s.end(), b.begin(), b.end());
    return fp::rref(s, p).rows;
}

// {x in span(U) : M x in span(W)}.
Mat preimage_in(const Mat& U, const Mat& M, const Mat& W, int dim, int p)
{
    if (U.empty()) return {};
    Mat ann = W.empty() ? fp::identity(dim) : fp::kernel(W, dim, p);
    Mat eqs;
    for (const auto& a : ann) {
        Vec row;
        for (const auto& u : U) {
            Vec mu = fp::mul(M, u, p);
            long d = 0;
            for (int k = 0; k < dim; ++k) d += static_cast<long>(a[k]) * mu[k];
            row.push_back(fp::normalize(d, p));
        }
        eqs.push_back(row);
    }
    Mat coeffs = eqs.empty() ? fp::identity(static_cast<int>(U.size())) : fp::kernel(eqs, static_cast<int>(U.size()), p);
    Mat out;
    for (const auto& c : coeffs) {
        Vec x(dim, 0);
        for (size_t k = 0; k < U.size(); ++k)
            for (int j = 0; j < dim; ++j) x[j] = (x[j] + c[k] * U[k][j]) % p;
        out.push_back(x);
    }
    return fp::rref(out, p).rows;
}

int dim_of(const Mat& rows, int p) { return fp::rank(rows, p); }

Mat sigma_minus(const FiltrationModule& S, int eps)
{
    return add(*S.sigma, scale(fp::identity(S.dim), -eps, S.ell), S.ell);
}

Mat sigma_sq_plus_one(const FiltrationModule& S)
{
    return add(fp::multiply(*S.sigma, *S.sigma, S.ell), fp::identity(S.dim), S.ell);
}

}  // namespace

fp::Vec FiltrationModule::times_ell(const fp::Vec& x) const
{
    Vec acc(x.size(), 0);
    for (int k = 0; k < ell; ++k)
        for (size_t i = 0; i < x.size(); ++i) acc[i] = (acc[i] + x[i]) % ell;
    return acc;
}

FiltrationModule build_filtration_module(int ell, std::vector<int> exponents, SigmaSpec spec)
{
    if (ell < 3 || !is_prime(ell)) throw invalid_input("filtration module: ell must be an odd prime");
    if (exponents.empty()) throw invalid_input("filtration module: need at least one summand");
    if (!std::is_sorted(exponents.begin(), exponents.end()))
        throw invalid_input("filtration module: exponents must be non-decreasing");
    for (int e : exponents)
        if (e < 1 || e > ell - 1) throw invalid_input("filtration module: exponents must lie in 1..ell-1");
    if (spec.kind != SigmaSpec::Kind::None && ell != 5)
        throw invalid_input("filtration module: sigma is only defined for ell = 5");

    FiltrationModule S;
    S.ell = ell;
    S.exponents = std::move(exponents);
    for (int e : S.exponents) {
        S.offsets.push_back(S.dim);
        S.dim += e;
    }
    if (S.dim > 64) throw invalid_input("filtration module: too large");
    S.lambda_map = zero_mat(S.dim);
    for (size_t i = 0; i < S.exponents.size(); ++i)
        for (int k = 0; k + 1 < S.exponents[i]; ++k) S.lambda_map[S.offsets[i] + k + 1][S.offsets[i] + k] = 1;
    S.zeta_map = add(fp::identity(S.dim), scale(S.lambda_map, -1, ell), ell);

    if (spec.kind == SigmaSpec::Kind::None) return S;

    const int D = S.dim;
    const int t = static_cast<int>(S.exponents.size());
    std::mt19937_64 rng(spec.seed);
    auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    Mat semilinear = zero_mat(D);
    Mat B = fp::identity(D);
    for (int i = 0; i < t; ++i) {
        const int c = spec.kind == SigmaSpec::Kind::Random ? rnd(1, 4) : 1;
        Mat blk = rho_block(S.exponents[i]);
        for (int r = 0; r < S.exponents[i]; ++r)
            for (int k = 0; k < S.exponents[i]; ++k)
                semilinear[S.offsets[i] + r][S.offsets[i] + k] = blk[r][k] * c % 5;
    }
    if (spec.kind == SigmaSpec::Kind::Random) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 100) throw search_exhausted("filtration module: no invertible change of basis found");
            B = zero_mat(D);
            // block (i, j) is x -> m * lambda^shift * x from summand j to summand i
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j) {
                    const int ei = S.exponents[i], ej = S.exponents[j];
                    const int shift = std::max(0, ei - ej);
                    Vec m(ei, 0);
                    for (auto& x : m) x = rnd(0, 4);
                    if (i == j && m[0] == 0) m[0] = rnd(1, 4);
                    for (int k = 0; k < ej; ++k)
                        for (int d = 0; d < ei; ++d) {
                            const int target = d + shift + k;
                            if (target < ei) B[S.offsets[i] + target][S.offsets[j] + k] = (B[S.offsets[i] + target][S.offsets[j] + k] + m[d]) % 5;
                        }
                }
            if (fp::rank(B, 5) == D) break;
        }
    }
    S.sigma = fp::multiply(fp::multiply(B, semilinear, 5), fp::invert(B, 5), 5);

    if (fp::multiply(S.lambda_map, B, 5) != fp::multiply(B, S.lambda_map, 5))
        throw consistency_error("filtration module: change of basis is not R-linear");
    const Mat& s = *S.sigma;
    Mat s4 = fp::multiply(fp::multiply(s, s, 5), fp::multiply(s, s, 5), 5);
    if (s4 != fp::identity(D)) throw consistency_error("filtration module: sigma^4 != 1");
    Mat tau3 = fp::multiply(S.zeta_map, fp::multiply(S.zeta_map, S.zeta_map, 5), 5);
    if (fp::multiply(s, S.zeta_map, 5) != fp::multiply(tau3, s, 5))
        throw consistency_error("filtration module: sigma tau != tau^3 sigma");
    return S;
}

bool enumerable(const FiltrationModule& S)
{
    std::int64_t n = 1;
    for (int i = 0; i < S.dim; ++i) {
        n *= S.ell;
        if (n > kEnumerationCap) return false;
    }
    return true;
}

RankProfile brute_rank_profile(const FiltrationModule& S)
{
    return brute_rank_profile(S, enumerable(S) ? OracleEngine::Enumeration : OracleEngine::LinearAlgebra);
}

RankProfile brute_rank_profile(const FiltrationModule& S, OracleEngine engine)
{
    const int ell = S.ell;
    RankProfile prof;
    prof.s.assign(ell - 1, 0);
    prof.lambda_ranks.assign(ell - 1, 0);

    if (engine == OracleEngine::Enumeration) {
        if (!enumerable(S)) throw invalid_input("brute_rank_profile: module too large to enumerate");
        Enumerator en(S);
        auto lam = [&](const Vec& v) { return en.apply(S.lambda_map, v); };
        std::vector<Enumerator::Set> L{en.all()};
        for (int i = 1; i < ell; ++i) L.push_back(en.image(lam, L.back()));
        auto torsion = en.filter(
            [&](const Vec& v) {
                const Vec w = lam(v);
                return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
            },
            en.all());
        prof.t = en.log_size(torsion);
        for (int i = 1; i < ell; ++i) {
            auto num = en.sum(en.intersect(torsion, L[i - 1]), L[i]);
            prof.s[i - 1] = en.log_size(num) - en.log_size(L[i]);
            prof.lambda_ranks[i - 1] = en.log_size(L[i - 1]) - en.log_size(L[i]);
        }
        auto ellS = en.image([&](const Vec& v) { return S.times_ell(v); }, en.all());
        prof.rank = en.log_size(en.all()) - en.log_size(ellS);
        return prof;
    }

    std::vector<Mat> L{fp::identity(S.dim)};
    for (int i = 1; i < ell; ++i) L.push_back(image_of(S.lambda_map, L.back(), ell));
    Mat torsion = fp::kernel(S.lambda_map, S.dim, ell);
    prof.t = dim_of(torsion, ell);
    for (int i = 1; i < ell; ++i) {
        Mat num = sum_of(fp::intersect(torsion, L[i - 1], S.dim, ell), L[i], ell);
        prof.s[i - 1] = dim_of(num, ell) - dim_of(L[i], ell);
        prof.lambda_ranks[i - 1] = dim_of(L[i - 1], ell) - dim_of(L[i], ell);
    }
    Mat ellS;
    for (const auto& b : fp::identity(S.dim)) ellS.push_back(S.times_ell(b));
    prof.rank = S.dim - dim_of(ellS, ell);
    return prof;
}

int rank_formula(int ell, int t, const std::vector<int>& s)
{
    int r = (ell - 1) * t;
    for (int i = 1; i <= ell - 2 && i <= static_cast<int>(s.size()); ++i) r -= (ell - 1 - i) * s[i - 1];
    return r;
}

RankProfile closed_form_profile(int ell, const std::vector<int>& exponents)
{
    RankProfile p;
    p.t = static_cast<int>(exponents.size());
    p.s.assign(ell - 1, 0);
    for (int e : exponents) ++p.s[e - 1];
    p.rank = rank_formula(ell, p.t, p.s);
    p.lambda_ranks.assign(ell - 1, 0);
    int remaining = p.t;
    for (int i = 1; i < ell; ++i) {
        p.lambda_ranks[i - 1] = remaining;
        remaining -= p.s[i - 1];
    }
    return p;
}

void OracleCheck::expect(bool cond, const std::string& what)
{
    if (!cond) {
        ok = false;
        failures.push_back(what);
    }
}

OracleCheck verify_rank_identities(const FiltrationModule& S)
{
    OracleCheck c;
    const int ell = S.ell;
    const RankProfile b = brute_rank_profile(S);
    const RankProfile f = closed_form_profile(ell, S.exponents);
    const std::string tag = "ell=" + std::to_string(ell) + " e=" + seq_str(S.exponents) + ": ";

    c.expect(b.t == f.t, tag + "t differs from the number of summands");
    c.expect(b.s == f.s, tag + "s_i differ from exponent counts");
    c.expect(b.rank == rank_formula(ell, b.t, b.s), tag + "rank differs from the rank formula");
    c.expect(b.rank == S.dim, tag + "rank differs from sum of exponents");
    c.expect(2 * b.t - b.s[0] <= b.rank && b.rank <= (ell - 1) * b.t - (ell - 2) * b.s[0],
             tag + "rank outside [2t - s1, (ell-1)t - (ell-2)s1]");
    int sum_s = 0;
    int before = 0;
    for (int i = 1; i < ell; ++i) {
        c.expect(b.lambda_ranks[i - 1] == b.t - before, tag + "lambda^" + std::to_string(i) + "-rank != t - s_1 - ...");
        c.expect(0 <= b.s[i - 1] && b.s[i - 1] <= b.t - before, tag + "s_" + std::to_string(i) + " out of range");
        before += b.s[i - 1];
        sum_s += b.s[i - 1];
    }
    c.expect(sum_s == b.t, tag + "sum of s_i != t");
    if (b.s[0] == b.t) c.expect(b.rank == b.t, tag + "s1 = t but module is not elementary of rank t");

    // If lambda^i S = ell S then s_j = 0 for j > i.
    std::vector<Mat> L{fp::identity(S.dim)};
    for (int i = 1; i < ell; ++i) L.push_back(image_of(S.lambda_map, L.back(), ell));
    Mat ellS;
    for (const auto& v : fp::identity(S.dim)) ellS.push_back(S.times_ell(v));
    ellS = fp::rref(ellS, ell).rows;
    for (int i = 1; i < ell; ++i) {
        const bool equal = dim_of(L[i], ell) == dim_of(ellS, ell) && dim_of(sum_of(L[i], ellS, ell), ell) == dim_of(L[i], ell);
        if (!equal) continue;
        for (int j = i + 1; j < ell; ++j)
            c.expect(b.s[j - 1] == 0, tag + "lambda^" + std::to_string(i) + " S = ell S but s_" + std::to_string(j) + " != 0");
    }
    const bool capped = std::all_of(S.exponents.begin(), S.exponents.end(), [&](int e) { return e <= ell - 2; });
    if (capped) c.expect(b.s[ell - 2] == 0, tag + "s_{ell-1} nonzero although all exponents <= ell-2");
    return c;
}

SigmaDecomposition sigma_decompose(const FiltrationModule& S)
{
    return sigma_decompose(S, enumerable(S) ? OracleEngine::Enumeration : OracleEngine::LinearAlgebra);
}

SigmaDecomposition sigma_decompose(const FiltrationModule& S, OracleEngine engine)
{
    if (!S.sigma) throw invalid_input("sigma_decompose: module has no sigma");
    const int p = 5;
    const int levels = 4;
    SigmaDecomposition out;
    out.order_exponent = S.dim;
    out.graded.resize(levels);
    out.lambda_kernels.resize(levels);

    const Mat sp = sigma_minus(S, 1), sm = sigma_minus(S, -1), smm = sigma_sq_plus_one(S);

    if (engine == OracleEngine::Enumeration) {
        if (!enumerable(S)) throw invalid_input("sigma_decompose: module too large to enumerate");
        Enumerator en(S);
        auto zero = [](const Vec& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }); };
        auto all = en.all();
        out.whole.plus = en.log_size(en.filter([&](const Vec& v) { return zero(en.apply(sp, v)); }, all));
        out.whole.minus = en.log_size(en.filter([&](const Vec& v) { return zero(en.apply(sm, v)); }, all));
        out.whole.minus_minus = en.log_size(en.filter([&](const Vec& v) { return zero(en.apply(smm, v)); }, all));

        std::vector<Enumerator::Set> L{all};
        for (int i = 1; i <= levels + 1; ++i)
            L.push_back(en.image([&](const Vec& v) { return en.apply(S.lambda_map, v); }, L.back()));
        for (int i = 0; i < levels; ++i) {
            const auto& next = L[i + 1];
            const auto& next2 = L[i + 2];
            const int base = en.log_size(next);
            auto part = [&](const Mat& m) { return en.filter([&](const Vec& v) { return next[en.encode(en.apply(m, v))] != 0; }, L[i]); };
            auto ker = [&](const Enumerator::Set& P) {
                return en.log_size(en.filter([&](const Vec& v) { return next2[en.encode(en.apply(S.lambda_map, v))] != 0; }, P)) - base;
            };
            auto Pp = part(sp), Pm = part(sm), Pmm = part(smm);
            out.graded[i] = {en.log_size(Pp) - base, en.log_size(Pm) - base, en.log_size(Pmm) - base};
            out.lambda_kernels[i] = {ker(Pp), ker(Pm), ker(Pmm)};
        }
    } else {
        const int D = S.dim;
        const Mat I = fp::identity(D);
        out.whole.plus = dim_of(fp::kernel(sp, D, p), p);
        out.whole.minus = dim_of(fp::kernel(sm, D, p), p);
        out.whole.minus_minus = dim_of(fp::kernel(smm, D, p), p);
        std::vector<Mat> L{I};
        for (int i = 1; i <= levels + 1; ++i) L.push_back(image_of(S.lambda_map, L.back(), p));
        for (int i = 0; i < levels; ++i) {
            const int base = dim_of(L[i + 1], p);
            auto part = [&](const Mat& m) { return preimage_in(L[i], m, L[i + 1], D, p); };
            auto ker = [&](const Mat& P) { return dim_of(preimage_in(P, S.lambda_map, L[i + 2], D, p), p) - base; };
            // preimages contain L[i+1] only through L[i]; add it explicitly
            auto with_next = [&](const Mat& P) { return sum_of(P, L[i + 1], p); };
            Mat Pp = with_next(part(sp)), Pm = with_next(part(sm)), Pmm = with_next(part(smm));
            out.graded[i] = {dim_of(Pp, p) - base, dim_of(Pm, p) - base, dim_of(Pmm, p) - base};
            out.lambda_kernels[i] = {ker(Pp), ker(Pm), ker(Pmm)};
        }
    }

    // Maps out of each graded piece, grouped as in the rank bookkeeping.
    out.ker_theta1 = out.lambda_kernels[0].plus + out.lambda_kernels[0].minus;
    out.ker_theta2 = out.lambda_kernels[0].minus_minus;
    out.ker_alpha1 = out.lambda_kernels[1].minus;
    out.ker_alpha2 = out.lambda_kernels[1].plus;
    out.ker_alpha3 = out.lambda_kernels[1].minus_minus;
    out.ker_beta1 = out.lambda_kernels[2].plus + out.lambda_kernels[2].minus;
    out.ker_beta2 = out.lambda_kernels[2].minus_minus;
    return out;
}

SigmaCheck verify_sigma(const FiltrationModule& S)
{
    SigmaCheck res;
    OracleCheck& c = res.check;
    const int p = 5;
    const int D = S.dim;
    const std::string tag = "e=" + seq_str(S.exponents) + ": ";
    const SigmaDecomposition dec = sigma_decompose(S);
    const RankProfile prof = brute_rank_profile(S);

    c.expect(dec.whole.plus + dec.whole.minus + dec.whole.minus_minus == dec.order_exponent,
             tag + "|S| != |S+| |S-| |S--|");
    c.expect(dec.ker_theta1 + dec.ker_theta2 == prof.s[0], tag + "theta kernels do not add up to s1");
    c.expect(dec.ker_alpha1 + dec.ker_alpha2 + dec.ker_alpha3 == prof.s[1], tag + "alpha kernels do not add up to s2");
    c.expect(dec.ker_beta1 + dec.ker_beta2 == prof.s[2], tag + "beta kernels do not add up to s3");

    int plus_sum = 0;
    for (const auto& g : dec.graded) plus_sum += g.plus;
    c.expect(plus_sum == dec.whole.plus, tag + "rank S+ differs from the sum over graded pieces");
    c.expect(dec.graded[0].plus + dec.graded[0].minus + dec.graded[0].minus_minus == prof.t, tag + "rank S/lambda S != t");
    c.expect(dec.whole.plus <= dec.graded[0].plus + prof.t - prof.s[0], tag + "rank S+ exceeds rank (S/lambda S)+ + t - s1");

    // (1 + sigma + sigma^2 + sigma^3) / 4 projects onto S+.
    const Mat& s = *S.sigma;
    Mat s2 = fp::multiply(s, s, p), s3 = fp::multiply(s2, s, p);
    Mat avg = fp::identity(D);
    for (const Mat* m : {&s, static_cast<const Mat*>(&s2), static_cast<const Mat*>(&s3)})
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) avg[i][j] = (avg[i][j] + (*m)[i][j]) % p;
    avg = scale(avg, fp::inverse(4, p), p);
    c.expect(fp::multiply(avg, avg, p) == avg, tag + "averaging operator is not idempotent");
    Mat img = fp::rref(fp::transpose(avg, D), p).rows;  // column space
    Mat fixed = fp::kernel(sigma_minus(S, 1), D, p);
    c.expect(dim_of(img, p) == dec.whole.plus && dim_of(sum_of(img, fixed, p), p) == dec.whole.plus,
             tag + "averaging image differs from S+");

    // sigma^2 lambda + lambda sigma^2 maps S into lambda^2 S; sigma lambda^2 + lambda^2 sigma into lambda^3 S.
    const Mat& lam = S.lambda_map;
    Mat lam2 = fp::multiply(lam, lam, p), lam3 = fp::multiply(lam2, lam, p);
    Mat L2 = image_of(lam2, fp::identity(D), p), L3 = image_of(lam3, fp::identity(D), p);
    Mat c1 = add(fp::multiply(s2, lam, p), fp::multiply(lam, s2, p), p);
    Mat c2 = add(fp::multiply(s, lam2, p), fp::multiply(lam2, s, p), p);
    bool cong1 = true, cong2 = true;
    for (const auto& e : fp::identity(D)) {
        Vec v1 = fp::mul(c1, e, p), v2 = fp::mul(c2, e, p);
        if (!fp::in_span(L2, v1, p)) cong1 = false;
        if (!fp::in_span(L3, v2, p)) cong2 = false;
    }
    c.expect(cong1, tag + "sigma^2 lambda != -lambda sigma^2 mod lambda^2 S");
    c.expect(cong2, tag + "sigma lambda^2 != -lambda^2 sigma mod lambda^3 S");

    res.plus_rank = dec.whole.plus;
    res.chain_value = dec.graded[0].plus + prof.t -
                      (dec.ker_theta1 + dec.ker_theta2 + dec.ker_alpha1 + dec.ker_alpha3 + dec.ker_beta2 + dec.graded[3].minus);
    res.rank_chain_holds = res.chain_value == res.plus_rank;
    return res;
}

std::vector<std::vector<int>> exponent_multisets(int ell, int max_t)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_t) return;
        for (int e = lo; e <= ell - 1; ++e) {
            cur.push_back(e);
            rec(e);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace qgenus
