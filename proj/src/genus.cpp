#include "qgenus/genus.hpp"

#include "qgenus/errors.hpp"
#include "qgenus/hilbert_symbol.hpp"
#include "qgenus/lambda5.hpp"

#include <algorithm>
#include <sstream>

namespace qgenus {

namespace {

constexpr int P = 5;

bool is_zero_vec(const fp::Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::string label_of(const SUnitBasis& basis, const ExponentVector& v)
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < basis.size(); ++k) {
        if (v[k] == 0) continue;
        if (!first) os << " * ";
        os << basis.names[k];
        if (v[k] != 1) os << "^" << v[k];
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

// Map y -> (lambda exponent, sum y_k psi(B_k)) whose kernel is genus_kernel.
fp::Mat kernel_equations(const Radicand& rad, const SUnitBasis& basis)
{
    const int n = basis.size();
    fp::Mat eq(5, fp::Vec(n, 0));
    for (int k = 0; k < n; ++k) {
        if (k == basis.lambda_index()) {
            eq[0][k] = 1;
            continue;
        }
        UnitCoords c = lambda5_unit_coords(basis.elements[k]);
        for (int i = 0; i < 4; ++i) eq[1 + i][k] = c[i];
    }
    (void)rad;
    return eq;
}

bool in_kernel(const fp::Mat& eq, const ExponentVector& v)
{
    return is_zero_vec(fp::mul(eq, v, P));
}

void check_generator(const GenusGenerator& g)
{
    if (!is_fifth_power_unit_class(g.value))
        throw consistency_error("genus generator " + g.label + " is not a fifth power modulo lambda^5");
}

}  // namespace

QStarResult compute_qstar(const Radicand& rad)
{
    fp::Mat rows;
    for (const auto& rp : rad.primes) {
        auto ch = unit_characters(rp.prime.rf);
        rows.push_back({ch[0], ch[1]});
    }
    QStarResult out;
    fp::Mat ker = rows.empty() ? fp::Mat{{1, 0}, {0, 1}} : fp::kernel(rows, 2, P);
    for (auto& v : ker) out.common_subgroup.basis.push_back({v[0], v[1]});
    out.qstar = out.common_subgroup.dim();
    return out;
}

int compute_t(const Radicand& rad, const QStarResult& qs)
{
    int t = rad.d - 3 + qs.qstar;
    if (t < 0)
        throw consistency_error("compute_t: negative ambiguous rank for n = " + std::to_string(rad.n));
    return t;
}

SUnitBasis s_unit_basis(const Radicand& rad)
{
    SUnitBasis b;
    b.elements.push_back(CycInt::zeta());
    b.names.push_back("z");
    b.elements.push_back(CycInt::one_plus_zeta());
    b.names.push_back("(1+z)");
    for (const auto& rp : rad.primes) {
        b.elements.push_back(rp.prime.element);
        b.names.push_back("(" + rp.prime.element.str() + ")");
    }
    b.elements.push_back(CycInt::lambda());
    b.names.push_back("(1-z)");
    return b;
}

ExponentVector radicand_vector(const Radicand& rad)
{
    ExponentVector v(rad.g + 3, 0);
    v[0] = rad.unit_class.a;
    v[1] = rad.unit_class.b;
    for (int j = 0; j < rad.g; ++j) v[2 + j] = rad.primes[j].exponent % 5;
    v[rad.g + 2] = rad.e_lambda;
    return v;
}

ExponentVector rational_prime_vector(const Radicand& rad, std::int64_t p)
{
    ExponentVector v(rad.g + 3, 0);
    CycInt rest(p);
    if (p == 5) {
        rest = *exact_div(rest, pow(CycInt::lambda(), 4));
        v[rad.g + 2] = 4;
    } else {
        bool any = false;
        for (int j = 0; j < rad.g; ++j) {
            if (rad.primes[j].prime.p != p) continue;
            auto q = exact_div(rest, rad.primes[j].prime.element);
            if (!q) throw consistency_error("rational_prime_vector: prime does not divide p");
            rest = *q;
            v[2 + j] = 1;
            any = true;
        }
        if (!any) throw invalid_input("rational_prime_vector: p does not divide the radicand");
    }
    UnitClass u = unit_class_mod_fifth_powers(rest);
    v[0] = u.a;
    v[1] = u.b;
    return v;
}

CycInt realize(const SUnitBasis& basis, const ExponentVector& v)
{
    CycInt x(1);
    for (int k = 0; k < basis.size(); ++k)
        if (v[k]) x *= pow(basis.elements[k], static_cast<unsigned>(fp::normalize(v[k], P)));
    return x;
}

std::string to_string(GeneratorMethod m)
{
    return m == GeneratorMethod::PrimePairing ? "prime-pairing" : "kernel-search";
}

fp::Mat genus_kernel(const Radicand& rad)
{
    SUnitBasis basis = s_unit_basis(rad);
    return fp::kernel(kernel_equations(rad, basis), basis.size(), P);
}

GenusGenerators kernel_search_generators(const Radicand& rad)
{
    const SUnitBasis basis = s_unit_basis(rad);
    const int dim = basis.size();
    const fp::Mat eq = kernel_equations(rad, basis);
    const fp::Mat ker = fp::kernel(eq, dim, P);
    const ExponentVector vx = radicand_vector(rad);

    // Rational primes dividing n, and the subspace they span.
    std::vector<std::int64_t> ps;
    fp::Mat rational_rows;
    for (const auto& [p, e] : rad.rational_factors) {
        ps.push_back(p);
        rational_rows.push_back(rational_prime_vector(rad, p));
    }
    // Adding units and primes fixed by z -> z^4 gives the second tier.
    fp::Mat shaped_rows = rational_rows;
    for (int k = 0; k < 2; ++k) {
        ExponentVector e(dim, 0);
        e[k] = 1;
        shaped_rows.push_back(e);
    }
    for (int j = 0; j < rad.g; ++j)
        if (is_sigma2_fixed(rad.primes[j].prime.element)) {
            ExponentVector e(dim, 0);
            e[2 + j] = 1;
            shaped_rows.push_back(e);
        }

    fp::IndependentSet chosen(dim, P);
    if (in_kernel(eq, vx)) chosen.add(vx);

    GenusGenerators out;
    out.method = GeneratorMethod::KernelSearch;

    auto take_rational = [&](const ExponentVector& v) {
        // Write v as a combination of the rational prime vectors (they have
        // disjoint support, so the coefficients are unique).
        fp::Mat sys = fp::transpose(rational_rows, dim);
        for (size_t r = 0; r < sys.size(); ++r) sys[r].push_back(fp::normalize(-v[r], P));
        fp::Mat sol = fp::kernel(sys, static_cast<int>(rational_rows.size()) + 1, P);
        for (const auto& s : sol) {
            int last = s.back();
            if (last == 0) continue;
            int inv = fp::inverse(last, P);
            CycInt value(1);
            std::ostringstream label;
            bool first = true;
            for (size_t i = 0; i < ps.size(); ++i) {
                int c = s[i] * inv % P;
                if (!c) continue;
                value *= pow(CycInt(ps[i]), static_cast<unsigned>(c));
                label << (first ? "" : " * ") << ps[i];
                if (c != 1) label << "^" << c;
                first = false;
            }
            return GenusGenerator{v, value, first ? "1" : label.str()};
        }
        throw consistency_error("kernel_search_generators: rational vector not in rational span");
    };

    for (const auto& v : fp::intersect(ker, rational_rows, dim, P))
        if (chosen.add(v)) out.generators.push_back(take_rational(v));
    for (const auto& v : fp::intersect(ker, shaped_rows, dim, P))
        if (chosen.add(v)) out.generators.push_back({v, realize(basis, v), label_of(basis, v)});
    for (const auto& v : ker)
        if (chosen.add(v)) out.generators.push_back({v, realize(basis, v), label_of(basis, v)});

    for (const auto& g : out.generators) check_generator(g);
    return out;
}

GenusGenerators prime_pairing_generators(const Radicand& rad)
{
    for (const auto& rp : rad.primes)
        if (!rp.prime.normalized)
            throw invalid_input("prime_pairing_generators: prime " + rp.prime.element.str() + " is not normalised");

    const SUnitBasis basis = s_unit_basis(rad);
    const int dim = basis.size();
    const fp::Mat eq = kernel_equations(rad, basis);
    const ExponentVector vx = radicand_vector(rad);

    // A normalised prime is a rational integer times 1 + O(lambda^4), so its
    // class lies on the line spanned by 1 + lambda^4.
    std::vector<int> c(rad.g);
    std::vector<int> qualifying, rest;
    for (int j = 0; j < rad.g; ++j) {
        UnitCoords u = lambda5_unit_coords(rad.primes[j].prime.element);
        if (u[0] || u[1] || u[2])
            throw consistency_error("prime_pairing_generators: normalised prime off the 1 + lambda^4 line");
        c[j] = u[3];
        (c[j] == 0 ? qualifying : rest).push_back(j);
    }

    std::vector<ExponentVector> candidates;
    for (int j : qualifying) {
        ExponentVector e(dim, 0);
        e[2 + j] = 1;
        candidates.push_back(e);
    }
    if (!rest.empty()) {
        const int f0 = rest.front();
        for (size_t k = 1; k < rest.size(); ++k) {
            const int i = rest[k];
            int h = 0;
            for (int cand = 1; cand <= 4 && !h; ++cand)
                if ((c[f0] + cand * c[i]) % P == 0) h = cand;
            if (!h) throw consistency_error("prime_pairing_generators: no exponent h pairs the primes");
            ExponentVector e(dim, 0);
            e[2 + f0] = 1;
            e[2 + i] = h;
            candidates.push_back(e);
        }
    }

    fp::IndependentSet chosen(dim, P);
    if (in_kernel(eq, vx)) chosen.add(vx);
    GenusGenerators out;
    out.method = GeneratorMethod::PrimePairing;
    for (const auto& v : candidates) {
        if (!in_kernel(eq, v)) throw consistency_error("prime_pairing_generators: candidate outside kernel");
        if (chosen.add(v)) out.generators.push_back({v, realize(basis, v), label_of(basis, v)});
    }
    for (const auto& g : out.generators) check_generator(g);
    return out;
}

GenusGenerators genus_generators(const Radicand& rad, int t)
{
    GenusGenerators general = kernel_search_generators(rad);
    const bool all_normalized =
        std::all_of(rad.primes.begin(), rad.primes.end(), [](const RadicandPrime& rp) { return rp.prime.normalized; });

    GenusGenerators chosen = general;
    if (all_normalized) {
        GenusGenerators fast = prime_pairing_generators(rad);
        // Both routes must span the same space modulo n.
        const int dim = rad.g + 3;
        const ExponentVector vx = radicand_vector(rad);
        fp::Mat a{vx}, b{vx};
        for (const auto& g : fast.generators) a.push_back(g.exponents);
        for (const auto& g : general.generators) b.push_back(g.exponents);
        const int ra = fp::rank(a, P);
        if (fast.count() != general.count() || ra != fp::rank(b, P) ||
            fp::span_dim(fp::intersect(a, b, dim, P), P) != ra)
            throw consistency_error("genus_generators: prime-pairing and kernel-search routes disagree for n = " +
                                    std::to_string(rad.n));
        chosen = std::move(fast);
    }
    if (chosen.count() != t)
        throw consistency_error("genus_generators: kernel dimension " + std::to_string(chosen.count()) +
                                " differs from Hasse count t = " + std::to_string(t) +
                                " for n = " + std::to_string(rad.n));
    return chosen;
}

int C1Matrix::rank() const
{
    return entries.empty() ? 0 : fp::rank(entries, P);
}

C1Matrix build_c1(const Radicand& rad, const GenusGenerators& gens, const QStarResult& qs)
{
    const SUnitBasis basis = s_unit_basis(rad);
    const int dim = basis.size();
    const int lam = basis.lambda_index();
    const ExponentVector vx = radicand_vector(rad);

    C1Matrix m;
    m.rows = gens.count();
    m.has_wild_column = rad.lambda_ramifies;
    m.cols = rad.g + (m.has_wild_column ? 1 : 0);
    m.extra_cols_possible = qs.qstar;
    m.entries.assign(m.rows, fp::Vec(m.cols, 0));

    std::vector<int> wild(m.rows, 0);
    for (int j = 0; j < rad.g; ++j) {
        const FPrime& pj = rad.primes[j].prime;
        // T[k][l] = (B_k, B_l) at pi_j; only columns used by n and lambda matter.
        std::vector<int> needed;
        for (int l = 0; l < dim; ++l)
            if (vx[l] || l == lam) needed.push_back(l);
        fp::Mat T(dim, fp::Vec(dim, 0));
        for (int k = 0; k < dim; ++k)
            for (int l : needed) T[k][l] = tame_hilbert_symbol(basis.elements[k], basis.elements[l], pj);
        for (int i = 0; i < m.rows; ++i) {
            const auto& y = gens.generators[i].exponents;
            long e = 0, w = 0;
            for (int k = 0; k < dim; ++k) {
                if (!y[k]) continue;
                for (int l = 0; l < dim; ++l) e += static_cast<long>(y[k]) * vx[l] * T[k][l];
                w += static_cast<long>(y[k]) * T[k][lam];
            }
            m.entries[i][j] = fp::normalize(e, P);
            wild[i] = fp::normalize(wild[i] + w, P);
        }
    }
    if (m.has_wild_column)
        for (int i = 0; i < m.rows; ++i) m.entries[i][rad.g] = fp::normalize(-wild[i], P);
    return m;
}

C1Matrix build_c1_direct(const Radicand& rad, const GenusGenerators& gens, const QStarResult& qs)
{
    C1Matrix m;
    m.rows = gens.count();
    m.has_wild_column = rad.lambda_ramifies;
    m.cols = rad.g + (m.has_wild_column ? 1 : 0);
    m.extra_cols_possible = qs.qstar;
    m.entries.assign(m.rows, fp::Vec(m.cols, 0));
    const CycInt n(rad.n);
    for (int i = 0; i < m.rows; ++i) {
        const CycInt& x = gens.generators[i].value;
        for (int j = 0; j < rad.g; ++j) m.entries[i][j] = tame_hilbert_symbol(x, n, rad.primes[j].prime);
        if (m.has_wild_column) m.entries[i][rad.g] = wild_symbol_at_lambda(x, CycInt::lambda());
    }
    return m;
}

std::string to_string(SpecialFamily f)
{
    switch (f) {
    case SpecialFamily::SevenMod25Products: return "pm7-mod25-products";
    case SpecialFamily::MixedRamifiedLambda: return "pm7-with-pm2-lambda-ramified";
    case SpecialFamily::MixedUnramifiedLambda: return "pm7-with-pm2-lambda-unramified";
    case SpecialFamily::SingleMinusOneMod5: return "single-prime-minus1-mod5";
    case SpecialFamily::SevenMod25TimesMinusOne: return "pm7-mod25-times-minus1-mod5";
    }
    return "?";
}

Interval rank_bounds(int t, int s1)
{
    return {2 * t - s1, 4 * t - 3 * s1};
}

std::optional<SpecialCase> classify_special_case(const Radicand& rad)
{
    if (rad.v5 > 0) return std::nullopt;
    int r = 0, s = 0, m = 0;
    int total_exponent = 0;
    for (const auto& [p, e] : rad.rational_factors) {
        total_exponent += e;
        const int p25 = static_cast<int>(p % 25);
        const int p5 = static_cast<int>(p % 5);
        if (p5 == 1) return std::nullopt;
        if (p25 == 7 || p25 == 18)
            ++r;
        else if (p5 == 2 || p5 == 3)
            ++s;
        else
            ++m;
    }
    const int n25 = static_cast<int>(rad.n % 25);
    const bool n_fifth_class = n25 == 1 || n25 == 7 || n25 == 18 || n25 == 24;

    SpecialCase sc{};
    sc.r = r;
    sc.s = s;
    if (m > 0) {
        if (m == 1 && r == 0 && s == 0 && total_exponent == 1) {
            sc.family = SpecialFamily::SingleMinusOneMod5;
            sc.t = 1;
            sc.s1 = 0;
            sc.bounds = {2, 4};
            return sc;
        }
        if (m == 1 && r == 1 && s == 0 && total_exponent == 2) {
            sc.family = SpecialFamily::SevenMod25TimesMinusOne;
            sc.t = 2;
            sc.s1 = 1;
            sc.bounds = {3, 5};
            return sc;
        }
        return std::nullopt;
    }
    if (s == 0) {
        if (r < 2) return std::nullopt;
        sc.family = SpecialFamily::SevenMod25Products;
        sc.t = r - 1;
        sc.s1 = 0;
        sc.bounds = {2 * r - 2, 4 * r - 4};
        sc.nonstrong_floor = std::max(2 * r - 4, r - 1);
        return sc;
    }
    if (!n_fifth_class) {
        sc.family = SpecialFamily::MixedRamifiedLambda;
        sc.t = r + s - 1;
        sc.s1 = 0;
        sc.bounds = {2 * (r + s) - 2, 4 * (r + s) - 4};
        sc.nonstrong_floor = std::max(2 * r + 2 * s - 3, r + s - 1);
        return sc;
    }
    if (s >= 2) {
        sc.family = SpecialFamily::MixedUnramifiedLambda;
        sc.t = r + s - 2;
        sc.s1 = 0;
        sc.bounds = {2 * (r + s) - 4, 4 * (r + s) - 8};
        sc.nonstrong_floor = std::max(2 * r + 2 * s - 5, r + s - 2);
        return sc;
    }
    return std::nullopt;
}

GenusAnalysis analyze(std::int64_t n, bool assume_strong)
{
    GenusAnalysis a;
    a.rad = factor_radicand(n);
    a.qs = compute_qstar(a.rad);
    a.t = compute_t(a.rad, a.qs);
    a.gens = genus_generators(a.rad, a.t);
    a.c1 = build_c1(a.rad, a.gens, a.qs);

    RankReport& r = a.report;
    r.n = n;
    r.t = a.t;
    r.qstar = a.qs.qstar;
    r.d = a.rad.d;
    r.g = a.rad.g;
    r.lambda_ramifies = a.rad.lambda_ramifies;
    r.assume_strong = assume_strong;
    r.s1_strong = a.c1.rank();
    r.s1_range_nonstrong = {r.s1_strong, std::min(r.t, r.s1_strong + a.c1.extra_cols_possible)};
    r.lambda2_rank_strong = r.t - r.s1_strong;
    r.bounds_strong = rank_bounds(r.t, r.s1_strong);
    // Union of [2t - s, 4t - 3s] over the s1 range; consecutive intervals overlap.
    r.bounds_nonstrong = {2 * r.t - r.s1_range_nonstrong.hi, 4 * r.t - 3 * r.s1_range_nonstrong.lo};
    r.matched = classify_special_case(a.rad);
    if (r.matched && r.matched->nonstrong_floor)
        r.bounds_nonstrong.lo = std::max(r.bounds_nonstrong.lo, *r.matched->nonstrong_floor);

    if (r.s1_strong < 0 || r.s1_strong > r.t || r.bounds_strong.lo > r.bounds_strong.hi)
        throw consistency_error("rank report invariants violated for n = " + std::to_string(n));
    return a;
}

RankReport rank_report(std::int64_t n, bool assume_strong)
{
    return analyze(n, assume_strong).report;
}

}  // namespace qgenus
