#include "properties.hpp"

#include "qgenus/descent.hpp"
#include "qgenus/filtration.hpp"
#include "qgenus/fixtures.hpp"
#include "qgenus/genus.hpp"
#include "qgenus/hilbert_symbol.hpp"
#include "qgenus/lambda5.hpp"
#include "qgenus/table_check.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace qgenus;

namespace {

// Pinned budgets and sizes.
constexpr double kExamplesSeconds = 1.0;
constexpr double kTable1Seconds = 10.0;
constexpr double kOracleSeconds = 60.0;
constexpr double kHasseSeconds = 120.0;
constexpr int kSynthesizedRadicands = 200;
constexpr std::int64_t kSynthesisPrimeBound = 1000;
constexpr int kRandomSigmaModules = 60;
constexpr std::int64_t kHasseLimit = 500;
constexpr int kPropertyCases = 10000;
constexpr int kExpectedWildExponent = 4;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool fifth_power_free(std::int64_t n)
{
    for (auto [p, e] : factor_integer(n))
        if (e >= 5) return false;
    return true;
}

Outcome worked_examples()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream d;
    bool ok = true;
    auto check = [&](bool c, const std::string& what) {
        if (!c) {
            ok = false;
            d << what << "; ";
        }
    };
    const RankReport r7 = rank_report(7, false);
    check(r7.t == 0 && r7.bounds_nonstrong == Interval{0, 0}, "n=7 not trivial");
    check(rank_report(18, false).t == 0, "n=18 t != 0");
    const RankReport r11 = rank_report(11, true);
    check(r11.t == 2 && r11.qstar == 0, "n=11 t/q*");
    check(r11.s1_strong == 2 && r11.bounds_strong == Interval{2, 2} && r11.bounds_nonstrong == Interval{2, 2},
          "n=11 rank not exactly 2");
    const RankReport r19 = rank_report(19, false);
    check(r19.t == 1 && r19.qstar == 1, "n=19 t/q*");
    const RankReport r42 = rank_report(42, false);
    check(r42.t == 2 && r42.qstar == 1, "n=42 t/q*");
    const double secs = seconds_since(t0);
    check(secs < kExamplesSeconds, "too slow");
    d << "n=7,18,11,19,42 in " << secs << " s";
    return {ok, d.str()};
}

Outcome wild_symbol_fixture()
{
    const CycInt p1(2, 1, 0, 0), p2(1, 1, -1, 0), p3(1, 1, 2, 0), p4(1, -1, 0, 1);
    const CycInt x1 = pow(p1, 2) * pow(p2, 3) * pow(p3, 3) * pow(p4, 2);
    const CycInt x2 = -(pow(p1, 4) * p2 * p3 * pow(p4, 4));
    const CycInt lam = CycInt::lambda();
    const int w1 = wild_symbol_at_lambda(x1, lam), w2 = wild_symbol_at_lambda(x2, lam);
    std::ostringstream d;
    d << "(x1,lambda)=" << w1 << " (x2,lambda)=" << w2 << " expected " << kExpectedWildExponent
      << "; x_i fifth powers mod lambda^5: " << is_fifth_power_unit_class(x1) << is_fifth_power_unit_class(x2);
    return {w1 == kExpectedWildExponent && w2 == kExpectedWildExponent, d.str()};
}

Outcome table1_containment()
{
    const auto t0 = std::chrono::steady_clock::now();
    const TableCheck tc = check_table(load_table(1));
    int outside = 0;
    for (const auto& r : tc.rows) outside += r.branch == Branch::Outside ? 1 : 0;
    const auto ns = tc.non_strong_rows();
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << tc.rows.size() << " rows, " << outside << " outside both branches, " << ns.size()
      << " need the non-strong branch (";
    for (size_t i = 0; i < ns.size(); ++i) d << (i ? " " : "") << ns[i];
    d << "), " << secs << " s";
    const bool only_301 = ns == std::vector<std::int64_t>{301};
    return {outside == 0 && only_301 && secs < kTable1Seconds, d.str()};
}

Outcome family_reproduction()
{
    std::ostringstream d;
    int bad2 = 0, bad3 = 0;
    for (const auto& row : load_table(2).rows) {
        const RankReport r = rank_report(row.n, true);
        const bool ok = r.t == 1 && r.s1_strong == 0 && r.lambda2_rank_strong == 1 && r.bounds_strong == Interval{2, 4} &&
                        r.bounds_strong.contains(row.rank());
        bad2 += ok ? 0 : 1;
    }
    std::set<int> s1_seen;
    for (const auto& row : load_table(3).rows) {
        const RankReport r = rank_report(row.n, true);
        s1_seen.insert(r.s1_strong);
        const bool ok = r.t == 2 && r.s1_strong == 1 && r.bounds_strong == Interval{3, 5} && r.bounds_strong.contains(row.rank());
        bad3 += ok ? 0 : 1;
    }
    d << "second table " << bad2 << " mismatches; third table " << bad3 << " mismatches (pipeline s1 in {";
    bool first = true;
    for (int s : s1_seen) {
        d << (first ? "" : ",") << s;
        first = false;
    }
    d << "})";
    return {bad2 == 0 && bad3 == 0, d.str()};
}

Outcome special_case_consistency()
{
    std::vector<std::int64_t> pm7, pm2, m1;
    for (std::int64_t p = 2; p < kSynthesisPrimeBound; ++p) {
        if (!is_prime(p) || p == 5) continue;
        if (p % 25 == 7 || p % 25 == 18)
            pm7.push_back(p);
        else if (p % 5 == 2 || p % 5 == 3)
            pm2.push_back(p);
        else if (p % 5 == 4)
            m1.push_back(p);
    }
    std::mt19937_64 rng(2024);
    auto pick = [&](const std::vector<std::int64_t>& v) { return v[rng() % v.size()]; };
    auto mod25 = [](std::int64_t n) { return static_cast<int>(n % 25); };
    auto unram = [&](std::int64_t n) {
        const int m = mod25(n);
        return m == 1 || m == 24 || m == 7 || m == 18;
    };

    const std::vector<std::pair<SpecialFamily, std::function<std::int64_t()>>> makers = {
        {SpecialFamily::SevenMod25Products,
         [&] {
             const int r = 2 + static_cast<int>(rng() % 2);
             std::set<std::int64_t> ps;
             while (static_cast<int>(ps.size()) < r) ps.insert(pick(pm7));
             std::int64_t n = 1;
             for (auto p : ps) n *= p;
             return n;
         }},
        {SpecialFamily::MixedRamifiedLambda,
         [&]() -> std::int64_t {
             const std::int64_t n = pick(pm7) * pick(pm2);
             return unram(n) ? 0 : n;
         }},
        {SpecialFamily::MixedUnramifiedLambda,
         [&]() -> std::int64_t {
             const std::int64_t a = pick(pm2), b = pick(pm2);
             if (a == b) return 0;
             const std::int64_t n = a * b * (rng() % 2 ? pick(pm7) : 1);
             return unram(n) ? n : 0;
         }},
        {SpecialFamily::SingleMinusOneMod5, [&] { return pick(m1); }},
        {SpecialFamily::SevenMod25TimesMinusOne, [&] { return pick(pm7) * pick(m1); }},
    };

    // Equal shares per family; a family with too few radicands below the prime
    // bound hands its shortfall to the next ones.
    const int families = static_cast<int>(makers.size());
    std::vector<std::set<std::int64_t>> used(families);
    std::map<std::string, int> mismatches;
    std::string example;
    auto fill = [&](int f, int target) {
        const auto& [family, make] = makers[f];
        for (int attempts = 0; static_cast<int>(used[f].size()) < target && attempts < 20000; ++attempts) {
            const std::int64_t n = make();
            if (n < 2 || used[f].count(n) || !fifth_power_free(n)) continue;
            const auto sc = classify_special_case(factor_radicand(n));
            if (!sc || sc->family != family) continue;
            used[f].insert(n);
            const RankReport r = rank_report(n, true);
            if (r.t != sc->t || r.s1_strong != sc->s1 || !(r.bounds_strong == sc->bounds)) {
                if (mismatches[to_string(family)]++ == 0 && example.empty())
                    example = " e.g. n=" + std::to_string(n) + " predicted s1=" + std::to_string(sc->s1) +
                              " pipeline s1=" + std::to_string(r.s1_strong);
            }
        }
    };
    auto total_used = [&] {
        int t = 0;
        for (const auto& u : used) t += static_cast<int>(u.size());
        return t;
    };
    for (int f = 0; f < families; ++f) fill(f, kSynthesizedRadicands / families);
    for (int f = 0; f < families && total_used() < kSynthesizedRadicands; ++f)
        fill(f, static_cast<int>(used[f].size()) + kSynthesizedRadicands - total_used());
    const int total = total_used();

    std::ostringstream d;
    d << total << " radicands;";
    int bad = 0;
    for (const auto& [f, c] : mismatches) {
        d << " " << f << ": " << c << " mismatches;";
        bad += c;
    }
    if (bad == 0) d << " no mismatches";
    d << example;
    return {bad == 0 && total == kSynthesizedRadicands, d.str()};
}

Outcome filtration_oracle()
{
    const auto t0 = std::chrono::steady_clock::now();
    int total = 0, passed = 0;
    for (auto [ell, max_t] : std::vector<std::pair<int, int>>{{5, 4}, {3, 5}, {7, 3}})
        for (const auto& e : exponent_multisets(ell, max_t)) {
            ++total;
            if (verify_rank_identities(build_filtration_module(ell, e)).ok) ++passed;
        }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << passed << "/" << total << " multisets agree, " << secs << " s";
    return {passed == total && secs < kOracleSeconds, d.str()};
}

Outcome sigma_oracle()
{
    std::mt19937_64 rng(77);
    const auto sets = exponent_multisets(5, 3);
    int passed = 0, chain = 0;
    for (int i = 0; i < kRandomSigmaModules; ++i) {
        const auto& e = sets[rng() % sets.size()];
        const auto S = build_filtration_module(5, e, {SigmaSpec::Kind::Random, rng()});
        const SigmaCheck c = verify_sigma(S);
        if (c.check.ok) ++passed;
        if (c.rank_chain_holds) ++chain;
    }
    std::ostringstream d;
    d << passed << "/" << kRandomSigmaModules << " random sigma-modules satisfy the partition and kernel identities"
      << " (closed rank chain, reported only: " << chain << "/" << kRandomSigmaModules << ")";
    return {passed == kRandomSigmaModules, d.str()};
}

Outcome descent_table4()
{
    std::map<std::int64_t, int> known;
    for (const auto& row : load_table(1).rows) known[row.n] = row.rank();
    int over = 0, cyclic_rows = 0, cyclic_bad = 0;
    for (const auto& row : load_table(4).rows) {
        std::optional<int> sk;
        if (auto it = known.find(row.n); it != known.end()) sk = it->second;
        const DescentReport d = descent_report(row.n, false, sk);
        if (row.rank() > d.sl_upper) ++over;
        if (d.cyclic_pattern) {
            ++cyclic_rows;
            if (row.rank() > 1) ++cyclic_bad;
        }
    }
    const DescentReport d301 = descent_report(301, false, known.at(301));
    std::ostringstream d;
    d << over << " rows above the upper bound; " << cyclic_bad << "/" << cyclic_rows
      << " cyclic-pattern rows with rank > 1; n=301 S_L rank <= " << d301.sl_upper;
    return {over == 0 && cyclic_bad == 0 && d301.sl_upper == 0, d.str()};
}

Outcome hasse_vs_kernel()
{
    const auto t0 = std::chrono::steady_clock::now();
    int checked = 0, bad = 0;
    std::int64_t first_bad = 0;
    for (std::int64_t n = 2; n <= kHasseLimit; ++n) {
        if (!fifth_power_free(n)) continue;
        ++checked;
        const Radicand rad = factor_radicand(n);
        const int t = compute_t(rad, compute_qstar(rad));
        const fp::Mat k = genus_kernel(rad);
        const bool vx_in = fp::span_dim(fp::intersect(k, fp::Mat{radicand_vector(rad)}, rad.g + 3, 5), 5) == 1;
        if (t != static_cast<int>(k.size()) - (vx_in ? 1 : 0)) {
            if (bad++ == 0) first_bad = n;
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << checked << " radicands, " << bad << " mismatches";
    if (bad) d << " (first n=" << first_bad << ")";
    d << ", " << secs << " s";
    return {bad == 0 && secs < kHasseSeconds, d.str()};
}

Outcome property_suites()
{
    std::ostringstream d;
    bool ok = true;
    for (const auto& r : test::all_properties(kPropertyCases, 9001)) {
        d << r.name << " " << r.cases - r.failures << "/" << r.cases << "; ";
        ok = ok && r.failures == 0 && r.cases == kPropertyCases;
    }
    return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance gate"};
    std::vector<int> expect_fail;
    app.add_option("--expect-fail", expect_fail, "criteria known to fail")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"worked examples", worked_examples},
        {"wild symbol fixture", wild_symbol_fixture},
        {"first table containment", table1_containment},
        {"family reproduction (second and third tables)", family_reproduction},
        {"special-case consistency", special_case_consistency},
        {"filtration oracle", filtration_oracle},
        {"sigma-decomposition oracle", sigma_oracle},
        {"descent and fourth table", descent_table4},
        {"Hasse count vs kernel dimension", hasse_vs_kernel},
        {"property suites", property_suites},
    };

    std::set<int> failed;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) failed.insert(id);
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ": " << o.detail << std::endl;
    }
    const std::set<int> expected(expect_fail.begin(), expect_fail.end());
    std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass";
    if (!expected.empty()) std::cout << (failed == expected ? "; failures match the expected set" : "; failures DIFFER from the expected set");
    std::cout << std::endl;
    return failed == expected ? 0 : 1;
}
