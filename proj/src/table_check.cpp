#include "qgenus/table_check.hpp"

#include "qgenus/descent.hpp"
#include "qgenus/genus.hpp"

#include <sstream>

namespace qgenus {

namespace {

std::string interval_str(const Interval& i)
{
    return "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]";
}

RowCheck check_sk_row(const FixtureRow& row, std::optional<SpecialFamily> expected_family)
{
    RowCheck rc;
    rc.key = row.key();
    rc.n = row.n;
    rc.listed_rank = row.rank();
    const GenusAnalysis a = analyze(row.n, false);
    const RankReport& r = a.report;

    if (r.bounds_strong.contains(rc.listed_rank))
        rc.branch = Branch::Strong;
    else if (r.bounds_nonstrong.contains(rc.listed_rank))
        rc.branch = Branch::NonStrong;
    else
        rc.branch = Branch::Outside;

    std::ostringstream d;
    d << "t=" << r.t << " q*=" << r.qstar << " s1=" << r.s1_strong << " strong" << interval_str(r.bounds_strong)
      << " non-strong" << interval_str(r.bounds_nonstrong);

    if (row.nf) {
        const int nf = a.rad.g + (a.rad.v5 > 0 ? 1 : 0);
        if (nf != *row.nf) {
            if (row.nf_suspected_typo)
                d << " n(f): listed " << *row.nf << ", computed " << nf << " (suspected typo)";
            else {
                rc.nf_ok = false;
                d << " n(f) MISMATCH listed " << *row.nf << " computed " << nf;
            }
        }
    }

    if (expected_family && (!r.matched || r.matched->family != *expected_family)) {
        rc.prediction_ok = false;
        d << " expected family " << to_string(*expected_family) << " not matched";
    }
    if (r.matched) {
        const SpecialCase& sc = *r.matched;
        const bool same = sc.t == r.t && sc.s1 == r.s1_strong && sc.bounds == r.bounds_strong;
        d << " family=" << to_string(sc.family);
        if (!same) {
            rc.prediction_ok = false;
            d << " PREDICTION MISMATCH predicted t=" << sc.t << " s1=" << sc.s1 << " " << interval_str(sc.bounds);
        }
    }
    rc.pass = rc.branch != Branch::Outside && rc.nf_ok && rc.prediction_ok;
    rc.detail = d.str();
    return rc;
}

RowCheck check_sl_row(const FixtureRow& row, const std::map<std::int64_t, int>& known)
{
    RowCheck rc;
    rc.key = row.key();
    rc.n = row.n;
    rc.listed_rank = row.rank();
    const GenusAnalysis a = analyze(row.n, false);
    std::optional<int> sk;
    if (auto it = known.find(row.n); it != known.end()) sk = it->second;

    const DescentReport strong = descent_report(a, true, std::nullopt);
    const DescentReport loose = descent_report(a, false, sk);
    const auto in = [&](const DescentReport& d) { return d.sl_lower <= rc.listed_rank && rc.listed_rank <= d.sl_upper; };
    if (in(strong))
        rc.branch = Branch::Strong;
    else if (in(loose))
        rc.branch = Branch::NonStrong;
    else
        rc.branch = Branch::Outside;

    std::ostringstream d;
    d << "t=" << a.t << " s1=" << a.report.s1_strong << " r=" << loose.r << " w=" << loose.w << " S_L strong["
      << strong.sl_lower << "," << strong.sl_upper << "] non-strong[" << loose.sl_lower << "," << loose.sl_upper << "]";
    if (sk) d << " (S_K rank " << *sk << " pins s1 in {" << [&] {
        std::string s;
        for (size_t i = 0; i < loose.s1_candidates.size(); ++i) s += (i ? "," : "") + std::to_string(loose.s1_candidates[i]);
        return s;
    }() << "})";
    if (loose.cyclic_pattern) {
        d << " cyclic-pattern";
        if (rc.listed_rank > 1) {
            rc.prediction_ok = false;
            d << " CONTRADICTED";
        }
    }
    rc.pass = rc.branch != Branch::Outside && rc.prediction_ok;
    rc.detail = d.str();
    return rc;
}

}  // namespace

std::string to_string(Branch b)
{
    switch (b) {
    case Branch::Strong: return "strong";
    case Branch::NonStrong: return "non-strong";
    case Branch::Outside: return "outside";
    }
    return "?";
}

int TableCheck::failures() const
{
    int f = 0;
    for (const auto& r : rows) f += r.pass ? 0 : 1;
    return f;
}

std::vector<std::int64_t> TableCheck::non_strong_rows() const
{
    std::vector<std::int64_t> out;
    for (const auto& r : rows)
        if (r.branch == Branch::NonStrong) out.push_back(r.n);
    return out;
}

TableCheck check_table(const TableFixture& table, const std::map<std::int64_t, int>& known_sk_ranks)
{
    TableCheck tc;
    tc.id = table.id;
    for (const auto& row : table.rows) {
        switch (table.id) {
        case 1: tc.rows.push_back(check_sk_row(row, std::nullopt)); break;
        case 2: tc.rows.push_back(check_sk_row(row, SpecialFamily::SingleMinusOneMod5)); break;
        case 3: tc.rows.push_back(check_sk_row(row, SpecialFamily::SevenMod25TimesMinusOne)); break;
        default: tc.rows.push_back(check_sl_row(row, known_sk_ranks)); break;
        }
    }
    return tc;
}

}  // namespace qgenus
