#include "qgenus/errors.hpp"
#include "qgenus/report_io.hpp"
#include "qgenus/table_check.hpp"

#include <gtest/gtest.h>

using namespace qgenus;

TEST(ReportIo, JsonRoundTrip)
{
    for (std::int64_t n : {2, 7, 11, 19, 42, 133, 301, 1001}) {
        for (bool strong : {false, true}) {
            const ReportDocument doc = make_report(n, strong, n == 301 ? std::optional<int>(1) : std::nullopt);
            const std::string text = render_json(doc);
            const ReportDocument back = parse_report_json(text);
            EXPECT_EQ(back, doc) << n;
            EXPECT_EQ(render_json(back), text);
        }
    }
}

TEST(ReportIo, OutputIsDeterministic)
{
    EXPECT_EQ(render_json(make_report(341, false)), render_json(make_report(341, false)));
    EXPECT_EQ(render_text(make_report(11, true)), render_text(make_report(11, true)));
}

TEST(ReportIo, TextMentionsBothBranches)
{
    const std::string t = render_text(make_report(42, false));
    EXPECT_NE(t.find("t=2 q*=1"), std::string::npos);
    EXPECT_NE(t.find("[4,8]"), std::string::npos);
    EXPECT_NE(t.find("general branch"), std::string::npos);
    EXPECT_NE(t.find("pm7-with-pm2-lambda-ramified"), std::string::npos);
}

TEST(ReportIo, RejectsMalformed)
{
    EXPECT_THROW(parse_report_json("{"), invalid_input);
    EXPECT_THROW(parse_report_json("{\"schema\":\"other/9\"}"), invalid_input);
    EXPECT_THROW(parse_report_json("{\"schema\":\"qgenus.report/1\"}"), invalid_input);
}

TEST(TableCheck, SecondTableAllRowsContained)
{
    const TableCheck tc = check_table(load_table(2));
    EXPECT_EQ(tc.failures(), 0);
    for (const auto& r : tc.rows) EXPECT_EQ(r.branch, Branch::Strong) << r.key;
}

TEST(TableCheck, FirstTableContainment)
{
    const TableCheck tc = check_table(load_table(1));
    for (const auto& r : tc.rows) EXPECT_NE(r.branch, Branch::Outside) << r.key;
    const auto ns = tc.non_strong_rows();
    EXPECT_NE(std::find(ns.begin(), ns.end(), 301), ns.end());
}

TEST(TableCheck, FourthTableContainment)
{
    std::map<std::int64_t, int> known;
    for (const auto& row : load_table(1).rows) known[row.n] = row.rank();
    const TableCheck tc = check_table(load_table(4), known);
    EXPECT_EQ(tc.failures(), 0);
}
