#pragma once

#include "qgenus/fixtures.hpp"

#include <map>
#include <string>
#include <vector>

namespace qgenus {

enum class Branch { Strong, NonStrong, Outside };
std::string to_string(Branch b);

struct RowCheck {
    std::string key;
    std::int64_t n = 0;
    int listed_rank = 0;
    Branch branch = Branch::Outside;
    bool prediction_ok = true;   // special-family prediction equals pipeline, where relevant
    bool nf_ok = true;
    bool pass = false;
    std::string detail;
};

struct TableCheck {
    int id = 0;
    std::vector<RowCheck> rows;
    int failures() const;
    std::vector<std::int64_t> non_strong_rows() const;
};

// Fixture 1: rank within strong bounds, else within non-strong bounds (flagged);
// n(f) tally unless flagged as a suspected typo; special-family predictions.
// Fixtures 2 and 3: the same plus the expected family and its (t, s1, bounds).
// Fixture 4: listed S_L rank within [sl_lower, sl_upper] on some branch, using
// the S_K rank from fixture 1 when it lists n; ranks <= 1 for cyclic patterns.
TableCheck check_table(const TableFixture& table, const std::map<std::int64_t, int>& known_sk_ranks = {});

}  // namespace qgenus
