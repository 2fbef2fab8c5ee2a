#pragma once

#include "qgenus/descent.hpp"
#include "qgenus/genus.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qgenus {

struct GeneratorRecord {
    std::vector<int> exponents;
    std::array<std::string, 4> value;  // decimal coordinates in the basis 1, z, z^2, z^3
    std::string label;
    bool operator==(const GeneratorRecord&) const = default;
};

struct ReportDocument {
    std::string schema = "qgenus.report/1";
    RankReport rank;
    DescentReport descent_strong;
    DescentReport descent_nonstrong;
    std::string generator_method;
    std::vector<std::string> basis_names;
    std::vector<GeneratorRecord> generators;
    fp::Mat c1;
    bool c1_has_wild_column = false;
    int c1_extra_cols_possible = 0;
    bool operator==(const ReportDocument&) const = default;
};

ReportDocument make_report(std::int64_t n, bool assume_strong, std::optional<int> known_sk_rank = std::nullopt);

// Stable output: fixed key order and two-space indentation.
std::string render_json(const ReportDocument& doc);
ReportDocument parse_report_json(const std::string& text);
std::string render_text(const ReportDocument& doc);

}  // namespace qgenus
