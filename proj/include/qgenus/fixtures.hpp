#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace qgenus {

struct FixtureRow {
    int line = 0;
    std::vector<std::int64_t> factors;  // the radicand as listed (n, p, p*q, ...)
    std::int64_t n = 0;
    std::vector<int> class_group;       // cyclic factor orders; empty for the trivial group
    std::string module_shape;           // e.g. "R/l x R/l^2"; empty when not listed
    std::optional<int> nf;              // number of primes of Z[z] dividing n
    bool nf_suspected_typo = false;

    int rank() const { return static_cast<int>(class_group.size()); }
    std::string key() const;            // factors joined with '*'
};

struct TableFixture {
    int id = 0;
    std::vector<std::string> columns;
    std::vector<FixtureRow> rows;
    std::string sha256;                 // of the file bytes
};

// Parses "1", "5", "5x5", ... into cyclic orders; throws on non powers of 5.
std::vector<int> parse_class_group(const std::string& s);

// Parses "R/l^2" or "R/l x R/l^3" into lambda exponents.
std::vector<int> parse_module_shape(const std::string& s);

TableFixture parse_table(int id, const std::string& text);
// QGENUS_DATA_DIR from the environment, else the directory baked in at build time.
std::string default_data_dir();
TableFixture load_table(int id, const std::string& data_dir);
TableFixture load_table(int id);
std::string table_path(int id, const std::string& data_dir);

std::string sha256_hex(const std::string& bytes);

}  // namespace qgenus
