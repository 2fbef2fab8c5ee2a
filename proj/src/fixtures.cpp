#include "qgenus/fixtures.hpp"

#include "qgenus/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <openssl/evp.h>
#include <sstream>

#ifndef QGENUS_DEFAULT_DATA_DIR
#define QGENUS_DEFAULT_DATA_DIR "data"
#endif

namespace qgenus {

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& s, int line)
{
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw invalid_input("fixture line " + std::to_string(line) + ": not an integer: '" + s + "'");
    }
}

const std::vector<std::vector<std::string>>& expected_columns()
{
    static const std::vector<std::vector<std::string>> cols = {
        {"n", "nf", "class_group", "nf_suspected_typo"},
        {"p", "class_group", "module_shape"},
        {"p", "q", "class_group", "module_shape"},
        {"factors", "class_group"},
    };
    return cols;
}

}  // namespace

std::string FixtureRow::key() const
{
    std::string k;
    for (size_t i = 0; i < factors.size(); ++i) k += (i ? "*" : "") + std::to_string(factors[i]);
    return k;
}

std::vector<int> parse_class_group(const std::string& s)
{
    const std::string t = trim(s);
    if (t == "1") return {};
    std::vector<int> out;
    for (const auto& part : split(t, 'x')) {
        const std::int64_t v = parse_int(trim(part), 0);
        std::int64_t m = v;
        while (m > 1 && m % 5 == 0) m /= 5;
        if (v < 5 || m != 1) throw invalid_input("class group factor is not a power of 5: '" + part + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::vector<int> parse_module_shape(const std::string& s)
{
    std::vector<int> out;
    for (const auto& raw : split(trim(s), 'x')) {
        const std::string part = trim(raw);
        if (part.rfind("R/l", 0) != 0) throw invalid_input("bad module shape component: '" + part + "'");
        const std::string rest = part.substr(3);
        if (rest.empty())
            out.push_back(1);
        else if (rest[0] == '^')
            out.push_back(static_cast<int>(parse_int(rest.substr(1), 0)));
        else
            throw invalid_input("bad module shape component: '" + part + "'");
    }
    return out;
}

TableFixture parse_table(int id, const std::string& text)
{
    if (id < 1 || id > 4) throw invalid_input("table id must be 1..4");
    TableFixture t;
    t.id = id;
    t.sha256 = sha256_hex(text);
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto cells = split(line, '\t');
        for (auto& c : cells) c = trim(c);
        if (t.columns.empty()) {
            t.columns = cells;
            if (t.columns != expected_columns()[id - 1])
                throw invalid_input("table " + std::to_string(id) + ": unexpected header");
            continue;
        }
        if (cells.size() != t.columns.size())
            throw invalid_input("table " + std::to_string(id) + " line " + std::to_string(lineno) + ": wrong column count");
        FixtureRow r;
        r.line = lineno;
        switch (id) {
        case 1:
            r.factors = {parse_int(cells[0], lineno)};
            r.nf = static_cast<int>(parse_int(cells[1], lineno));
            r.class_group = parse_class_group(cells[2]);
            r.nf_suspected_typo = parse_int(cells[3], lineno) != 0;
            break;
        case 2:
            r.factors = {parse_int(cells[0], lineno)};
            r.class_group = parse_class_group(cells[1]);
            r.module_shape = cells[2];
            break;
        case 3:
            r.factors = {parse_int(cells[0], lineno), parse_int(cells[1], lineno)};
            r.class_group = parse_class_group(cells[2]);
            r.module_shape = cells[3];
            break;
        case 4:
            for (const auto& f : split(cells[0], '*')) r.factors.push_back(parse_int(trim(f), lineno));
            r.class_group = parse_class_group(cells[1]);
            break;
        }
        r.n = 1;
        for (auto f : r.factors) r.n *= f;
        if (!r.module_shape.empty()) parse_module_shape(r.module_shape);
        t.rows.push_back(std::move(r));
    }
    if (t.columns.empty()) throw invalid_input("table " + std::to_string(id) + ": missing header");
    return t;
}

std::string table_path(int id, const std::string& data_dir)
{
    return data_dir + "/table" + std::to_string(id) + ".tsv";
}

std::string default_data_dir()
{
    if (const char* env = std::getenv("QGENUS_DATA_DIR"); env && *env) return env;
    return QGENUS_DEFAULT_DATA_DIR;
}

TableFixture load_table(int id, const std::string& data_dir)
{
    const std::string path = table_path(id, data_dir);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open fixture " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table(id, ss.str());
}

TableFixture load_table(int id)
{
    return load_table(id, default_data_dir());
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

}  // namespace qgenus
