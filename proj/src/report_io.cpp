#include "qgenus/report_io.hpp"

#include "qgenus/errors.hpp"

#include "json.hpp"

#include <sstream>

namespace qgenus {

using ordered_json = nlohmann::ordered_json;

namespace {

template <typename E, int N>
E enum_from_string(const std::string& s, const char* what)
{
    for (int i = 0; i < N; ++i)
        if (to_string(static_cast<E>(i)) == s) return static_cast<E>(i);
    throw invalid_input(std::string("unknown ") + what + ": " + s);
}

ordered_json interval_json(const Interval& i) { return ordered_json::array({i.lo, i.hi}); }

Interval interval_from(const ordered_json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

template <typename T>
ordered_json optional_json(const std::optional<T>& v)
{
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const ordered_json& j)
{
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

ordered_json special_json(const std::optional<SpecialCase>& sc)
{
    if (!sc) return nullptr;
    ordered_json j;
    j["family"] = to_string(sc->family);
    j["r"] = sc->r;
    j["s"] = sc->s;
    j["t"] = sc->t;
    j["s1"] = sc->s1;
    j["bounds"] = interval_json(sc->bounds);
    j["nonstrong_floor"] = optional_json(sc->nonstrong_floor);
    return j;
}

std::optional<SpecialCase> special_from(const ordered_json& j)
{
    if (j.is_null()) return std::nullopt;
    SpecialCase sc;
    sc.family = enum_from_string<SpecialFamily, 5>(j.at("family").get<std::string>(), "family");
    sc.r = j.at("r");
    sc.s = j.at("s");
    sc.t = j.at("t");
    sc.s1 = j.at("s1");
    sc.bounds = interval_from(j.at("bounds"));
    sc.nonstrong_floor = optional_from<int>(j.at("nonstrong_floor"));
    return sc;
}

ordered_json rank_json(const RankReport& r)
{
    ordered_json j;
    j["n"] = r.n;
    j["t"] = r.t;
    j["qstar"] = r.qstar;
    j["d"] = r.d;
    j["g"] = r.g;
    j["lambda_ramifies"] = r.lambda_ramifies;
    j["assume_strong"] = r.assume_strong;
    j["s1_strong"] = r.s1_strong;
    j["s1_range_nonstrong"] = interval_json(r.s1_range_nonstrong);
    j["lambda2_rank_strong"] = r.lambda2_rank_strong;
    j["bounds_strong"] = interval_json(r.bounds_strong);
    j["bounds_nonstrong"] = interval_json(r.bounds_nonstrong);
    j["special_case"] = special_json(r.matched);
    return j;
}

RankReport rank_from(const ordered_json& j)
{
    RankReport r;
    r.n = j.at("n");
    r.t = j.at("t");
    r.qstar = j.at("qstar");
    r.d = j.at("d");
    r.g = j.at("g");
    r.lambda_ramifies = j.at("lambda_ramifies");
    r.assume_strong = j.at("assume_strong");
    r.s1_strong = j.at("s1_strong");
    r.s1_range_nonstrong = interval_from(j.at("s1_range_nonstrong"));
    r.lambda2_rank_strong = j.at("lambda2_rank_strong");
    r.bounds_strong = interval_from(j.at("bounds_strong"));
    r.bounds_nonstrong = interval_from(j.at("bounds_nonstrong"));
    r.matched = special_from(j.at("special_case"));
    return r;
}

ordered_json descent_json(const DescentReport& d)
{
    ordered_json j;
    j["n"] = d.n;
    j["t"] = d.t;
    j["w"] = d.w;
    j["r"] = d.r;
    j["plus_part_bound"] = d.plus_part_bound;
    j["real_prime_hypothesis"] = d.real_prime_hypothesis;
    j["assume_strong"] = d.assume_strong;
    j["known_sk_rank"] = optional_json(d.known_sk_rank);
    j["s1_candidates"] = d.s1_candidates;
    j["t_equals_s1"] = d.t_equals_s1;
    j["sl_upper"] = d.sl_upper;
    j["sl_lower"] = d.sl_lower;
    j["sl_lower_if_s2_zero"] = d.sl_lower_if_s2_zero;
    j["cyclic_pattern"] = d.cyclic_pattern ? ordered_json(to_string(*d.cyclic_pattern)) : ordered_json(nullptr);
    return j;
}

DescentReport descent_from(const ordered_json& j)
{
    DescentReport d;
    d.n = j.at("n");
    d.t = j.at("t");
    d.w = j.at("w");
    d.r = j.at("r");
    d.plus_part_bound = j.at("plus_part_bound");
    d.real_prime_hypothesis = j.at("real_prime_hypothesis");
    d.assume_strong = j.at("assume_strong");
    d.known_sk_rank = optional_from<int>(j.at("known_sk_rank"));
    d.s1_candidates = j.at("s1_candidates").get<std::vector<int>>();
    d.t_equals_s1 = j.at("t_equals_s1");
    d.sl_upper = j.at("sl_upper");
    d.sl_lower = j.at("sl_lower");
    d.sl_lower_if_s2_zero = j.at("sl_lower_if_s2_zero");
    if (!j.at("cyclic_pattern").is_null())
        d.cyclic_pattern = enum_from_string<CyclicPattern, 10>(j.at("cyclic_pattern").get<std::string>(), "pattern");
    return d;
}

std::string interval_text(const Interval& i)
{
    return "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]";
}

}  // namespace

ReportDocument make_report(std::int64_t n, bool assume_strong, std::optional<int> known_sk_rank)
{
    const GenusAnalysis a = analyze(n, assume_strong);
    ReportDocument doc;
    doc.rank = a.report;
    doc.descent_strong = descent_report(a, true, std::nullopt);
    doc.descent_nonstrong = descent_report(a, false, known_sk_rank);
    doc.generator_method = to_string(a.gens.method);
    doc.basis_names = s_unit_basis(a.rad).names;
    for (const auto& g : a.gens.generators) {
        GeneratorRecord rec;
        rec.exponents.assign(g.exponents.begin(), g.exponents.end());
        for (int i = 0; i < 4; ++i) rec.value[i] = g.value[i].get_str();
        rec.label = g.label;
        doc.generators.push_back(std::move(rec));
    }
    doc.c1 = a.c1.entries;
    doc.c1_has_wild_column = a.c1.has_wild_column;
    doc.c1_extra_cols_possible = a.c1.extra_cols_possible;
    return doc;
}

std::string render_json(const ReportDocument& doc)
{
    ordered_json j;
    j["schema"] = doc.schema;
    j["rank"] = rank_json(doc.rank);
    j["descent_strong"] = descent_json(doc.descent_strong);
    j["descent_nonstrong"] = descent_json(doc.descent_nonstrong);
    j["generator_method"] = doc.generator_method;
    j["basis"] = doc.basis_names;
    ordered_json gens = ordered_json::array();
    for (const auto& g : doc.generators) {
        ordered_json gj;
        gj["label"] = g.label;
        gj["exponents"] = g.exponents;
        gj["value"] = g.value;
        gens.push_back(gj);
    }
    j["generators"] = gens;
    ordered_json c1;
    c1["entries"] = doc.c1;
    c1["has_wild_column"] = doc.c1_has_wild_column;
    c1["extra_cols_possible"] = doc.c1_extra_cols_possible;
    j["c1"] = c1;
    return j.dump(2) + "\n";
}

ReportDocument parse_report_json(const std::string& text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("report is not valid JSON: ") + e.what());
    }
    try {
        ReportDocument doc;
        doc.schema = j.at("schema");
        if (doc.schema != ReportDocument{}.schema) throw invalid_input("unsupported report schema " + doc.schema);
        doc.rank = rank_from(j.at("rank"));
        doc.descent_strong = descent_from(j.at("descent_strong"));
        doc.descent_nonstrong = descent_from(j.at("descent_nonstrong"));
        doc.generator_method = j.at("generator_method");
        doc.basis_names = j.at("basis").get<std::vector<std::string>>();
        for (const auto& gj : j.at("generators")) {
            GeneratorRecord rec;
            rec.label = gj.at("label");
            rec.exponents = gj.at("exponents").get<std::vector<int>>();
            rec.value = gj.at("value").get<std::array<std::string, 4>>();
            doc.generators.push_back(std::move(rec));
        }
        const auto& c1 = j.at("c1");
        doc.c1 = c1.at("entries").get<fp::Mat>();
        doc.c1_has_wild_column = c1.at("has_wild_column");
        doc.c1_extra_cols_possible = c1.at("extra_cols_possible");
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("malformed report: ") + e.what());
    }
}

std::string render_text(const ReportDocument& doc)
{
    const RankReport& r = doc.rank;
    std::ostringstream o;
    o << "n = " << r.n << "\n";
    o << "  primes above n: g=" << r.g << "  lambda ramifies: " << (r.lambda_ramifies ? "yes" : "no")
      << "  d=" << r.d << "\n";
    o << "  t=" << r.t << " q*=" << r.qstar << "\n";
    o << "  generators (" << doc.generator_method << "):";
    if (doc.generators.empty()) o << " none";
    o << "\n";
    for (const auto& g : doc.generators) o << "    " << g.label << "\n";
    o << "  C1 " << doc.c1.size() << "x" << (doc.c1.empty() ? 0 : doc.c1[0].size())
      << (doc.c1_has_wild_column ? " (with lambda column)" : "") << " extra columns possible: "
      << doc.c1_extra_cols_possible << "\n";
    for (const auto& row : doc.c1) {
        o << "    ";
        for (auto v : row) o << v << " ";
        o << "\n";
    }
    const bool exact = r.bounds_strong.lo == r.bounds_strong.hi;
    o << "  strongly ambiguous branch: s1=" << r.s1_strong << " rank(lambda^2)=" << r.lambda2_rank_strong
      << " rank in " << interval_text(r.bounds_strong) << (exact ? " exact" : "") << "\n";
    o << "  general branch: s1 in " << interval_text(r.s1_range_nonstrong) << " rank in "
      << interval_text(r.bounds_nonstrong) << "\n";
    o << "  selected (" << (r.assume_strong ? "strong" : "non-strong") << "): rank in " << interval_text(r.bounds())
      << "\n";
    if (r.matched) {
        const SpecialCase& sc = *r.matched;
        o << "  special family " << to_string(sc.family) << ": r=" << sc.r << " s=" << sc.s << " t=" << sc.t
          << " s1=" << sc.s1 << " rank in " << interval_text(sc.bounds);
        if (sc.nonstrong_floor) o << " (general lower bound " << *sc.nonstrong_floor << ")";
        o << "\n";
    }
    for (const DescentReport* d : {&doc.descent_strong, &doc.descent_nonstrong}) {
        o << "  descent to the real subfield (" << (d->assume_strong ? "strong" : "non-strong") << "): w=" << d->w
          << " r=" << d->r << " plus-part rank <= " << d->plus_part_bound << " s1 in {";
        for (size_t i = 0; i < d->s1_candidates.size(); ++i) o << (i ? "," : "") << d->s1_candidates[i];
        o << "} rank S_L in [" << d->sl_lower << "," << d->sl_upper << "]";
        if (d->real_prime_hypothesis) o << " (lower " << d->sl_lower_if_s2_zero << " if s2=0)";
        if (d->known_sk_rank) o << " given rank S_K=" << *d->known_sk_rank;
        o << "\n";
    }
    if (doc.descent_nonstrong.cyclic_pattern)
        o << "  cyclic pattern: " << to_string(*doc.descent_nonstrong.cyclic_pattern) << "\n";
    return o.str();
}

}  // namespace qgenus
