#include "qgenus/errors.hpp"
#include "qgenus/filtration.hpp"
#include "qgenus/fixtures.hpp"
#include "qgenus/report_io.hpp"
#include "qgenus/table_check.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kConsistency = 2, kFixture = 3 };

std::map<std::int64_t, int> known_ranks_from_table1(const std::string& dir)
{
    std::map<std::int64_t, int> out;
    for (const auto& row : qgenus::load_table(1, dir).rows) out[row.n] = row.rank();
    return out;
}

int cmd_report(std::int64_t n, bool strong, bool json, std::optional<int> sk_rank)
{
    const auto doc = qgenus::make_report(n, strong, sk_rank);
    std::cout << (json ? qgenus::render_json(doc) : qgenus::render_text(doc));
    return kOk;
}

int cmd_table_check(int id, const std::string& dir)
{
    qgenus::TableFixture table;
    std::map<std::int64_t, int> known;
    try {
        table = qgenus::load_table(id, dir);
        if (id == 4) known = known_ranks_from_table1(dir);
    } catch (const qgenus::invalid_input& e) {
        std::cerr << "fixture error: " << e.what() << "\n";
        return kFixture;
    }
    const auto tc = qgenus::check_table(table, known);
    for (const auto& r : tc.rows) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.key << " rank=" << r.listed_rank
                  << " branch=" << qgenus::to_string(r.branch) << "  " << r.detail << "\n";
    }
    const auto ns = tc.non_strong_rows();
    std::cout << "table " << id << ": " << tc.rows.size() - tc.failures() << "/" << tc.rows.size() << " rows pass, "
              << ns.size() << " need the non-strong branch";
    if (!ns.empty()) {
        std::cout << " (";
        for (size_t i = 0; i < ns.size(); ++i) std::cout << (i ? " " : "") << ns[i];
        std::cout << ")";
    }
    std::cout << "\n";
    return tc.failures() > 0 ? kConsistency : kOk;
}

int cmd_oracle(int ell, int max_t)
{
    if (ell != 3 && ell != 5 && ell != 7) throw qgenus::invalid_input("oracle: ell must be 3, 5 or 7");
    if (max_t < 1) throw qgenus::invalid_input("oracle: max_t must be positive");
    int total = 0, passed = 0, sigma_total = 0, sigma_passed = 0, chain_holds = 0;
    for (const auto& e : qgenus::exponent_multisets(ell, max_t)) {
        const auto S = qgenus::build_filtration_module(ell, e);
        const auto chk = qgenus::verify_rank_identities(S);
        ++total;
        if (chk.ok) ++passed;
        for (const auto& f : chk.failures) std::cout << "  fail: " << f << "\n";
        if (ell == 5) {
            const auto Ss = qgenus::build_filtration_module(ell, e, {qgenus::SigmaSpec::Kind::Natural, 0});
            const auto sc = qgenus::verify_sigma(Ss);
            ++sigma_total;
            if (sc.check.ok) ++sigma_passed;
            if (sc.rank_chain_holds) ++chain_holds;
            for (const auto& f : sc.check.failures) std::cout << "  sigma fail: " << f << "\n";
        }
    }
    std::cout << "ell=" << ell << " max_t=" << max_t << ": " << passed << "/" << total << " modules pass\n";
    if (ell == 5)
        std::cout << "sigma modules: " << sigma_passed << "/" << sigma_total << " pass; closed rank chain holds for "
                  << chain_holds << "/" << sigma_total << "\n";
    return passed == total && sigma_passed == sigma_total ? kOk : kConsistency;
}

int cmd_symbols(std::int64_t n)
{
    const auto a = qgenus::analyze(n);
    const auto direct = qgenus::build_c1_direct(a.rad, a.gens, a.qs);
    std::cout << "n=" << n << " t=" << a.t << " generators by " << qgenus::to_string(a.gens.method) << "\n";
    bool agree = true;
    for (int i = 0; i < a.c1.rows; ++i) {
        std::cout << "row " << i + 1 << ": x = " << a.gens.generators[i].label << "\n";
        for (int j = 0; j < a.c1.cols; ++j) {
            const bool wild = j == a.rad.g;
            std::cout << "  col " << j + 1 << " ";
            if (wild)
                std::cout << "(x, lambda) at lambda, from the product formula";
            else
                std::cout << "(x, n) at pi=" << a.rad.primes[j].prime.element.str() << " over p=" << a.rad.primes[j].prime.p
                          << ", from the basis pairing table";
            std::cout << ": " << a.c1.entries[i][j] << " (direct " << direct.entries[i][j] << ")\n";
            agree = agree && a.c1.entries[i][j] == direct.entries[i][j];
        }
    }
    std::cout << "rank " << a.c1.rank() << ", further columns from " << a.c1.extra_cols_possible
              << " norm-residue conditions on units possible\n";
    if (!agree) std::cout << "pairing table and direct symbols DISAGREE\n";
    return agree ? kOk : kConsistency;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"5-rank bounds for class groups of pure quintic fields and their normal closures"};
    app.require_subcommand(1);

    std::int64_t n = 0;
    bool strong = false, json = false;
    std::optional<int> sk_rank;
    auto* report = app.add_subcommand("report", "genus data, C1 matrix and rank bounds for n");
    report->add_option("n", n, "fifth-power-free radicand")->required();
    report->add_flag("--assume-strongly-ambiguous", strong, "select the strongly ambiguous branch");
    report->add_flag("--json", json, "structured output");
    report->add_option("--sk-rank", sk_rank, "known 5-rank of the class group of Q(n^(1/5), z)");

    int table_id = 0;
    std::string data_dir = qgenus::default_data_dir();
    auto* table = app.add_subcommand("table-check", "check a bundled table row by row");
    table->add_option("id", table_id, "table number")->required()->check(CLI::Range(1, 4));
    table->add_option("--data-dir", data_dir, "fixture directory");

    int ell = 0, max_t = 0;
    auto* oracle = app.add_subcommand("oracle", "exhaustive filtration checks over exponent multisets");
    oracle->add_option("ell", ell, "3, 5 or 7")->required();
    oracle->add_option("max_t", max_t, "maximal number of summands")->required();

    std::int64_t sn = 0;
    auto* symbols = app.add_subcommand("symbols", "entries of the genus matrix C1 with their origin");
    symbols->add_option("n", sn, "fifth-power-free radicand")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*report) return cmd_report(n, strong, json, sk_rank);
        if (*table) return cmd_table_check(table_id, data_dir);
        if (*oracle) return cmd_oracle(ell, max_t);
        if (*symbols) return cmd_symbols(sn);
    } catch (const qgenus::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kConsistency;
    }
    return kOk;
}
