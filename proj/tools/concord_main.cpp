#include "concord/errors.hpp"
#include "concord/io.hpp"
#include "concord/metabolizer.hpp"
#include "concord/obstruction.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

#ifndef CONCORD_DATA_DIR
#define CONCORD_DATA_DIR "data"
#endif

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw concord::Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

concord::OutputFormat parse_format(const std::string& name) {
    return name == "json" ? concord::OutputFormat::Json : concord::OutputFormat::Text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"concordance-order obstructions from Seifert matrices"};
    app.require_subcommand(1);

    std::string format_name = "text";
    auto add_format = [&format_name](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    std::string seifert_path, table_path, knot_name;
    long prime = 0;
    int copies = 0;
    long budget = concord::EnumerationBudget{}.max_space_size;
    int count = 10;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "invariants and infinite-order verdict for a knot");
    analyze->add_option("--seifert", seifert_path, "Seifert matrix file ('-' for stdin)");
    analyze->add_option("--table", table_path, "knot table to pull records from");
    analyze->add_option("--knot", knot_name, "name of the table row to analyze");
    add_format(analyze);

    CLI::App* certify = app.add_subcommand(
        "certify", "enumerate metabolizers of ((Z_p)^d, x.y/p) and certify each");
    certify->add_option("--prime", prime, "odd prime p = 3 mod 4")->required();
    certify->add_option("--copies", copies, "number d of Z_p copies")->required();
    certify->add_option("--budget", budget, "bound on the space size p^d")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(certify);

    CLI::App* table = app.add_subcommand("table", "verdicts and witness counts for a knot table");
    std::string table_arg = std::string(CONCORD_DATA_DIR) + "/knot_table.csv";
    table->add_option("--table", table_arg, "knot table CSV ('-' for stdin)")
        ->capture_default_str();
    add_format(table);

    CLI::App* family = app.add_subcommand(
        "family", "twisted doubles with pairwise coprime determinants");
    family->add_option("--count", count, "number of members")
        ->check(CLI::Range(1, 2000))
        ->capture_default_str();
    add_format(family);

    add_format(app.add_subcommand("ring-demo", "p = 19 group-ring walkthrough"));

    CLI11_PARSE(app, argc, argv);
    concord::OutputFormat format = parse_format(format_name);

    try {
        if (analyze->parsed()) {
            bool have_seifert = !seifert_path.empty();
            bool have_table = !table_path.empty();
            if (have_seifert == have_table) {
                std::cerr << "analyze needs exactly one of --seifert or --table\n";
                return 1;
            }
            if (have_seifert) {
                concord::SeifertMatrix V = concord::parse_seifert_file(read_input(seifert_path));
                std::cout << concord::render_analyze_report(concord::analyze_matrix(V), format);
            } else {
                auto records = concord::parse_knot_table(read_input(table_path));
                bool found = false;
                for (const concord::KnotRecord& rec : records) {
                    if (!knot_name.empty() && rec.name != knot_name)
                        continue;
                    found = true;
                    if (format == concord::OutputFormat::Text)
                        std::cout << "knot " << rec.name << "\n";
                    std::cout << concord::render_analyze_report(concord::analyze_record(rec),
                                                                format);
                }
                if (!found) {
                    std::cerr << "no row named '" << knot_name << "'\n";
                    return 1;
                }
            }
            return 0;
        }
        if (certify->parsed()) {
            concord::EnumerationBudget b{budget};
            concord::CertifyResult result = concord::certify(prime, copies, b);
            std::cout << concord::render_certify_report(result, format);
            return result.verdict == concord::CertifyVerdict::AllCertified ? 0 : 2;
        }
        if (table->parsed()) {
            auto records = concord::parse_knot_table(read_input(table_arg));
            concord::TableReport report = concord::analyze_table(records);
            std::cout << concord::render_table_report(report, format);
            return 0;
        }
        if (family->parsed()) {
            auto members = concord::independent_family(count);
            concord::FamilyReport report = concord::family_independence_certificate(members);
            std::cout << concord::render_family_report(members, report, format);
            return report.all_ok ? 0 : 1;
        }
        std::cout << concord::ring_demo(format);
        return 0;
    } catch (const concord::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
