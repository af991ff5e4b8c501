#include "htn/app/app.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

int main(int argc, char **argv) {
    using htn::app::SearchKind;
    CLI::App cli{"HTN planner for HDDL problems"};
    cli.require_subcommand(1);
    const std::map<std::string, SearchKind> kinds{{"tfd", SearchKind::Tfd}, {"pfd", SearchKind::Pfd}};

    htn::app::RunConfig rc;
    std::string domain, problem, plan_out;
    std::size_t max_nodes = 0;
    auto *plan = cli.add_subcommand("plan", "solve one problem");
    plan->add_option("--domain", domain, "domain file")->required();
    plan->add_option("--problem", problem, "problem file")->required();
    plan->add_option("--search", rc.search, "tfd or pfd")->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
    plan->add_option("--timeout", rc.timeout_seconds, "seconds")->check(CLI::PositiveNumber);
    auto *max_nodes_opt = plan->add_option("--max-nodes", max_nodes, "expansion budget");
    plan->add_flag("--no-duplicate-detection", rc.no_duplicate_detection);
    plan->add_flag("--trace", rc.trace, "one line per expansion on stderr");
    plan->add_flag("--pfd-first-free", rc.pfd_first_free, "branch only on the first free task");
    plan->add_flag("--dump-lifted", rc.dump_lifted);
    plan->add_flag("--dump-ground", rc.dump_ground);
    plan->add_flag("--stats", rc.stats, "grounding statistics and stage timing");
    auto *plan_out_opt = plan->add_option("--plan-out", plan_out, "plan file (default stdout)");

    htn::app::BenchConfig bc;
    std::string corpus, csv;
    auto *bench = cli.add_subcommand("bench", "run every instance of a corpus directory");
    bench->add_option("--corpus", corpus, "directory of <instance>/{domain,problem}.hddl")->required();
    bench->add_option("--search", bc.search, "tfd or pfd")->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
    bench->add_option("--csv", csv, "write the table as CSV");
    bench->add_option("--timeout", bc.timeout_seconds, "seconds per instance")->check(CLI::PositiveNumber);
    bench->add_option("--max-nodes", bc.max_nodes, "expansion budget per instance");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = cli.exit(e);
        return code == 0 ? 0 : htn::app::exit_input_error;
    }

    if (*plan) {
        rc.domain_path = domain;
        rc.problem_path = problem;
        if (*max_nodes_opt)
            rc.max_nodes = max_nodes;
        if (*plan_out_opt)
            rc.plan_out = plan_out;
        return htn::app::run(rc, std::cout, std::cerr);
    }

    std::vector<htn::app::BenchRow> rows;
    try {
        rows = htn::app::bench(corpus, bc);
    } catch (const std::filesystem::filesystem_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return htn::app::exit_input_error;
    }
    std::cout << htn::app::bench_table(rows);
    if (!csv.empty()) {
        std::ofstream file(csv, std::ios::binary);
        file << htn::app::bench_csv(rows);
        if (!file) {
            std::cerr << "error: cannot write " << csv << '\n';
            return htn::app::exit_input_error;
        }
    }
    return 0;
}
