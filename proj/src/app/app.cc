#include "htn/app/app.h"

#include "htn/grounding/grounder.h"
#include "htn/hddl/errors.h"
#include "htn/hddl/parser.h"
#include "htn/lifted/indexed_model.h"
#include "htn/plan_io/plan_io.h"
#include "htn/search/pfd.h"
#include "htn/search/tfd.h"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace htn::app {

const char *to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::Solved:
        return "solved";
    case Outcome::Unsolvable:
        return "unsolvable";
    case Outcome::ResourceExhausted:
        return "exhausted";
    case Outcome::InputError:
        return "input-error";
    case Outcome::Rejected:
        return "rejected";
    case Outcome::InvalidPlan:
        return "invalid-plan";
    }
    return "?";
}

int exit_code(Outcome outcome) {
    switch (outcome) {
    case Outcome::Solved:
        return exit_solved;
    case Outcome::Unsolvable:
        return exit_unsolvable;
    case Outcome::ResourceExhausted:
        return exit_resource_exhausted;
    case Outcome::InputError:
    case Outcome::Rejected:
        return exit_input_error;
    case Outcome::InvalidPlan:
        return exit_invalid_plan;
    }
    return exit_input_error;
}

namespace {

using Clock = std::chrono::steady_clock;

struct InputFailure {
    std::string message;
};

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputFailure{"cannot read " + path.string()};
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::string located(const std::filesystem::path &path, const hddl::HddlError &e) {
    if (e.line() == 0)
        return path.string() + ": " + e.what();
    return path.string() + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.kind() +
           ": " + e.detail();
}

template <typename Parse>
auto parse_file(const std::filesystem::path &path, Parse &&parse) {
    const std::string text = read_file(path);
    try {
        return parse(text);
    } catch (const hddl::HddlError &e) {
        throw InputFailure{located(path, e)};
    }
}

/// Seconds since `mark`; moves `mark` to now.
double lap(Clock::time_point &mark) {
    const auto now = Clock::now();
    const double seconds = std::chrono::duration<double>(now - mark).count();
    mark = now;
    return seconds;
}

void print_times(std::ostream &err, const StageTimes &t) {
    const auto old = err.flags();
    err << std::fixed << std::setprecision(6) << "time parse " << t.parse << " s\n"
        << "time ground " << t.ground << " s\n"
        << "time search " << t.search << " s\n"
        << "time validate " << t.validate << " s\n"
        << "time output " << t.output << " s\n"
        << "time total " << t.total << " s\n";
    err.flags(old);
}

}  // namespace

RunResult execute(const RunConfig &config, std::ostream &out, std::ostream &err) {
    RunResult result;
    const auto start = Clock::now();
    auto mark = start;
    auto finish = [&](Outcome outcome, std::string message) {
        result.times.total = std::chrono::duration<double>(Clock::now() - start).count();
        result.outcome = outcome;
        result.message = std::move(message);
        err << result.message << '\n';
        if (config.stats)
            print_times(err, result.times);
        return result;
    };

    lifted::IndexedModel model;
    try {
        const auto domain = parse_file(config.domain_path, [](const std::string &t) { return hddl::parse_domain(t); });
        const auto problem = parse_file(config.problem_path,
                                        [&](const std::string &t) { return hddl::parse_problem(t, domain); });
        try {
            model = lifted::encode_integers(domain, problem);
        } catch (const hddl::HddlError &e) {
            throw InputFailure{located(config.problem_path, e)};
        }
    } catch (const InputFailure &f) {
        result.times.parse = lap(mark);
        return finish(Outcome::InputError, "error: " + f.message);
    }
    result.times.parse = lap(mark);
    if (config.dump_lifted)
        out << lifted::dump_lifted(model);

    grounding::GroundingStats gstats;
    const GroundProblem problem = grounding::ground(model, &gstats);
    result.times.ground = lap(mark);
    if (config.dump_ground)
        out << grounding::dump_ground(problem);
    if (config.stats)
        err << grounding::format_stats(gstats);
    else
        for (const auto &w : gstats.warnings)
            err << "warning: " << w << '\n';

    search::SearchOptions options;
    options.timeout = std::chrono::duration<double>(config.timeout_seconds);
    options.max_nodes = config.max_nodes;
    options.duplicate_detection = !config.no_duplicate_detection;
    options.trace = config.trace ? &err : nullptr;
    options.pfd_first_free = config.pfd_first_free;

    search::SearchResult sr;
    if (config.search == SearchKind::Tfd) {
        if (auto why = total_order_violation(problem)) {
            result.times.search = lap(mark);
            return finish(Outcome::Rejected, "error: --search tfd needs a totally ordered problem: " + *why);
        }
        sr = search::tfd_solve(problem, options);
    } else {
        sr = search::pfd_solve(problem, options);
    }
    result.times.search = lap(mark);
    result.search_stats = sr.stats;
    if (config.stats)
        err << "search: expanded " << sr.stats.expanded << ", generated " << sr.stats.generated << ", duplicates "
            << sr.stats.duplicates << ", cyclic " << sr.stats.cyclic << '\n';

    if (sr.status == search::Status::Unsolvable) {
        std::string why = "unsolvable";
        if (problem.grounding_failure)
            why += ": " + *problem.grounding_failure;
        return finish(Outcome::Unsolvable, why);
    }
    if (sr.status == search::Status::ResourceExhausted)
        return finish(Outcome::ResourceExhausted,
                      std::string("resource exhausted: ") + search::to_string(sr.limit) + " after " +
                          std::to_string(sr.stats.expanded) + " expansions");

    const auto validation = plan_io::validate_plan(problem, *sr.plan);
    result.times.validate = lap(mark);
    result.plan_length = sr.plan->actions.size();
    result.valid = validation.valid();
    if (!validation.valid())
        return finish(Outcome::InvalidPlan, "internal error: the plan found does not validate (" +
                                                std::string(plan_io::to_string(validation.kind)) +
                                                "): " + validation.reason);

    result.plan_text = plan_io::write_plan(problem, *sr.plan);
    if (config.plan_out) {
        std::ofstream file(*config.plan_out, std::ios::binary);
        file << *result.plan_text;
        if (!file) {
            result.times.output = lap(mark);
            return finish(Outcome::InputError, "error: cannot write " + config.plan_out->string());
        }
    } else {
        out << *result.plan_text;
    }
    result.times.output = lap(mark);
    return finish(Outcome::Solved, "solved: " + std::to_string(result.plan_length) + " actions, " +
                                       std::to_string(sr.stats.expanded) + " expansions");
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return exit_code(execute(config, out, err).outcome);
}

std::vector<BenchRow> bench(const std::filesystem::path &corpus, const BenchConfig &config) {
    std::vector<std::filesystem::path> instances;
    for (const auto &entry : std::filesystem::directory_iterator(corpus))
        if (entry.is_directory() && std::filesystem::exists(entry.path() / "domain.hddl") &&
            std::filesystem::exists(entry.path() / "problem.hddl"))
            instances.push_back(entry.path());
    std::sort(instances.begin(), instances.end());

    std::vector<BenchRow> rows;
    for (const auto &dir : instances) {
        RunConfig rc;
        rc.domain_path = dir / "domain.hddl";
        rc.problem_path = dir / "problem.hddl";
        rc.search = config.search;
        rc.timeout_seconds = config.timeout_seconds;
        rc.max_nodes = config.max_nodes;
        std::ostringstream sink;
        const auto start = Clock::now();
        const RunResult r = execute(rc, sink, sink);
        BenchRow row;
        row.instance = dir.filename().string();
        row.outcome = r.outcome;
        row.valid = r.valid;
        row.plan_length = r.plan_length;
        row.nodes_expanded = r.search_stats.expanded;
        row.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string valid_cell(const BenchRow &row) {
    if (row.outcome == Outcome::Solved || row.outcome == Outcome::InvalidPlan)
        return row.valid ? "yes" : "no";
    return "-";
}

std::string ms(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << value;
    return out.str();
}

}  // namespace

std::string bench_csv(const std::vector<BenchRow> &rows) {
    std::ostringstream out;
    out << "instance,status,valid,plan_length,nodes_expanded,wall_ms\n";
    for (const auto &r : rows)
        out << r.instance << ',' << to_string(r.outcome) << ',' << valid_cell(r) << ',' << r.plan_length << ','
            << r.nodes_expanded << ',' << ms(r.wall_ms) << '\n';
    return out.str();
}

std::string bench_table(const std::vector<BenchRow> &rows) {
    std::vector<std::vector<std::string>> cells{
        {"instance", "status", "valid", "plan_length", "nodes_expanded", "wall_ms"}};
    for (const auto &r : rows)
        cells.push_back({r.instance, to_string(r.outcome), valid_cell(r), std::to_string(r.plan_length),
                         std::to_string(r.nodes_expanded), ms(r.wall_ms)});
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto &line : cells)
        for (std::size_t c = 0; c < line.size(); ++c)
            width[c] = std::max(width[c], line[c].size());
    std::ostringstream out;
    for (const auto &line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            // Text columns left-aligned, numbers right-aligned.
            if (c < 3)
                out << std::left << std::setw(static_cast<int>(width[c])) << line[c];
            else
                out << std::right << std::setw(static_cast<int>(width[c])) << line[c];
            out << (c + 1 < line.size() ? "  " : "\n");
        }
    }
    return out.str();
}

}  // namespace htn::app
