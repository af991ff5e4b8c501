#ifndef HTN_APP_APP_H
#define HTN_APP_APP_H

#include "htn/search/common.h"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace htn::app {

enum class SearchKind { Tfd, Pfd };

struct RunConfig {
    std::filesystem::path domain_path;
    std::filesystem::path problem_path;
    SearchKind search = SearchKind::Tfd;
    double timeout_seconds = 300;
    std::optional<std::size_t> max_nodes;
    bool dump_lifted = false;
    bool dump_ground = false;
    bool stats = false;
    bool trace = false;
    bool no_duplicate_detection = false;
    bool pfd_first_free = false;
    std::optional<std::filesystem::path> plan_out;
};

enum ExitCode : int {
    exit_solved = 0,
    exit_unsolvable = 1,
    exit_resource_exhausted = 2,
    exit_input_error = 3,
    exit_invalid_plan = 4,
};

enum class Outcome { Solved, Unsolvable, ResourceExhausted, InputError, Rejected, InvalidPlan };
const char *to_string(Outcome outcome);
int exit_code(Outcome outcome);

/// Seconds per stage, and the wall time of the whole run measured on its own.
struct StageTimes {
    double parse = 0, ground = 0, search = 0, validate = 0, output = 0;
    double total = 0;
    double stages() const { return parse + ground + search + validate + output; }
};

struct RunResult {
    Outcome outcome = Outcome::InputError;
    std::string message;
    std::optional<std::string> plan_text;
    std::size_t plan_length = 0;
    bool valid = false;
    search::SearchStats search_stats;
    StageTimes times;
};

/// Runs the whole pipeline. Dumps and the plan go to `out` (unless a plan
/// file is configured), diagnostics, timing and statistics to `err`.
RunResult execute(const RunConfig &config, std::ostream &out, std::ostream &err);
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

struct BenchConfig {
    SearchKind search = SearchKind::Tfd;
    double timeout_seconds = 300;
    std::size_t max_nodes = 200000;
};

struct BenchRow {
    std::string instance;
    Outcome outcome = Outcome::InputError;
    bool valid = false;
    std::size_t plan_length = 0;
    std::size_t nodes_expanded = 0;
    double wall_ms = 0;
};

/// One row per subdirectory holding domain.hddl and problem.hddl, in name
/// order. Throws std::filesystem::filesystem_error if the corpus is unreadable.
std::vector<BenchRow> bench(const std::filesystem::path &corpus, const BenchConfig &config);
std::string bench_csv(const std::vector<BenchRow> &rows);
std::string bench_table(const std::vector<BenchRow> &rows);

}  // namespace htn::app

#endif
