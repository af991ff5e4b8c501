#include "fixtures.h"

#include "htn/app/app.h"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

using namespace htn;
using namespace htn::app;

namespace {

RunConfig config_for(const std::string &name, SearchKind search = SearchKind::Tfd) {
    RunConfig c;
    const auto dir = testing::fixtures_dir() / name;
    c.domain_path = dir / "domain.hddl";
    c.problem_path = dir / "problem.hddl";
    c.search = search;
    return c;
}

std::filesystem::path scratch(const std::string &name) {
    auto p = std::filesystem::temp_directory_path() / ("htn-app-test-" + name);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("door with tfd: exit 0 and a plan") {
    std::ostringstream out, err;
    const auto r = execute(config_for("corpus/door"), out, err);
    CHECK(r.outcome == Outcome::Solved);
    CHECK(exit_code(r.outcome) == 0);
    CHECK(r.valid);
    CHECK(r.plan_length == 1);
    CHECK(out.str().find("==>\n0 open-door d1\n") != std::string::npos);
}

TEST_CASE("missing domain file: exit 3 with a message") {
    auto c = config_for("corpus/door");
    c.domain_path = testing::fixtures_dir() / "corpus/door/no-such-file.hddl";
    std::ostringstream out, err;
    const auto r = execute(c, out, err);
    CHECK(r.outcome == Outcome::InputError);
    CHECK(exit_code(r.outcome) == 3);
    CHECK(err.str().find("no-such-file.hddl") != std::string::npos);
}

TEST_CASE("input errors name file, line and column") {
    auto c = config_for("corpus/door");
    c.domain_path = testing::fixtures_dir() / "defects/undeclared-task.domain.hddl";
    std::ostringstream out, err;
    const auto r = execute(c, out, err);
    CHECK(exit_code(r.outcome) == 3);
    CHECK(err.str().find("undeclared-task.domain.hddl:10:16:") != std::string::npos);
}

TEST_CASE("tfd on a partially ordered problem: exit 3 with the ordering diagnosis") {
    std::ostringstream out, err;
    const auto r = execute(config_for("corpus/transport-po"), out, err);
    CHECK(r.outcome == Outcome::Rejected);
    CHECK(exit_code(r.outcome) == 3);
    CHECK(err.str().find("partially ordered") != std::string::npos);
}

TEST_CASE("outcomes map to exit codes") {
    std::ostringstream out, err;
    CHECK(run(config_for("corpus/door-unsolvable"), out, err) == 1);
    auto spiral = config_for("corpus/spiral");
    spiral.max_nodes = 100;
    CHECK(run(spiral, out, err) == 2);
    CHECK(run(config_for("corpus/transport-po", SearchKind::Pfd), out, err) == 0);
    CHECK(exit_code(Outcome::InvalidPlan) == 4);
}

TEST_CASE("stage times add up to the reported total") {
    auto c = config_for("corpus/transport");
    c.stats = true;
    std::ostringstream out, err;
    const auto r = execute(c, out, err);
    const auto &t = r.times;
    CHECK(t.total > 0);
    CHECK(std::abs(t.stages() - t.total) <= 0.05 * t.total);
    // the printed lines as well
    std::istringstream lines(err.str());
    std::string line;
    double sum = 0, total = -1;
    while (std::getline(lines, line)) {
        std::istringstream w(line);
        std::string time, stage, unit;
        double value = 0;
        if (!(w >> time >> stage >> value >> unit) || time != "time")
            continue;
        if (stage == "total")
            total = value;
        else
            sum += value;
    }
    REQUIRE(total >= 0);
    CHECK(std::abs(sum - total) <= 0.05 * total + 2e-6);  // printed with microsecond resolution
    CHECK(err.str().find("facts: naive") != std::string::npos);
}

TEST_CASE("dumps go to the output stream") {
    auto c = config_for("corpus/door");
    c.dump_lifted = true;
    c.dump_ground = true;
    std::ostringstream out, err;
    execute(c, out, err);
    CHECK(out.str().find("make-open") != std::string::npos);
    CHECK(out.str().find("(closed d1)") != std::string::npos);
}

TEST_CASE("plan file output") {
    const auto dir = scratch("plan-out");
    auto c = config_for("corpus/door");
    c.plan_out = dir / "door.plan";
    std::ostringstream out, err;
    CHECK(run(c, out, err) == 0);
    CHECK(testing::read_text(*c.plan_out) == "==>\n0 open-door d1\nroot 1\n1 make-open d1 -> m-open 0\n<==\n");
    CHECK(out.str().find("==>") == std::string::npos);
}

TEST_CASE("identical configuration, identical plan bytes and node counts") {
    for (auto search : {SearchKind::Tfd, SearchKind::Pfd}) {
        std::ostringstream o1, e1, o2, e2;
        const auto a = execute(config_for("corpus/transport", search), o1, e1);
        const auto b = execute(config_for("corpus/transport", search), o2, e2);
        CHECK(a.plan_text == b.plan_text);
        CHECK(a.search_stats.expanded == b.search_stats.expanded);
    }
}

TEST_CASE("bench over the bundled corpus") {
    BenchConfig c;
    c.max_nodes = 2000;
    const auto rows = bench(testing::fixtures_dir() / "corpus", c);
    REQUIRE(rows.size() == 5);
    for (const auto &row : rows) {
        CAPTURE(row.instance);
        if (row.instance == "door-unsolvable")
            CHECK(row.outcome == Outcome::Unsolvable);
        else if (row.instance == "spiral")
            CHECK(row.outcome == Outcome::ResourceExhausted);
        else if (row.instance == "transport-po")
            CHECK(row.outcome == Outcome::Rejected);
        else {
            CHECK(row.outcome == Outcome::Solved);
            CHECK(row.valid);
        }
    }
    const auto csv = bench_csv(rows);
    CHECK(csv.rfind("instance,status,valid,plan_length,nodes_expanded,wall_ms\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    CHECK(csv.find("door-unsolvable,unsolvable,-,") != std::string::npos);
    CHECK(bench_table(rows).find("door-unsolvable") != std::string::npos);

    c.search = SearchKind::Pfd;
    c.max_nodes = 500;  // PFD on spiral grows an n x n matrix per node
    for (const auto &row : bench(testing::fixtures_dir() / "corpus", c)) {
        CAPTURE(row.instance);
        if (row.instance == "transport-po")
            CHECK(row.outcome == Outcome::Solved);
        if (row.outcome == Outcome::Solved)
            CHECK(row.valid);
    }
}

TEST_CASE("bench over an empty directory") {
    const auto dir = scratch("empty-corpus");
    const auto rows = bench(dir, BenchConfig{});
    CHECK(rows.empty());
    CHECK(bench_csv(rows) == "instance,status,valid,plan_length,nodes_expanded,wall_ms\n");
    CHECK_NOTHROW(bench_table(rows));
}
