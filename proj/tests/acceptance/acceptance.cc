// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "fixtures.h"
#include "oracle.h"
#include "random_problem.h"

#include "htn/app/app.h"
#include "htn/network/bool_matrix.h"
#include "htn/plan_io/plan_io.h"
#include "htn/search/pfd.h"
#include "htn/search/tfd.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace htn;
using Clock = std::chrono::steady_clock;

constexpr std::size_t random_instances = 50;
// Terminating instances need under 100 expansions; spiral never terminates
// and its PFD networks grow by one task per expansion.
constexpr std::size_t engine_node_budget = 500;
constexpr std::size_t recursive_node_budget = 10000;
constexpr double criterion1_seconds = 60.0;
constexpr double criterion4_seconds = 10.0;
constexpr double criterion9_seconds = 1.0;

struct Instance {
    std::string name;
    std::string domain;
    std::string problem;
    bool totally_ordered = true;
    oracle::Verdict verdict = oracle::Verdict::Inconclusive;
    std::optional<testing::Loaded> loaded = std::nullopt;
};

struct Report {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string &why) {
        pass = false;
        if (notes.size() < 8)
            notes.push_back(why);
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

oracle::Verdict oracle_verdict(const testing::Loaded &l) { return oracle::solvable(oracle::naive_ground(l.model)); }

/// Corpus fixtures, then random totally ordered and partially ordered problems
/// whose oracle verdict is conclusive.
std::vector<Instance> build_instances(Report &r) {
    std::vector<Instance> out;
    for (const auto &name : testing::corpus_names()) {
        const auto dir = testing::fixtures_dir() / "corpus" / name;
        Instance inst{.name = name, .domain = testing::read_text(dir / "domain.hddl"), .problem = testing::read_text(dir / "problem.hddl")};
        inst.loaded = testing::load_text(inst.domain, inst.problem);
        inst.totally_ordered = !total_order_violation(inst.loaded->ground).has_value();
        inst.verdict = oracle_verdict(*inst.loaded);
        out.push_back(std::move(inst));
    }
    for (bool po : {false, true}) {
        std::size_t accepted = 0;
        for (std::uint32_t seed = 1; accepted < random_instances && seed < 5000; ++seed) {
            const auto g = testing::random_problem(seed, po);
            Instance inst{.name = g.name, .domain = g.domain, .problem = g.problem};
            try {
                inst.loaded = testing::load_text(g.domain, g.problem);
            } catch (const std::exception &e) {
                r.fail(g.name + ": generated problem rejected by the frontend: " + e.what());
                continue;
            }
            inst.verdict = oracle_verdict(*inst.loaded);
            if (inst.verdict == oracle::Verdict::Inconclusive)
                continue;
            inst.totally_ordered = !total_order_violation(inst.loaded->ground).has_value();
            if (!po && !inst.totally_ordered) {
                r.fail(g.name + ": ordered-subtasks problem grounded as partially ordered");
                continue;
            }
            out.push_back(std::move(inst));
            ++accepted;
        }
        if (accepted < random_instances)
            r.fail("only " + std::to_string(accepted) + " random instances generated");
    }
    return out;
}

struct EngineRun {
    search::SearchResult result;
    std::string plan_text;
};

EngineRun run_engine(const GroundProblem &p, bool tfd) {
    search::SearchOptions options;
    options.max_nodes = engine_node_budget;
    EngineRun run;
    run.result = tfd ? search::tfd_solve(p, options) : search::pfd_solve(p, options);
    if (run.result.plan)
        run.plan_text = plan_io::write_plan(p, *run.result.plan);
    return run;
}

void print(int number, const std::string &title, const Report &r, const std::string &summary) {
    std::cout << "criterion " << number << " (" << title << "): " << (r.pass ? "PASS" : "FAIL") << "  " << summary
              << '\n';
    for (const auto &n : r.notes)
        std::cout << "    " << n << '\n';
}

// --- criteria 1, 2, 7, 8 share the engine runs -----------------------------

struct Runs {
    std::vector<std::optional<EngineRun>> tfd, pfd;
};

bool solved(const EngineRun &e) { return e.result.status == search::Status::Solved; }

struct Outcome {
    Report report;
    std::string summary;
};

struct EngineCriteria {
    Outcome oracle, soundness, cross_check, determinism;
};

/// `setup_seconds` is the time spent generating instances and running the oracle.
EngineCriteria criteria_1_2_7_8(const std::vector<Instance> &instances, const Report &generation,
                                double setup_seconds) {
    Report c1 = generation, c2, c7, c8;
    const auto start = Clock::now();
    Runs runs;
    std::size_t comparisons = 0, solvable = 0, plans = 0, to_instances = 0;
    for (const auto &inst : instances) {
        const auto &p = inst.loaded->ground;
        const bool oracle_yes = inst.verdict == oracle::Verdict::Solvable;
        solvable += oracle_yes;
        std::optional<EngineRun> tfd, pfd;
        if (inst.totally_ordered)
            tfd = run_engine(p, true);
        pfd = run_engine(p, false);
        for (const auto *run : {tfd ? &*tfd : nullptr, &*pfd}) {
            if (!run)
                continue;
            const char *engine = run == &*pfd ? "pfd" : "tfd";
            ++comparisons;
            if (solved(*run) != oracle_yes)
                c1.fail(inst.name + ": " + engine + " says " + search::to_string(run->result.status) +
                        ", oracle says " + oracle::to_string(inst.verdict));
            if (solved(*run)) {
                ++plans;
                const auto v = plan_io::validate_plan(p, *run->result.plan);
                if (!v.valid())
                    c2.fail(inst.name + ": " + engine + " plan invalid: " + v.reason);
            }
        }
        if (inst.totally_ordered) {
            ++to_instances;
            if (solved(*tfd) != solved(*pfd))
                c7.fail(inst.name + ": tfd " + search::to_string(tfd->result.status) + " vs pfd " +
                        search::to_string(pfd->result.status));
            for (const auto *run : {&*tfd, &*pfd})
                if (solved(*run) && !plan_io::validate_plan(p, *run->result.plan).valid())
                    c7.fail(inst.name + ": plan does not validate");
        }
        runs.tfd.push_back(std::move(tfd));
        runs.pfd.push_back(std::move(pfd));
    }
    const double elapsed = setup_seconds + seconds_since(start);
    if (elapsed >= criterion1_seconds)
        c1.fail("runtime " + std::to_string(elapsed) + " s");

    // Determinism: parse, ground and solve every instance a second time.
    std::size_t reruns = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto again = testing::load_text(instances[i].domain, instances[i].problem);
        for (bool tfd : {true, false}) {
            const auto &first = tfd ? runs.tfd[i] : runs.pfd[i];
            if (!first)
                continue;
            const auto second = run_engine(again.ground, tfd);
            ++reruns;
            if (second.plan_text != first->plan_text)
                c8.fail(instances[i].name + ": plan text differs between runs");
            if (second.result.stats.expanded != first->result.stats.expanded)
                c8.fail(instances[i].name + ": expansion counts differ between runs");
        }
    }

    std::ostringstream s1, s2, s7, s8;
    s1 << comparisons << " engine verdicts on " << instances.size() << " instances (" << solvable
       << " solvable per oracle), " << elapsed << " s";
    s2 << plans << " plans validated";
    s7 << to_instances << " totally ordered instances";
    s8 << reruns << " reruns compared";
    return {{c1, s1.str()}, {c2, s2.str()}, {c7, s7.str()}, {c8, s8.str()}};
}

// --- criterion 3 -------------------------------------------------------------

bool criterion_3(const std::vector<Instance> &instances) {
    Report r;
    const oracle::EnumerationBounds bounds{.max_actions = 6, .max_network = 8};
    std::size_t compared = 0;
    std::vector<const Instance *> subjects;
    for (const auto &inst : instances)
        subjects.push_back(&inst);
    const auto knot = testing::fixtures_dir() / "extra" / "knot";
    Instance knot_inst{.name = "knot", .domain = testing::read_text(knot / "domain.hddl"), .problem = testing::read_text(knot / "problem.hddl")};
    knot_inst.loaded = testing::load_text(knot_inst.domain, knot_inst.problem);
    subjects.push_back(&knot_inst);
    for (const auto *inst : subjects) {
        const auto naive = oracle::enumerate_plans(oracle::naive_ground(inst->loaded->model), bounds);
        const auto compact = oracle::enumerate_plans(oracle::explicit_from_ground(inst->loaded->ground), bounds);
        ++compared;
        if (naive != compact)
            r.fail(inst->name + ": " + std::to_string(naive.size()) + " naive plans vs " +
                   std::to_string(compact.size()) + " compact");
    }
    const auto &t = *std::find_if(instances.begin(), instances.end(), [](const Instance &i) {
                         return i.name == "transport";
                     })->loaded;
    const auto pruned_actions = t.stats.naive_actions - t.stats.actions;
    const auto pruned_methods = t.stats.naive_methods - t.stats.methods;
    if (pruned_actions == 0 || pruned_methods == 0)
        r.fail("transport grounding pruned nothing");
    std::ostringstream s;
    s << compared << " instances with equal plan sets; transport pruned " << pruned_actions << " actions, "
      << pruned_methods << " methods";
    print(3, "grounding compaction soundness", r, s.str());
    return r.pass;
}

// --- criterion 4 -------------------------------------------------------------

using Dense = std::vector<std::vector<bool>>;

/// Fixpoint of M := M or M*M.
Dense power_fixpoint(Dense m) {
    const std::size_t n = m.size();
    for (bool changed = true; changed;) {
        changed = false;
        Dense next = m;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n && !next[i][j]; ++k)
                    if (m[i][k] && m[k][j]) {
                        next[i][j] = true;
                        changed = true;
                    }
        m = std::move(next);
    }
    return m;
}

bool matches(const BoolMatrix &b, const Dense &d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (b.get(i, j) != d[i][j])
                return false;
    return true;
}

bool criterion_4() {
    Report r;
    const auto start = Clock::now();
    std::size_t checked = 0;
    auto check = [&](const Dense &d) {
        BoolMatrix b(d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j)
                if (d[i][j])
                    b.set(i, j);
        const BoolMatrix closed = warshall_closure(b);
        ++checked;
        if (!matches(closed, power_fixpoint(d)))
            r.fail("closure differs from the matrix-power fixpoint on a " + std::to_string(d.size()) + "x" +
                   std::to_string(d.size()) + " matrix");
        if (!(warshall_closure(closed) == closed))
            r.fail("closure is not idempotent");
    };
    for (std::size_t n = 0; n <= 4; ++n) {
        const std::size_t off = n * (n - (n ? 1 : 0));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off); ++mask) {
            Dense d(n, std::vector<bool>(n, false));
            std::size_t bit = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j)
                        d[i][j] = (mask >> bit++) & 1U;
            check(d);
        }
    }
    std::mt19937 rng(8);
    std::bernoulli_distribution edge(0.2);
    for (int sample = 0; sample < 1000; ++sample) {
        Dense d(8, std::vector<bool>(8, false));
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                d[i][j] = i != j && edge(rng);
        check(d);
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= criterion4_seconds)
        r.fail("runtime " + std::to_string(elapsed) + " s");
    std::ostringstream s;
    s << checked << " matrices, " << elapsed << " s";
    print(4, "Warshall correctness", r, s.str());
    return r.pass;
}

// --- criterion 5 -------------------------------------------------------------

bool criterion_5() {
    Report r;
    using search::TfdSearch;
    const std::string door_domain = testing::read_text(testing::fixtures_dir() / "corpus/door/domain.hddl");

    // Empty task list: the root is already a solution with the empty plan.
    {
        const auto l = testing::load_text(door_domain, "(define (problem empty) (:domain door) (:objects d1 - door)"
                                                       " (:htn :ordered-subtasks ()) (:init (closed d1)))");
        const auto res = search::tfd_solve(l.ground);
        if (res.status != search::Status::Solved || !res.plan->actions.empty() || !res.plan->decompositions.empty())
            r.fail("empty task list did not yield the empty plan");
    }
    // No applicable relevant action: the second open-door after the door is open.
    {
        const auto l = testing::load_fixture("corpus/door-unsolvable");
        TfdSearch s(l.ground, {});
        auto a = s.expand(s.root());                   // make-open -> m-open
        auto b = a.empty() ? a : s.expand(a.front());  // first open-door
        if (a.size() != 1 || b.size() != 1 || s.tasks(b.front()).size() != 1)
            r.fail("door-unsolvable did not reach the second open-door");
        else {
            const auto head = s.tasks(b.front()).front();
            if (!l.ground.is_primitive(head) || !s.expand_primitive(b.front()).empty() ||
                !s.expand(b.front()).empty())
                r.fail("primitive task without applicable action has successors");
        }
    }
    // No applicable method: make-open in a state with neither closed nor open.
    {
        auto l = testing::load_fixture("corpus/door");
        l.ground.s0 = State(l.ground.num_facts());
        TfdSearch s(l.ground, {});
        if (!s.expand_compound(s.root()).empty())
            r.fail("compound task without applicable method has successors");
    }
    // Returned plan is a followed by the rest; subtasks are put before the remaining tasks.
    {
        const auto l = testing::load_fixture("corpus/transport");
        TfdSearch s(l.ground, {});
        std::vector<TfdSearch::NodeId> layer{s.root()};
        std::size_t prefix_checks = 0, prepend_checks = 0;
        for (int depth = 0; depth < 12 && !layer.empty(); ++depth) {
            std::vector<TfdSearch::NodeId> next;
            for (auto id : layer) {
                const auto parent_tasks = s.tasks(id);
                if (parent_tasks.empty())
                    continue;
                const auto parent_prefix = s.plan_prefix(id);
                for (auto child : s.expand(id)) {
                    const auto &step = s.node(child).step;
                    const auto child_tasks = s.tasks(child);
                    std::vector<TaskId> expected;
                    if (step.decomposition) {
                        const auto &m = l.ground.methods[static_cast<std::size_t>(step.id)];
                        expected = m.subtasks;
                        ++prepend_checks;
                    } else {
                        auto prefix = parent_prefix;
                        prefix.push_back(step.id);
                        if (s.plan_prefix(child) != prefix)
                            r.fail("child plan is not the parent plan followed by the action");
                        ++prefix_checks;
                    }
                    expected.insert(expected.end(), parent_tasks.begin() + 1, parent_tasks.end());
                    if (child_tasks != expected)
                        r.fail("successor task list is not subtasks followed by the remaining tasks");
                    next.push_back(child);
                }
            }
            layer = std::move(next);
        }
        const auto res = search::tfd_solve(l.ground);
        if (res.status != search::Status::Solved)
            r.fail("transport not solved");
        if (prefix_checks == 0 || prepend_checks == 0)
            r.fail("no transitions checked");
    }
    print(5, "TFD step fidelity", r, "empty list, dead ends, plan prefix, prepend");
    return r.pass;
}

// --- criterion 6 -------------------------------------------------------------

bool criterion_6() {
    Report r;
    using search::NodeRank;
    using search::select_node;
    auto pick = [](std::vector<NodeRank> v) { return v[select_node(v)]; };
    if (pick({{2, 5, 0}, {1, 9, 1}}) != NodeRank{1, 9, 1})
        r.fail("fewest non-decomposed tasks not preferred");
    if (pick({{1, 3, 0}, {1, 2, 1}}) != NodeRank{1, 2, 1})
        r.fail("fewest actions not preferred among ties");
    if (pick({{4, 4, 7}}) != NodeRank{4, 4, 7})
        r.fail("singleton frontier");
    if (pick({{1, 2, 5}, {1, 2, 3}, {1, 2, 4}}) != NodeRank{1, 2, 3})
        r.fail("earliest insertion not preferred among full ties");
    // Hand-ranked frontier, best first.
    const std::vector<NodeRank> ranked{{0, 7, 9}, {1, 0, 4}, {1, 1, 2}, {1, 1, 3}, {2, 0, 0}, {3, 9, 1}};
    std::vector<NodeRank> pool(ranked.rbegin(), ranked.rend());
    for (const auto &expected : ranked) {
        const auto i = select_node(pool);
        if (pool[i] != expected)
            r.fail("hand-ranked frontier drained out of order");
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
    }
    // Preorder on (non-decomposed, actions): total, transitive.
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> small(0, 3);
    auto weak_le = [](const NodeRank &a, const NodeRank &b) {
        return std::pair(a.non_decomposed, a.actions) <= std::pair(b.non_decomposed, b.actions);
    };
    std::size_t triples = 0;
    for (int k = 0; k < 20000; ++k) {
        NodeRank a{static_cast<std::size_t>(small(rng)), static_cast<std::size_t>(small(rng)), 0};
        NodeRank b{static_cast<std::size_t>(small(rng)), static_cast<std::size_t>(small(rng)), 1};
        NodeRank c{static_cast<std::size_t>(small(rng)), static_cast<std::size_t>(small(rng)), 2};
        ++triples;
        if (!weak_le(a, b) && !weak_le(b, a))
            r.fail("preorder not total");
        if (weak_le(a, b) && weak_le(b, c) && !weak_le(a, c))
            r.fail("preorder not transitive");
        // select_node agrees with the preorder, seq breaking ties.
        std::vector<NodeRank> f{c, a, b};
        const auto best = f[select_node(f)];
        for (const auto &x : f)
            if (!weak_le(best, x))
                r.fail("select_node returned a node that is not minimal");
        if ((a < b) == (b < a))
            r.fail("strict order not antisymmetric");
    }
    print(6, "selection strategy fidelity", r, std::to_string(triples) + " random triples, hand-ranked frontiers");
    return r.pass;
}

// --- criterion 9 -------------------------------------------------------------

bool criterion_9() {
    Report r;
    std::ostringstream s;
    for (const auto &name : testing::corpus_names()) {
        const auto dir = testing::fixtures_dir() / "corpus" / name;
        app::RunConfig config;
        config.domain_path = dir / "domain.hddl";
        config.problem_path = dir / "problem.hddl";
        config.search = name == "transport-po" ? app::SearchKind::Pfd : app::SearchKind::Tfd;
        const bool recursive = name == "spiral";
        if (recursive)
            config.max_nodes = recursive_node_budget;
        std::ostringstream sink;
        const auto start = Clock::now();
        const auto res = app::execute(config, sink, sink);
        const double elapsed = seconds_since(start);
        s << (s.tellp() > 0 ? "; " : "") << name << " " << app::to_string(res.outcome) << " " << elapsed << " s";
        if (recursive && (app::exit_code(res.outcome) != app::exit_resource_exhausted ||
                          res.search_stats.expanded != recursive_node_budget))
            r.fail("recursive fixture did not stop at the node budget with exit code 2");
        if (elapsed >= criterion9_seconds)
            r.fail(name + " took " + std::to_string(elapsed) + " s");
        if (res.outcome == app::Outcome::InputError || res.outcome == app::Outcome::InvalidPlan)
            r.fail(name + ": " + res.message);
    }
    print(9, "performance sanity", r, s.str());
    return r.pass;
}

}  // namespace

int main() {
    Report generation;
    const auto start = Clock::now();
    const auto instances = build_instances(generation);
    const auto engines = criteria_1_2_7_8(instances, generation, seconds_since(start));
    print(1, "oracle equivalence", engines.oracle.report, engines.oracle.summary);
    print(2, "soundness", engines.soundness.report, engines.soundness.summary);
    bool ok = engines.oracle.report.pass && engines.soundness.report.pass;
    ok = criterion_3(instances) && ok;
    ok = criterion_4() && ok;
    ok = criterion_5() && ok;
    ok = criterion_6() && ok;
    print(7, "TFD/PFD cross-check", engines.cross_check.report, engines.cross_check.summary);
    print(8, "determinism", engines.determinism.report, engines.determinism.summary);
    ok = engines.cross_check.report.pass && engines.determinism.report.pass && ok;
    ok = criterion_9() && ok;
    std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << '\n';
    return ok ? 0 : 1;
}
