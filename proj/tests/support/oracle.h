#ifndef HTN_TESTS_SUPPORT_ORACLE_H
#define HTN_TESTS_SUPPORT_ORACLE_H

// Reference semantics for tests: problems with string-named facts and tasks,
// grounded by brute force and searched exhaustively. Nothing here uses the
// planner's bitsets, matrices or search code.

#include "htn/grounding/ground_problem.h"
#include "htn/lifted/indexed_model.h"

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace htn::oracle {

struct ExplicitAction {
    std::string name;  // "(drive t1 l1 l2)", also the task it accomplishes
    std::set<std::string> pre_pos, pre_neg, add, del;
};

struct ExplicitMethod {
    std::string name;  // method name only
    std::string task;
    std::set<std::string> pre_pos, pre_neg;
    std::vector<std::string> subtasks;
    std::set<std::pair<int, int>> ordering;  // positions, not necessarily closed
};

struct ExplicitProblem {
    std::set<std::string> s0;
    std::vector<ExplicitAction> actions;
    std::vector<ExplicitMethod> methods;
    std::vector<std::string> initial_tasks;
    std::set<std::pair<int, int>> initial_ordering;
};

/// Every parameter tuple of every operator over the declared types. Only
/// equality constraints and contradictory operators (pre+ and pre- overlap,
/// or an atom both added and deleted) are filtered.
ExplicitProblem naive_ground(const lifted::IndexedModel &model);

/// The compact ground problem in the same string form.
ExplicitProblem explicit_from_ground(const GroundProblem &problem);

struct EnumerationBounds {
    std::size_t max_actions = 6;
    std::size_t max_network = 8;
};

/// All action-name sequences of at most `max_actions` actions that empty the
/// initial network, progressing any free task next and never holding more
/// than `max_network` tasks.
std::set<std::vector<std::string>> enumerate_plans(const ExplicitProblem &problem, const EnumerationBounds &bounds);

enum class Verdict { Solvable, Unsolvable, Inconclusive };
const char *to_string(Verdict v);

/// Exhaustive search over (state, network) configurations, with the network
/// size bound raised one task at a time up to `max_network`. Inconclusive when
/// no solution was found but some configuration exceeded the bound, or when
/// more than `max_configurations` were seen in one round.
Verdict solvable(const ExplicitProblem &problem, std::size_t max_network = 14,
                 std::size_t max_configurations = 2'000'000);

}  // namespace htn::oracle

#endif
