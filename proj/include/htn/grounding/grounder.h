#ifndef HTN_GROUNDING_GROUNDER_H
#define HTN_GROUNDING_GROUNDER_H

#include "htn/grounding/ground_problem.h"
#include "htn/lifted/inertia.h"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace htn::grounding {

using lifted::GroundAtom;

/// Ground action before bitset encoding; literals over static predicates
/// have already been checked and removed.
struct CandidateAction {
    int action = 0;
    std::vector<lifted::ObjectId> args;
    std::vector<GroundAtom> pre_pos, pre_neg, add, del;  // sorted, unique
    friend bool operator==(const CandidateAction &, const CandidateAction &) = default;
};

struct CandidateMethod {
    int method = 0;
    std::vector<lifted::ObjectId> args;
    TaskId task = 0;
    std::vector<GroundAtom> pre_pos, pre_neg;
    std::vector<TaskId> subtasks;
    std::vector<std::pair<int, int>> ordering;
    bool totally_ordered = true;
};

struct ReachabilityResult {
    std::set<GroundAtom> reachable;  // relaxed fixpoint
    std::set<GroundAtom> universe;  // reachable plus negative precondition atoms
    std::vector<CandidateAction> actions;  // survivors, input order
};

struct MethodGrounding {
    std::vector<TaskSignature> tasks;  // surviving tasks, task id = index
    std::vector<CandidateAction> actions;  // surviving actions, one per primitive task
    std::vector<TaskId> action_task;
    std::vector<CandidateMethod> methods;  // surviving methods
    std::vector<TaskId> initial_tasks;
    std::size_t tasks_encountered = 0;
    std::size_t methods_instantiated = 0;
    std::optional<std::string> failure;
};

struct GroundingStats {
    std::uint64_t naive_facts = 0;
    std::uint64_t naive_actions = 0;
    std::uint64_t naive_methods = 0;
    std::size_t candidate_actions = 0;
    std::size_t reachable_actions = 0;
    std::size_t actions = 0;
    std::size_t reachable_facts = 0;
    std::size_t facts = 0;
    std::size_t tasks_encountered = 0;
    std::size_t tasks = 0;
    std::size_t methods_instantiated = 0;
    std::size_t methods = 0;
    std::vector<std::string> warnings;
};

/// Step 3: enumerate parameter bindings over the (inferred) domains, pruning
/// bindings that violate static literals or equality constraints.
std::vector<CandidateAction> instantiate_actions(const lifted::IndexedModel &model,
                                                 const lifted::InertiaClass &inertia,
                                                 std::vector<std::string> *warnings = nullptr);

/// Step 4: delete-relaxation fixpoint from the initial state.
ReachabilityResult reachability_filter(std::vector<CandidateAction> candidates,
                                       const std::vector<GroundAtom> &init,
                                       const lifted::InertiaClass &inertia);

/// Step 5: top-down method instantiation from the initial network followed by
/// the pruning fixpoint (tasks without relevant actions or methods, methods
/// with a pruned subtask) and removal of tasks no longer reachable.
MethodGrounding instantiate_methods(const lifted::IndexedModel &model, const lifted::InertiaClass &inertia,
                                    const ReachabilityResult &reach);

/// Step 6: fact table, bitsets and relevance maps.
GroundProblem encode_bitsets(const lifted::IndexedModel &model, const ReachabilityResult &reach,
                             MethodGrounding grounding);

/// Full pipeline on a freshly encoded model: inertia, domain inference,
/// simplification, then steps 3 to 6.
GroundProblem ground(const lifted::IndexedModel &encoded, GroundingStats *stats = nullptr);

/// Fact, action, task and method tables with bit indices.
std::string dump_ground(const GroundProblem &problem);
std::string format_stats(const GroundingStats &stats);

}  // namespace htn::grounding

#endif
