#ifndef HTN_GROUNDING_GROUND_PROBLEM_H
#define HTN_GROUNDING_GROUND_PROBLEM_H

#include "htn/lifted/indexed_model.h"
#include "htn/network/task_network.h"
#include "htn/util/bitset.h"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace htn {

using FactId = int;
using ActionId = int;
using MethodId = int;
using State = Bitset;

/// Ground task: primitive (name = primitive task/action id) or compound.
struct TaskSignature {
    bool primitive = false;
    int name = 0;
    std::vector<lifted::ObjectId> args;
    friend auto operator<=>(const TaskSignature &, const TaskSignature &) = default;
};

struct GroundAction {
    ActionId id = 0;
    TaskId task = 0;
    int name = 0;  // primitive task id
    std::vector<lifted::ObjectId> args;
    Bitset pre_pos, pre_neg, eff_add, eff_del;
};

struct GroundMethod {
    MethodId id = 0;
    TaskId task = 0;
    int name = 0;  // method name id
    std::vector<lifted::ObjectId> args;  // method parameter binding
    Bitset pre_pos, pre_neg;
    std::vector<TaskId> subtasks;
    /// Irreflexive before-relation over subtask positions; the full strict
    /// chain when totally ordered. Not closed for partially ordered methods.
    BoolMatrix ordering;
    bool totally_ordered = true;
};

struct GroundProblem {
    lifted::SymbolTable symbols;
    std::vector<lifted::GroundAtom> facts;  // fact id = index, sorted
    State s0;
    std::vector<GroundAction> actions;
    std::vector<GroundMethod> methods;
    std::vector<TaskSignature> tasks;  // task id = index
    std::vector<std::vector<ActionId>> relevant_actions;  // by task id
    std::vector<std::vector<MethodId>> relevant_methods;  // by task id
    TaskNetwork initial_network;  // ordering closed
    bool initial_network_totally_ordered = true;
    /// Set when grounding proved the problem unsolvable (an initial task was
    /// pruned, or the initial ordering is cyclic).
    std::optional<std::string> grounding_failure;

    std::size_t num_facts() const { return facts.size(); }
    bool is_primitive(TaskId t) const { return tasks[static_cast<std::size_t>(t)].primitive; }
};

bool applicable(const GroundAction &a, const State &s);
bool applicable(const GroundMethod &m, const State &s);
/// (s \ del) ∪ add. The action must be applicable.
State apply(const State &s, const GroundAction &a);

std::string fact_name(const GroundProblem &p, FactId f);
std::string task_name(const GroundProblem &p, TaskId t);
std::string action_name(const GroundProblem &p, ActionId a);

/// Null if TFD can run on the problem, else a diagnosis naming the first
/// partially ordered method or the initial network.
std::optional<std::string> total_order_violation(const GroundProblem &p);

}  // namespace htn

#endif
