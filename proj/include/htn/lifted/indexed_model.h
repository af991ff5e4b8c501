#ifndef HTN_LIFTED_INDEXED_MODEL_H
#define HTN_LIFTED_INDEXED_MODEL_H

#include "htn/hddl/ast.h"
#include "htn/lifted/symbol_table.h"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace htn::lifted {

/// Operator parameter (by position) or object.
struct Term {
    enum class Kind { Variable, Constant };
    Kind kind = Kind::Constant;
    int id = 0;

    static Term variable(int index) { return {Kind::Variable, index}; }
    static Term constant(ObjectId object) { return {Kind::Constant, object}; }
    bool is_variable() const { return kind == Kind::Variable; }

    friend auto operator<=>(const Term &, const Term &) = default;
};

struct LiftedAtom {
    PredicateId predicate = 0;
    std::vector<Term> args;
    friend auto operator<=>(const LiftedAtom &, const LiftedAtom &) = default;
};

struct LiftedLiteral {
    LiftedAtom atom;
    bool positive = true;
    friend auto operator<=>(const LiftedLiteral &, const LiftedLiteral &) = default;
};

struct Equality {
    Term lhs;
    Term rhs;
    bool positive = true;
    friend auto operator<=>(const Equality &, const Equality &) = default;
};

struct Condition {
    std::vector<LiftedLiteral> literals;
    std::vector<Equality> equalities;
    bool empty() const { return literals.empty() && equalities.empty(); }
    friend bool operator==(const Condition &, const Condition &) = default;
};

/// Fully instantiated atom; ordering is (predicate, args) lexicographic.
struct GroundAtom {
    PredicateId predicate = 0;
    std::vector<ObjectId> args;
    friend auto operator<=>(const GroundAtom &, const GroundAtom &) = default;
};

struct TaskRef {
    bool primitive = false;
    int task = 0;  // primitive task (= action) id or compound task id
    std::vector<Term> args;
    friend bool operator==(const TaskRef &, const TaskRef &) = default;
};

/// Subtasks in declaration order with before-pairs over list positions.
struct LiftedNetwork {
    std::vector<TaskRef> tasks;
    std::vector<std::pair<int, int>> ordering;
    bool totally_ordered = true;
    friend bool operator==(const LiftedNetwork &, const LiftedNetwork &) = default;
};

struct LiftedAction {
    int name = 0;  // primitive task id
    std::vector<TypeId> parameter_types;
    std::vector<std::vector<ObjectId>> parameter_domains;  // ascending
    Condition precondition;
    std::vector<LiftedAtom> add;
    std::vector<LiftedAtom> del;
    bool instantiable = true;
    friend bool operator==(const LiftedAction &, const LiftedAction &) = default;
};

struct LiftedMethod {
    int name = 0;  // method id
    std::vector<TypeId> parameter_types;
    std::vector<std::vector<ObjectId>> parameter_domains;
    int task = 0;  // compound task id
    std::vector<Term> task_args;
    Condition precondition;
    LiftedNetwork network;
    bool instantiable = true;
    friend bool operator==(const LiftedMethod &, const LiftedMethod &) = default;
};

/// The lifted domain and problem with every name replaced by a dense id.
struct IndexedModel {
    SymbolTable symbols;
    std::vector<std::vector<TypeId>> predicate_types;
    std::vector<std::vector<TypeId>> compound_task_types;
    std::vector<LiftedAction> actions;  // index = primitive task id
    std::vector<LiftedMethod> methods;  // index = method id
    std::vector<GroundAtom> init;  // sorted, unique
    LiftedNetwork initial_network;  // constant terms only
};

IndexedModel encode_integers(const hddl::LiftedDomainAst &domain, const hddl::LiftedProblemAst &problem);

/// Human-readable dump: name tables followed by operators in id form.
/// Output order depends only on ids.
std::string dump_lifted(const IndexedModel &model);

}  // namespace htn::lifted

#endif
