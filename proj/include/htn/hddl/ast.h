#ifndef HTN_HDDL_AST_H
#define HTN_HDDL_AST_H

#include <string>
#include <vector>

namespace htn::hddl {

/// Source position of an AST element. Positions are diagnostic metadata only:
/// any two SourceLocs compare equal, so AST equality is purely structural.
struct SourceLoc {
    int line = 0;
    int column = 0;
    friend bool operator==(const SourceLoc &, const SourceLoc &) { return true; }
};

inline constexpr const char *root_type = "object";

/// A name with its declared type; `type` is "object" when none was given.
/// Also used for (type, parent) pairs in the :types section.
struct TypedName {
    std::string name;
    std::string type;
    SourceLoc loc;
    friend bool operator==(const TypedName &, const TypedName &) = default;
};

/// A variable (`?x`) or a constant/object name.
struct TermAst {
    std::string text;
    SourceLoc loc;
    bool is_variable() const { return !text.empty() && text.front() == '?'; }
    friend bool operator==(const TermAst &, const TermAst &) = default;
};

/// Predicate or task application. Predicate "=" denotes an equality constraint.
struct AtomAst {
    std::string name;
    std::vector<TermAst> args;
    SourceLoc loc;
    friend bool operator==(const AtomAst &, const AtomAst &) = default;
};

struct LiteralAst {
    AtomAst atom;
    bool positive = true;
    friend bool operator==(const LiteralAst &, const LiteralAst &) = default;
};

struct SignatureAst {
    std::string name;
    std::vector<TypedName> parameters;
    SourceLoc loc;
    friend bool operator==(const SignatureAst &, const SignatureAst &) = default;
};

struct SubtaskAst {
    std::string label;
    AtomAst task;
    friend bool operator==(const SubtaskAst &, const SubtaskAst &) = default;
};

struct OrderingAst {
    std::string before;
    std::string after;
    SourceLoc before_loc;
    SourceLoc after_loc;
    friend bool operator==(const OrderingAst &, const OrderingAst &) = default;
};

/// Subtasks with before-pairs over their labels. When `totally_ordered` the
/// list order is the execution order and `ordering` is empty.
struct TaskNetworkAst {
    std::vector<SubtaskAst> subtasks;
    std::vector<OrderingAst> ordering;
    bool totally_ordered = true;
    friend bool operator==(const TaskNetworkAst &, const TaskNetworkAst &) = default;
};

struct LiftedActionAst {
    std::string name;
    std::vector<TypedName> parameters;
    std::vector<LiteralAst> precondition;
    std::vector<LiteralAst> effect;
    SourceLoc loc;
    friend bool operator==(const LiftedActionAst &, const LiftedActionAst &) = default;
};

struct LiftedMethodAst {
    std::string name;
    std::vector<TypedName> parameters;
    AtomAst task;
    std::vector<LiteralAst> precondition;
    TaskNetworkAst network;
    SourceLoc loc;
    friend bool operator==(const LiftedMethodAst &, const LiftedMethodAst &) = default;
};

struct LiftedDomainAst {
    std::string name;
    std::vector<std::string> requirements;
    std::vector<TypedName> types;  // (type, parent)
    std::vector<TypedName> constants;
    std::vector<SignatureAst> predicates;
    std::vector<SignatureAst> compound_tasks;
    std::vector<LiftedActionAst> actions;
    std::vector<LiftedMethodAst> methods;
    friend bool operator==(const LiftedDomainAst &, const LiftedDomainAst &) = default;
};

struct LiftedProblemAst {
    std::string name;
    std::string domain_name;
    std::vector<std::string> requirements;
    std::vector<TypedName> objects;
    std::vector<AtomAst> init;
    TaskNetworkAst initial_network;
    friend bool operator==(const LiftedProblemAst &, const LiftedProblemAst &) = default;
};

}  // namespace htn::hddl

#endif
