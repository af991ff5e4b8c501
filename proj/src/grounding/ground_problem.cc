#include "htn/grounding/ground_problem.h"

#include <cassert>
#include <sstream>

namespace htn {

bool applicable(const GroundAction &a, const State &s) {
    return a.pre_pos.is_subset_of(s) && !a.pre_neg.intersects(s);
}

bool applicable(const GroundMethod &m, const State &s) {
    return m.pre_pos.is_subset_of(s) && !m.pre_neg.intersects(s);
}

State apply(const State &s, const GroundAction &a) {
    assert(applicable(a, s));
    State next = s;
    next.subtract(a.eff_del);
    next |= a.eff_add;
    return next;
}

namespace {

std::string render(const std::string &head, const std::vector<lifted::ObjectId> &args,
                   const lifted::SymbolTable &st) {
    std::string out = "(" + head;
    for (auto o : args)
        out += " " + st.objects.name(o);
    return out + ")";
}

}  // namespace

std::string fact_name(const GroundProblem &p, FactId f) {
    const auto &g = p.facts[static_cast<std::size_t>(f)];
    return render(p.symbols.predicates.name(g.predicate), g.args, p.symbols);
}

std::string task_name(const GroundProblem &p, TaskId t) {
    const auto &sig = p.tasks[static_cast<std::size_t>(t)];
    const auto &names = sig.primitive ? p.symbols.primitive_tasks : p.symbols.compound_tasks;
    return render(names.name(sig.name), sig.args, p.symbols);
}

std::string action_name(const GroundProblem &p, ActionId a) {
    const auto &act = p.actions[static_cast<std::size_t>(a)];
    return render(p.symbols.primitive_tasks.name(act.name), act.args, p.symbols);
}

std::optional<std::string> total_order_violation(const GroundProblem &p) {
    if (!p.initial_network_totally_ordered)
        return std::string("the initial task network is partially ordered");
    for (const auto &m : p.methods) {
        if (!m.totally_ordered) {
            std::ostringstream out;
            out << "method " << p.symbols.methods.name(m.name) << " for " << task_name(p, m.task)
                << " is partially ordered";
            return out.str();
        }
    }
    return std::nullopt;
}

}  // namespace htn
