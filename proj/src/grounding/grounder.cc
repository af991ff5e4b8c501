#include "htn/grounding/grounder.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>

namespace htn::grounding {

using lifted::Condition;
using lifted::Inertia;
using lifted::InertiaClass;
using lifted::IndexedModel;
using lifted::LiftedAtom;
using lifted::ObjectId;
using lifted::Term;

namespace {

using Binding = std::vector<ObjectId>;  // -1 = unbound
constexpr ObjectId unbound = -1;

ObjectId value_of(const Term &t, const Binding &b) {
    return t.is_variable() ? b[static_cast<std::size_t>(t.id)] : t.id;
}

GroundAtom ground_atom(const LiftedAtom &a, const Binding &b) {
    GroundAtom g{a.predicate, {}};
    g.args.reserve(a.args.size());
    for (const auto &t : a.args)
        g.args.push_back(value_of(t, b));
    return g;
}

bool is_static(const InertiaClass &inertia, lifted::PredicateId p) {
    return inertia[static_cast<std::size_t>(p)] == Inertia::Full;
}

void sort_unique(std::vector<GroundAtom> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool intersects(const std::vector<GroundAtom> &a, const std::vector<GroundAtom> &b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

/// Backtracking enumeration of parameter bindings. Equalities and static
/// literals are checked as soon as all of their variables are bound.
class BindingEnumerator {
public:
    BindingEnumerator(const Condition &pre, const std::vector<std::vector<ObjectId>> &domains,
                      const InertiaClass &inertia, const std::set<GroundAtom> &init)
        : pre_(pre), domains_(domains), inertia_(inertia), init_(init) {}

    /// Calls emit(binding) for every complete binding extending `partial`.
    template <typename Emit>
    void run(Binding partial, Emit &&emit) {
        order_.clear();
        for (std::size_t v = 0; v < partial.size(); ++v)
            if (partial[v] == unbound)
                order_.push_back(static_cast<int>(v));
        std::vector<int> depth_of(partial.size(), -1);
        for (std::size_t k = 0; k < order_.size(); ++k)
            depth_of[static_cast<std::size_t>(order_[k])] = static_cast<int>(k);

        checks_.assign(order_.size() + 1, {});
        auto trigger = [&](const std::vector<Term> &terms) {
            int d = -1;
            for (const auto &t : terms)
                if (t.is_variable())
                    d = std::max(d, depth_of[static_cast<std::size_t>(t.id)]);
            return static_cast<std::size_t>(d + 1);
        };
        for (const auto &lit : pre_.literals)
            if (is_static(inertia_, lit.atom.predicate))
                checks_[trigger(lit.atom.args)].push_back({&lit, nullptr});
        for (const auto &eq : pre_.equalities)
            checks_[trigger({eq.lhs, eq.rhs})].push_back({nullptr, &eq});

        if (!passes(0, partial))
            return;
        extend(0, partial, emit);
    }

private:
    struct Check {
        const lifted::LiftedLiteral *literal;
        const lifted::Equality *equality;
    };

    bool passes(std::size_t level, const Binding &b) const {
        for (const auto &c : checks_[level]) {
            if (c.literal) {
                const bool holds = init_.contains(ground_atom(c.literal->atom, b)) == c.literal->positive;
                if (!holds)
                    return false;
            } else {
                const bool equal = value_of(c.equality->lhs, b) == value_of(c.equality->rhs, b);
                if (equal != c.equality->positive)
                    return false;
            }
        }
        return true;
    }

    template <typename Emit>
    void extend(std::size_t k, Binding &b, Emit &emit) {
        if (k == order_.size()) {
            emit(static_cast<const Binding &>(b));
            return;
        }
        const auto var = static_cast<std::size_t>(order_[k]);
        for (ObjectId o : domains_[var]) {
            b[var] = o;
            if (passes(k + 1, b))
                extend(k + 1, b, emit);
        }
        b[var] = unbound;
    }

    const Condition &pre_;
    const std::vector<std::vector<ObjectId>> &domains_;
    const InertiaClass &inertia_;
    const std::set<GroundAtom> &init_;
    std::vector<int> order_;
    std::vector<std::vector<Check>> checks_;
};

/// Grounds the non-static literals of a condition.
void ground_condition(const Condition &pre, const Binding &b, const InertiaClass &inertia,
                      std::vector<GroundAtom> &pos, std::vector<GroundAtom> &neg) {
    for (const auto &lit : pre.literals) {
        if (is_static(inertia, lit.atom.predicate))
            continue;
        (lit.positive ? pos : neg).push_back(ground_atom(lit.atom, b));
    }
    sort_unique(pos);
    sort_unique(neg);
}

/// A negative literal that can never hold: the atom is initially true and
/// no action deletes atoms of its predicate.
bool negative_contradicted(const GroundAtom &g, const std::set<GroundAtom> &init, const InertiaClass &inertia) {
    const Inertia i = inertia[static_cast<std::size_t>(g.predicate)];
    return (i == Inertia::Negative || i == Inertia::Full) && init.contains(g);
}

std::uint64_t saturating_product(const std::vector<lifted::TypeId> &types, const lifted::SymbolTable &st) {
    std::uint64_t product = 1;
    for (auto t : types) {
        const auto n = static_cast<std::uint64_t>(st.members[static_cast<std::size_t>(t)].size());
        if (n != 0 && product > std::numeric_limits<std::uint64_t>::max() / n)
            return std::numeric_limits<std::uint64_t>::max();
        product *= n;
    }
    return product;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::string describe_action(const IndexedModel &model, int action, const std::vector<ObjectId> &args) {
    std::string out = "(" + model.symbols.primitive_tasks.name(action);
    for (auto o : args)
        out += " " + model.symbols.objects.name(o);
    return out + ")";
}

}  // namespace

std::vector<CandidateAction> instantiate_actions(const IndexedModel &model, const InertiaClass &inertia,
                                                 std::vector<std::string> *warnings) {
    const std::set<GroundAtom> init(model.init.begin(), model.init.end());
    std::vector<CandidateAction> out;
    for (std::size_t id = 0; id < model.actions.size(); ++id) {
        const auto &a = model.actions[id];
        if (!a.instantiable)
            continue;
        BindingEnumerator enumerate(a.precondition, a.parameter_domains, inertia, init);
        enumerate.run(Binding(a.parameter_types.size(), unbound), [&](const Binding &b) {
            CandidateAction c;
            c.action = static_cast<int>(id);
            c.args = b;
            ground_condition(a.precondition, b, inertia, c.pre_pos, c.pre_neg);
            if (intersects(c.pre_pos, c.pre_neg))
                return;
            for (const auto &atom : a.add)
                c.add.push_back(ground_atom(atom, b));
            for (const auto &atom : a.del)
                c.del.push_back(ground_atom(atom, b));
            sort_unique(c.add);
            sort_unique(c.del);
            if (intersects(c.add, c.del)) {
                if (warnings)
                    warnings->push_back("dropped " + describe_action(model, c.action, c.args) +
                                        ": it both adds and deletes the same atom");
                return;
            }
            out.push_back(std::move(c));
        });
    }
    return out;
}

ReachabilityResult reachability_filter(std::vector<CandidateAction> candidates, const std::vector<GroundAtom> &init,
                                       const InertiaClass &inertia) {
    const std::set<GroundAtom> init_set(init.begin(), init.end());
    ReachabilityResult r;
    r.reachable = init_set;
    std::vector<bool> fired(candidates.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (fired[i])
                continue;
            const auto &c = candidates[i];
            const bool pos_ok = std::all_of(c.pre_pos.begin(), c.pre_pos.end(),
                                            [&](const GroundAtom &g) { return r.reachable.contains(g); });
            if (!pos_ok)
                continue;
            const bool neg_ok = std::none_of(c.pre_neg.begin(), c.pre_neg.end(), [&](const GroundAtom &g) {
                return negative_contradicted(g, init_set, inertia);
            });
            if (!neg_ok)
                continue;
            fired[i] = true;
            changed = true;
            r.reachable.insert(c.add.begin(), c.add.end());
        }
    }
    r.universe = r.reachable;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!fired[i])
            continue;
        r.universe.insert(candidates[i].pre_neg.begin(), candidates[i].pre_neg.end());
        r.actions.push_back(std::move(candidates[i]));
    }
    return r;
}

MethodGrounding instantiate_methods(const IndexedModel &model, const InertiaClass &inertia,
                                    const ReachabilityResult &reach) {
    const std::set<GroundAtom> init(model.init.begin(), model.init.end());

    std::map<TaskSignature, std::size_t> action_by_signature;
    for (std::size_t i = 0; i < reach.actions.size(); ++i)
        action_by_signature.emplace(TaskSignature{true, reach.actions[i].action, reach.actions[i].args}, i);

    std::vector<std::vector<std::size_t>> methods_of_task(model.symbols.compound_tasks.names().size());
    for (std::size_t m = 0; m < model.methods.size(); ++m)
        if (model.methods[m].instantiable)
            methods_of_task[static_cast<std::size_t>(model.methods[m].task)].push_back(m);

    // Top-down exploration; every ground task signature is visited once.
    std::vector<TaskSignature> tasks;
    std::map<TaskSignature, TaskId> task_ids;
    std::deque<TaskId> queue;
    auto intern = [&](TaskSignature sig) {
        auto [it, inserted] = task_ids.emplace(sig, static_cast<TaskId>(tasks.size()));
        if (inserted) {
            tasks.push_back(std::move(sig));
            queue.push_back(it->second);
        }
        return it->second;
    };
    auto ground_task = [&](const lifted::TaskRef &ref, const Binding &b) {
        TaskSignature sig{ref.primitive, ref.task, {}};
        for (const auto &t : ref.args)
            sig.args.push_back(value_of(t, b));
        return intern(std::move(sig));
    };

    std::vector<TaskId> initial_tasks;
    for (const auto &ref : model.initial_network.tasks)
        initial_tasks.push_back(ground_task(ref, {}));

    std::vector<CandidateMethod> methods;
    std::map<TaskId, std::size_t> action_of_task;  // task -> index into reach.actions
    std::size_t instantiated = 0;

    while (!queue.empty()) {
        const TaskId tid = queue.front();
        queue.pop_front();
        const TaskSignature sig = tasks[static_cast<std::size_t>(tid)];
        if (sig.primitive) {
            if (auto it = action_by_signature.find(sig); it != action_by_signature.end())
                action_of_task.emplace(tid, it->second);
            continue;
        }
        for (std::size_t mi : methods_of_task[static_cast<std::size_t>(sig.name)]) {
            const auto &m = model.methods[mi];
            Binding partial(m.parameter_types.size(), unbound);
            bool consistent = true;
            for (std::size_t k = 0; k < m.task_args.size() && consistent; ++k) {
                const Term &t = m.task_args[k];
                const ObjectId value = sig.args[k];
                if (!t.is_variable()) {
                    consistent = t.id == value;
                    continue;
                }
                auto &slot = partial[static_cast<std::size_t>(t.id)];
                if (slot != unbound) {
                    consistent = slot == value;
                } else {
                    const auto &dom = m.parameter_domains[static_cast<std::size_t>(t.id)];
                    consistent = std::binary_search(dom.begin(), dom.end(), value);
                    slot = value;
                }
            }
            if (!consistent)
                continue;
            BindingEnumerator enumerate(m.precondition, m.parameter_domains, inertia, init);
            enumerate.run(partial, [&](const Binding &b) {
                ++instantiated;
                CandidateMethod c;
                c.method = static_cast<int>(mi);
                c.args = b;
                c.task = tid;
                ground_condition(m.precondition, b, inertia, c.pre_pos, c.pre_neg);
                if (intersects(c.pre_pos, c.pre_neg))
                    return;
                for (const auto &g : c.pre_pos)
                    if (!reach.reachable.contains(g))
                        return;
                for (const auto &g : c.pre_neg)
                    if (negative_contradicted(g, init, inertia))
                        return;
                for (const auto &ref : m.network.tasks)
                    c.subtasks.push_back(ground_task(ref, b));
                c.ordering = m.network.ordering;
                c.totally_ordered = m.network.totally_ordered;
                methods.push_back(std::move(c));
            });
        }
    }

    // Pruning fixpoint.
    std::vector<bool> task_alive(tasks.size(), true);
    for (std::size_t t = 0; t < tasks.size(); ++t)
        if (tasks[t].primitive)
            task_alive[t] = action_of_task.contains(static_cast<TaskId>(t));
    std::vector<bool> method_alive(methods.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t m = 0; m < methods.size(); ++m) {
            if (!method_alive[m])
                continue;
            for (TaskId st : methods[m].subtasks) {
                if (!task_alive[static_cast<std::size_t>(st)]) {
                    method_alive[m] = false;
                    changed = true;
                    break;
                }
            }
        }
        std::vector<bool> has_method(tasks.size(), false);
        for (std::size_t m = 0; m < methods.size(); ++m)
            if (method_alive[m])
                has_method[static_cast<std::size_t>(methods[m].task)] = true;
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            if (!tasks[t].primitive && task_alive[t] && !has_method[t]) {
                task_alive[t] = false;
                changed = true;
            }
        }
    }

    MethodGrounding out;
    out.tasks_encountered = tasks.size();
    out.methods_instantiated = instantiated;
    for (TaskId t : initial_tasks) {
        if (!task_alive[static_cast<std::size_t>(t)]) {
            std::ostringstream msg;
            const auto &sig = tasks[static_cast<std::size_t>(t)];
            msg << "initial task "
                << (sig.primitive ? model.symbols.primitive_tasks.name(sig.name)
                                  : model.symbols.compound_tasks.name(sig.name))
                << " has no relevant ground action or method";
            out.failure = msg.str();
            return out;
        }
    }

    // Keep only what is still reachable from the initial network.
    std::vector<std::vector<std::size_t>> methods_by_task(tasks.size());
    for (std::size_t m = 0; m < methods.size(); ++m)
        if (method_alive[m])
            methods_by_task[static_cast<std::size_t>(methods[m].task)].push_back(m);
    std::vector<bool> reached(tasks.size(), false);
    std::vector<bool> method_kept(methods.size(), false);
    std::deque<TaskId> frontier;
    for (TaskId t : initial_tasks) {
        if (!reached[static_cast<std::size_t>(t)]) {
            reached[static_cast<std::size_t>(t)] = true;
            frontier.push_back(t);
        }
    }
    while (!frontier.empty()) {
        const TaskId t = frontier.front();
        frontier.pop_front();
        for (std::size_t m : methods_by_task[static_cast<std::size_t>(t)]) {
            method_kept[m] = true;
            for (TaskId st : methods[m].subtasks) {
                if (!reached[static_cast<std::size_t>(st)]) {
                    reached[static_cast<std::size_t>(st)] = true;
                    frontier.push_back(st);
                }
            }
        }
    }

    // Renumber densely, preserving discovery order.
    std::vector<TaskId> new_id(tasks.size(), -1);
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        if (!reached[t])
            continue;
        new_id[t] = static_cast<TaskId>(out.tasks.size());
        out.tasks.push_back(tasks[t]);
    }
    std::vector<std::pair<std::size_t, TaskId>> kept_actions;  // (index in reach.actions, new task id)
    for (auto [t, a] : action_of_task)
        if (reached[static_cast<std::size_t>(t)])
            kept_actions.emplace_back(a, new_id[static_cast<std::size_t>(t)]);
    std::sort(kept_actions.begin(), kept_actions.end());
    for (auto [a, t] : kept_actions) {
        out.actions.push_back(reach.actions[a]);
        out.action_task.push_back(t);
    }
    for (std::size_t m = 0; m < methods.size(); ++m) {
        if (!method_kept[m])
            continue;
        CandidateMethod c = methods[m];
        c.task = new_id[static_cast<std::size_t>(c.task)];
        for (auto &st : c.subtasks)
            st = new_id[static_cast<std::size_t>(st)];
        out.methods.push_back(std::move(c));
    }
    for (TaskId t : initial_tasks)
        out.initial_tasks.push_back(new_id[static_cast<std::size_t>(t)]);
    return out;
}

namespace {

struct NormalizedNetwork {
    std::vector<TaskId> tasks;
    BoolMatrix ordering;
    bool totally_ordered = true;
};

/// Subtasks whose ordering closes to a strict total order are put in that
/// order; anything else keeps the declared pairs.
NormalizedNetwork normalize(std::vector<TaskId> tasks, const std::vector<std::pair<int, int>> &pairs,
                            bool declared_total) {
    if (declared_total)
        return {tasks, TaskNetwork::chain(tasks).before, true};
    BoolMatrix declared(tasks.size());
    for (auto [a, b] : pairs)
        declared.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    const BoolMatrix closed = warshall_closure(declared);
    const auto order = linear_order(closed);
    if (order.size() == tasks.size()) {
        std::vector<TaskId> reordered;
        for (auto i : order)
            reordered.push_back(tasks[i]);
        return {reordered, TaskNetwork::chain(reordered).before, true};
    }
    return {std::move(tasks), std::move(declared), false};
}

Bitset bits_of(const std::vector<GroundAtom> &atoms, const std::map<GroundAtom, FactId> &ids, std::size_t width) {
    Bitset b(width);
    for (const auto &g : atoms)
        b.set(static_cast<std::size_t>(ids.at(g)));
    return b;
}

}  // namespace

GroundProblem encode_bitsets(const IndexedModel &model, const ReachabilityResult &reach, MethodGrounding g) {
    GroundProblem p;
    p.symbols = model.symbols;
    if (g.failure) {
        p.grounding_failure = g.failure;
        p.s0 = State(0);
        return p;
    }

    std::set<GroundAtom> universe = reach.universe;
    for (const auto &m : g.methods)
        universe.insert(m.pre_neg.begin(), m.pre_neg.end());
    p.facts.assign(universe.begin(), universe.end());
    std::map<GroundAtom, FactId> fact_ids;
    for (std::size_t i = 0; i < p.facts.size(); ++i)
        fact_ids.emplace(p.facts[i], static_cast<FactId>(i));
    const std::size_t width = p.facts.size();

    p.s0 = State(width);
    for (const auto &atom : model.init)
        if (auto it = fact_ids.find(atom); it != fact_ids.end())
            p.s0.set(static_cast<std::size_t>(it->second));

    p.tasks = std::move(g.tasks);
    p.relevant_actions.assign(p.tasks.size(), {});
    p.relevant_methods.assign(p.tasks.size(), {});

    for (std::size_t i = 0; i < g.actions.size(); ++i) {
        const auto &c = g.actions[i];
        GroundAction a;
        a.id = static_cast<ActionId>(i);
        a.task = g.action_task[i];
        a.name = c.action;
        a.args = c.args;
        a.pre_pos = bits_of(c.pre_pos, fact_ids, width);
        a.pre_neg = bits_of(c.pre_neg, fact_ids, width);
        a.eff_add = bits_of(c.add, fact_ids, width);
        a.eff_del = Bitset(width);
        // Deleting an atom outside the universe is a no-op: it can never be true.
        for (const auto &atom : c.del)
            if (auto it = fact_ids.find(atom); it != fact_ids.end())
                a.eff_del.set(static_cast<std::size_t>(it->second));
        p.relevant_actions[static_cast<std::size_t>(a.task)].push_back(a.id);
        p.actions.push_back(std::move(a));
    }

    for (std::size_t i = 0; i < g.methods.size(); ++i) {
        auto &c = g.methods[i];
        GroundMethod m;
        m.id = static_cast<MethodId>(i);
        m.task = c.task;
        m.name = model.methods[static_cast<std::size_t>(c.method)].name;
        m.args = c.args;
        m.pre_pos = bits_of(c.pre_pos, fact_ids, width);
        m.pre_neg = bits_of(c.pre_neg, fact_ids, width);
        auto normalized = normalize(std::move(c.subtasks), c.ordering, c.totally_ordered);
        m.subtasks = std::move(normalized.tasks);
        m.ordering = std::move(normalized.ordering);
        m.totally_ordered = normalized.totally_ordered;
        p.relevant_methods[static_cast<std::size_t>(m.task)].push_back(m.id);
        p.methods.push_back(std::move(m));
    }

    auto initial = normalize(g.initial_tasks, model.initial_network.ordering, model.initial_network.totally_ordered);
    p.initial_network_totally_ordered = initial.totally_ordered;
    p.initial_network.tasks = std::move(initial.tasks);
    p.initial_network.before = warshall_closure(std::move(initial.ordering));
    if (p.initial_network.before.has_reflexive())
        p.grounding_failure = "the initial task network ordering is cyclic";
    return p;
}

GroundProblem ground(const IndexedModel &encoded, GroundingStats *stats) {
    const auto inertia = lifted::classify_inertia(encoded);
    const IndexedModel model = lifted::simplify(lifted::infer_parameter_domains(encoded, inertia), inertia);

    GroundingStats local;
    GroundingStats &s = stats ? *stats : local;
    const auto &st = encoded.symbols;
    for (const auto &types : encoded.predicate_types)
        s.naive_facts = saturating_add(s.naive_facts, saturating_product(types, st));
    for (const auto &a : encoded.actions)
        s.naive_actions = saturating_add(s.naive_actions, saturating_product(a.parameter_types, st));
    for (const auto &m : encoded.methods)
        s.naive_methods = saturating_add(s.naive_methods, saturating_product(m.parameter_types, st));

    auto candidates = instantiate_actions(model, inertia, &s.warnings);
    s.candidate_actions = candidates.size();
    auto reach = reachability_filter(std::move(candidates), model.init, inertia);
    s.reachable_actions = reach.actions.size();
    s.reachable_facts = reach.reachable.size();
    auto methods = instantiate_methods(model, inertia, reach);
    s.tasks_encountered = methods.tasks_encountered;
    s.methods_instantiated = methods.methods_instantiated;
    GroundProblem p = encode_bitsets(model, reach, std::move(methods));
    s.actions = p.actions.size();
    s.methods = p.methods.size();
    s.tasks = p.tasks.size();
    s.facts = p.facts.size();
    return p;
}

namespace {

void write_bits(std::ostream &out, const Bitset &b) {
    out << '{';
    bool first = true;
    b.for_each([&](std::size_t i) {
        out << (first ? "" : ",") << i;
        first = false;
    });
    out << '}';
}

}  // namespace

std::string dump_ground(const GroundProblem &p) {
    std::ostringstream out;
    if (p.grounding_failure)
        out << "grounding failure: " << *p.grounding_failure << '\n';
    out << "facts " << p.facts.size() << '\n';
    for (std::size_t f = 0; f < p.facts.size(); ++f)
        out << "  " << f << ' ' << fact_name(p, static_cast<FactId>(f)) << (p.s0.size() > f && p.s0.test(f) ? " *" : "")
            << '\n';
    out << "tasks " << p.tasks.size() << '\n';
    for (std::size_t t = 0; t < p.tasks.size(); ++t)
        out << "  " << t << ' ' << (p.tasks[t].primitive ? "primitive " : "compound ")
            << task_name(p, static_cast<TaskId>(t)) << '\n';
    out << "actions " << p.actions.size() << '\n';
    for (const auto &a : p.actions) {
        out << "  " << a.id << ' ' << action_name(p, a.id) << " task " << a.task << " pre+ ";
        write_bits(out, a.pre_pos);
        out << " pre- ";
        write_bits(out, a.pre_neg);
        out << " add ";
        write_bits(out, a.eff_add);
        out << " del ";
        write_bits(out, a.eff_del);
        out << '\n';
    }
    out << "methods " << p.methods.size() << '\n';
    for (const auto &m : p.methods) {
        out << "  " << m.id << ' ' << p.symbols.methods.name(m.name) << " task " << m.task << " pre+ ";
        write_bits(out, m.pre_pos);
        out << " pre- ";
        write_bits(out, m.pre_neg);
        out << " subtasks [";
        for (std::size_t i = 0; i < m.subtasks.size(); ++i)
            out << (i ? " " : "") << m.subtasks[i];
        out << "] order ";
        if (m.totally_ordered) {
            out << "total";
        } else {
            out << '{';
            bool first = true;
            for (std::size_t i = 0; i < m.subtasks.size(); ++i)
                for (std::size_t j = 0; j < m.subtasks.size(); ++j)
                    if (m.ordering.get(i, j)) {
                        out << (first ? "" : " ") << i << '<' << j;
                        first = false;
                    }
            out << '}';
        }
        out << '\n';
    }
    out << "initial network [";
    for (std::size_t i = 0; i < p.initial_network.tasks.size(); ++i)
        out << (i ? " " : "") << p.initial_network.tasks[i];
    out << "] " << (p.initial_network_totally_ordered ? "total" : "partial") << '\n';
    return out.str();
}

std::string format_stats(const GroundingStats &s) {
    std::ostringstream out;
    out << "facts: naive " << s.naive_facts << ", reachable " << s.reachable_facts << ", universe " << s.facts
        << '\n'
        << "actions: naive " << s.naive_actions << ", after inertia " << s.candidate_actions
        << ", after reachability " << s.reachable_actions << ", after task pruning " << s.actions << '\n'
        << "methods: naive " << s.naive_methods << ", instantiated " << s.methods_instantiated
        << ", after task pruning " << s.methods << '\n'
        << "tasks: encountered " << s.tasks_encountered << ", after task pruning " << s.tasks << '\n';
    for (const auto &w : s.warnings)
        out << "warning: " << w << '\n';
    return out.str();
}

}  // namespace htn::grounding
