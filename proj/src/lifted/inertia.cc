#include "htn/lifted/inertia.h"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

namespace htn::lifted {

const char *to_string(Inertia inertia) {
    switch (inertia) {
    case Inertia::Positive: return "POSITIVE_INERTIA";
    case Inertia::Negative: return "NEGATIVE_INERTIA";
    case Inertia::Full: return "FULL_INERTIA";
    case Inertia::Fluent: return "FLUENT";
    }
    return "?";
}

InertiaClass classify_inertia(const IndexedModel &model) {
    const auto n = static_cast<std::size_t>(model.symbols.predicates.size());
    std::vector<bool> added(n, false), deleted(n, false);
    for (const auto &a : model.actions) {
        for (const auto &atom : a.add)
            added[static_cast<std::size_t>(atom.predicate)] = true;
        for (const auto &atom : a.del)
            deleted[static_cast<std::size_t>(atom.predicate)] = true;
    }
    InertiaClass out(n);
    for (std::size_t p = 0; p < n; ++p) {
        if (!added[p] && !deleted[p])
            out[p] = Inertia::Full;
        else if (!added[p])
            out[p] = Inertia::Positive;
        else if (!deleted[p])
            out[p] = Inertia::Negative;
        else
            out[p] = Inertia::Fluent;
    }
    return out;
}

namespace {

using Domains = std::vector<std::vector<ObjectId>>;

bool contains(const std::vector<ObjectId> &sorted, ObjectId o) {
    return std::binary_search(sorted.begin(), sorted.end(), o);
}

/// One narrowing pass for a single literal. Returns true if a domain shrank.
bool narrow(const LiftedAtom &atom, const std::vector<const GroundAtom *> &tuples, Domains &domains) {
    std::map<int, std::set<ObjectId>> supported;
    for (const auto &arg : atom.args)
        if (arg.is_variable())
            supported[arg.id];
    for (const GroundAtom *tuple : tuples) {
        std::map<int, ObjectId> binding;
        bool match = true;
        for (std::size_t k = 0; k < atom.args.size() && match; ++k) {
            const Term &t = atom.args[k];
            const ObjectId value = tuple->args[k];
            if (!t.is_variable()) {
                match = t.id == value;
            } else if (auto it = binding.find(t.id); it != binding.end()) {
                match = it->second == value;
            } else {
                match = contains(domains[static_cast<std::size_t>(t.id)], value);
                binding.emplace(t.id, value);
            }
        }
        if (!match)
            continue;
        for (auto [var, value] : binding)
            supported[var].insert(value);
    }
    bool changed = false;
    for (auto &[var, values] : supported) {
        auto &dom = domains[static_cast<std::size_t>(var)];
        std::vector<ObjectId> narrowed;
        std::set_intersection(dom.begin(), dom.end(), values.begin(), values.end(), std::back_inserter(narrowed));
        if (narrowed.size() != dom.size()) {
            dom = std::move(narrowed);
            changed = true;
        }
    }
    return changed;
}

void narrow_operator(const Condition &pre, Domains &domains, const InertiaClass &inertia,
                     const std::vector<std::vector<const GroundAtom *>> &init_by_predicate) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto &lit : pre.literals) {
            if (!lit.positive || inertia[static_cast<std::size_t>(lit.atom.predicate)] != Inertia::Full)
                continue;
            changed |= narrow(lit.atom, init_by_predicate[static_cast<std::size_t>(lit.atom.predicate)], domains);
        }
    }
}

}  // namespace

IndexedModel infer_parameter_domains(IndexedModel model, const InertiaClass &inertia) {
    std::vector<std::vector<const GroundAtom *>> by_predicate(static_cast<std::size_t>(model.symbols.predicates.size()));
    for (const auto &g : model.init)
        by_predicate[static_cast<std::size_t>(g.predicate)].push_back(&g);
    for (auto &a : model.actions)
        narrow_operator(a.precondition, a.parameter_domains, inertia, by_predicate);
    for (auto &m : model.methods)
        narrow_operator(m.precondition, m.parameter_domains, inertia, by_predicate);
    return model;
}

namespace {

enum class Fold { True, False, Unknown };

bool all_constant(const LiftedAtom &a) {
    return std::none_of(a.args.begin(), a.args.end(), [](const Term &t) { return t.is_variable(); });
}

Fold fold_literal(const LiftedLiteral &lit, const InertiaClass &inertia, const std::set<GroundAtom> &init) {
    if (inertia[static_cast<std::size_t>(lit.atom.predicate)] != Inertia::Full || !all_constant(lit.atom))
        return Fold::Unknown;
    GroundAtom g{lit.atom.predicate, {}};
    for (const auto &t : lit.atom.args)
        g.args.push_back(t.id);
    const bool holds = init.contains(g) == lit.positive;
    return holds ? Fold::True : Fold::False;
}

Fold fold_equality(const Equality &e) {
    const bool same_term = e.lhs == e.rhs;
    if (same_term)
        return e.positive ? Fold::True : Fold::False;
    if (!e.lhs.is_variable() && !e.rhs.is_variable())
        return e.positive ? Fold::False : Fold::True;
    return Fold::Unknown;
}

/// Returns false if the condition folded to false.
bool fold(Condition &c, const InertiaClass &inertia, const std::set<GroundAtom> &init) {
    bool satisfiable = true;
    std::erase_if(c.literals, [&](const LiftedLiteral &l) {
        const Fold f = fold_literal(l, inertia, init);
        if (f == Fold::False)
            satisfiable = false;
        return f == Fold::True;
    });
    std::erase_if(c.equalities, [&](const Equality &e) {
        const Fold f = fold_equality(e);
        if (f == Fold::False)
            satisfiable = false;
        return f == Fold::True;
    });
    return satisfiable;
}

bool any_empty(const Domains &d) {
    return std::any_of(d.begin(), d.end(), [](const auto &v) { return v.empty(); });
}

}  // namespace

IndexedModel simplify(IndexedModel model, const InertiaClass &inertia) {
    const std::set<GroundAtom> init(model.init.begin(), model.init.end());
    for (auto &a : model.actions) {
        if (!fold(a.precondition, inertia, init) || any_empty(a.parameter_domains))
            a.instantiable = false;
    }
    for (auto &m : model.methods) {
        if (!fold(m.precondition, inertia, init) || any_empty(m.parameter_domains))
            m.instantiable = false;
    }
    return model;
}

}  // namespace htn::lifted
