#include "htn/lifted/indexed_model.h"

#include "htn/lifted/symbol_table.h"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>

namespace htn::lifted {

int NameTable::intern(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end())
        return it->second;
    const int id = static_cast<int>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

int NameTable::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    return it == ids_.end() ? -1 : it->second;
}

namespace {

class Encoder {
public:
    Encoder(const hddl::LiftedDomainAst &d, const hddl::LiftedProblemAst &p) : d_(d), p_(p) {}

    IndexedModel run() {
        encode_types();
        encode_objects();
        compute_members();
        for (const auto &pred : d_.predicates) {
            m_.symbols.predicates.intern(pred.name);
            m_.predicate_types.push_back(types_of(pred.parameters));
        }
        for (const auto &a : d_.actions)
            m_.symbols.primitive_tasks.intern(a.name);
        for (const auto &t : d_.compound_tasks) {
            m_.symbols.compound_tasks.intern(t.name);
            m_.compound_task_types.push_back(types_of(t.parameters));
        }
        for (const auto &meth : d_.methods)
            m_.symbols.methods.intern(meth.name);

        for (const auto &a : d_.actions)
            m_.actions.push_back(encode_action(a));
        for (const auto &meth : d_.methods)
            m_.methods.push_back(encode_method(meth));

        for (const auto &atom : p_.init) {
            GroundAtom g{m_.symbols.predicates.find(atom.name), {}};
            for (const auto &t : atom.args)
                g.args.push_back(m_.symbols.objects.find(t.text));
            m_.init.push_back(std::move(g));
        }
        std::sort(m_.init.begin(), m_.init.end());
        m_.init.erase(std::unique(m_.init.begin(), m_.init.end()), m_.init.end());

        m_.initial_network = encode_network(p_.initial_network, {});
        return std::move(m_);
    }

private:
    void encode_types() {
        auto &st = m_.symbols;
        st.types.intern(hddl::root_type);
        for (const auto &t : d_.types)
            st.types.intern(t.name);
        st.type_parent.assign(static_cast<std::size_t>(st.types.size()), -1);
        for (const auto &t : d_.types)
            st.type_parent[static_cast<std::size_t>(st.types.find(t.name))] = st.types.find(t.type);
    }

    void encode_objects() {
        auto &st = m_.symbols;
        for (const auto &c : d_.constants) {
            st.objects.intern(c.name);
            st.object_type.push_back(st.types.find(c.type));
        }
        for (const auto &o : p_.objects) {
            st.objects.intern(o.name);
            st.object_type.push_back(st.types.find(o.type));
        }
    }

    void compute_members() {
        auto &st = m_.symbols;
        const auto n = static_cast<std::size_t>(st.types.size());
        st.subtypes.assign(n, {});
        st.members.assign(n, {});
        for (std::size_t t = 0; t < n; ++t) {
            for (TypeId cur = static_cast<TypeId>(t); cur != -1; cur = st.type_parent[static_cast<std::size_t>(cur)])
                st.subtypes[static_cast<std::size_t>(cur)].push_back(static_cast<TypeId>(t));
        }
        for (ObjectId o = 0; o < st.objects.size(); ++o) {
            for (TypeId cur = st.object_type[static_cast<std::size_t>(o)]; cur != -1;
                 cur = st.type_parent[static_cast<std::size_t>(cur)])
                st.members[static_cast<std::size_t>(cur)].push_back(o);
        }
        for (auto &s : st.subtypes)
            std::sort(s.begin(), s.end());
    }

    std::vector<TypeId> types_of(const std::vector<hddl::TypedName> &params) const {
        std::vector<TypeId> out;
        for (const auto &p : params)
            out.push_back(m_.symbols.types.find(p.type));
        return out;
    }

    std::vector<std::vector<ObjectId>> domains_of(const std::vector<TypeId> &types) const {
        std::vector<std::vector<ObjectId>> out;
        for (TypeId t : types)
            out.push_back(m_.symbols.members[static_cast<std::size_t>(t)]);
        return out;
    }

    using Scope = std::unordered_map<std::string, int>;

    static Scope scope_of(const std::vector<hddl::TypedName> &params) {
        Scope s;
        for (std::size_t i = 0; i < params.size(); ++i)
            s.emplace(params[i].name, static_cast<int>(i));
        return s;
    }

    Term term(const hddl::TermAst &t, const Scope &scope) const {
        if (t.is_variable())
            return Term::variable(scope.at(t.text));
        return Term::constant(m_.symbols.objects.find(t.text));
    }

    std::vector<Term> terms(const std::vector<hddl::TermAst> &args, const Scope &scope) const {
        std::vector<Term> out;
        for (const auto &t : args)
            out.push_back(term(t, scope));
        return out;
    }

    LiftedAtom atom(const hddl::AtomAst &a, const Scope &scope) const {
        return {m_.symbols.predicates.find(a.name), terms(a.args, scope)};
    }

    Condition condition(const std::vector<hddl::LiteralAst> &lits, const Scope &scope) const {
        Condition c;
        for (const auto &l : lits) {
            if (l.atom.name == "=")
                c.equalities.push_back({term(l.atom.args[0], scope), term(l.atom.args[1], scope), l.positive});
            else
                c.literals.push_back({atom(l.atom, scope), l.positive});
        }
        return c;
    }

    TaskRef task_ref(const hddl::AtomAst &a, const Scope &scope) const {
        const int prim = m_.symbols.primitive_tasks.find(a.name);
        if (prim >= 0)
            return {true, prim, terms(a.args, scope)};
        return {false, m_.symbols.compound_tasks.find(a.name), terms(a.args, scope)};
    }

    LiftedNetwork encode_network(const hddl::TaskNetworkAst &n, const Scope &scope) const {
        LiftedNetwork out;
        out.totally_ordered = n.totally_ordered;
        std::unordered_map<std::string, int> position;
        for (std::size_t i = 0; i < n.subtasks.size(); ++i) {
            position.emplace(n.subtasks[i].label, static_cast<int>(i));
            out.tasks.push_back(task_ref(n.subtasks[i].task, scope));
        }
        for (const auto &o : n.ordering)
            out.ordering.emplace_back(position.at(o.before), position.at(o.after));
        return out;
    }

    LiftedAction encode_action(const hddl::LiftedActionAst &a) const {
        LiftedAction out;
        const Scope scope = scope_of(a.parameters);
        out.name = m_.symbols.primitive_tasks.find(a.name);
        out.parameter_types = types_of(a.parameters);
        out.parameter_domains = domains_of(out.parameter_types);
        out.precondition = condition(a.precondition, scope);
        for (const auto &l : a.effect)
            (l.positive ? out.add : out.del).push_back(atom(l.atom, scope));
        return out;
    }

    LiftedMethod encode_method(const hddl::LiftedMethodAst &meth) const {
        LiftedMethod out;
        const Scope scope = scope_of(meth.parameters);
        out.name = m_.symbols.methods.find(meth.name);
        out.parameter_types = types_of(meth.parameters);
        out.parameter_domains = domains_of(out.parameter_types);
        out.task = m_.symbols.compound_tasks.find(meth.task.name);
        out.task_args = terms(meth.task.args, scope);
        out.precondition = condition(meth.precondition, scope);
        out.network = encode_network(meth.network, scope);
        return out;
    }

    const hddl::LiftedDomainAst &d_;
    const hddl::LiftedProblemAst &p_;
    IndexedModel m_;
};

// ---------------------------------------------------------------------------

void write_term(std::ostream &out, const Term &t) {
    if (t.is_variable())
        out << "?" << t.id;
    else
        out << "#" << t.id;
}

void write_terms(std::ostream &out, const std::vector<Term> &ts) {
    out << '(';
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i)
            out << ' ';
        write_term(out, ts[i]);
    }
    out << ')';
}

void write_atom(std::ostream &out, const LiftedAtom &a) {
    out << 'p' << a.predicate;
    write_terms(out, a.args);
}

void write_condition(std::ostream &out, const Condition &c) {
    out << '[';
    bool first = true;
    for (const auto &l : c.literals) {
        out << (first ? "" : " ") << (l.positive ? '+' : '-');
        write_atom(out, l.atom);
        first = false;
    }
    for (const auto &e : c.equalities) {
        out << (first ? "" : " ") << (e.positive ? "=" : "!=") << '(';
        write_term(out, e.lhs);
        out << ' ';
        write_term(out, e.rhs);
        out << ')';
        first = false;
    }
    out << ']';
}

void write_domains(std::ostream &out, const std::vector<TypeId> &types,
                   const std::vector<std::vector<ObjectId>> &domains) {
    for (std::size_t i = 0; i < types.size(); ++i) {
        out << " ?" << i << ":t" << types[i] << "{";
        for (std::size_t k = 0; k < domains[i].size(); ++k)
            out << (k ? "," : "") << domains[i][k];
        out << '}';
    }
}

void write_network(std::ostream &out, const LiftedNetwork &n) {
    out << '[';
    for (std::size_t i = 0; i < n.tasks.size(); ++i) {
        out << (i ? " " : "") << (n.tasks[i].primitive ? 'a' : 'c') << n.tasks[i].task;
        write_terms(out, n.tasks[i].args);
    }
    out << "] order ";
    if (n.totally_ordered) {
        out << "total";
    } else {
        out << '{';
        for (std::size_t i = 0; i < n.ordering.size(); ++i)
            out << (i ? " " : "") << n.ordering[i].first << '<' << n.ordering[i].second;
        out << '}';
    }
}

void write_table(std::ostream &out, const char *title, const NameTable &table) {
    out << title << ' ' << table.size() << '\n';
    for (int i = 0; i < table.size(); ++i)
        out << "  " << i << ' ' << table.name(i) << '\n';
}

}  // namespace

IndexedModel encode_integers(const hddl::LiftedDomainAst &domain, const hddl::LiftedProblemAst &problem) {
    return Encoder(domain, problem).run();
}

std::string dump_lifted(const IndexedModel &m) {
    std::ostringstream out;
    const auto &st = m.symbols;
    out << "types " << st.types.size() << '\n';
    for (int t = 0; t < st.types.size(); ++t)
        out << "  " << t << ' ' << st.types.name(t) << " parent " << st.type_parent[static_cast<std::size_t>(t)]
            << '\n';
    out << "objects " << st.objects.size() << '\n';
    for (int o = 0; o < st.objects.size(); ++o)
        out << "  " << o << ' ' << st.objects.name(o) << " type " << st.object_type[static_cast<std::size_t>(o)]
            << '\n';
    write_table(out, "predicates", st.predicates);
    write_table(out, "primitive-tasks", st.primitive_tasks);
    write_table(out, "compound-tasks", st.compound_tasks);
    write_table(out, "methods", st.methods);

    out << "actions\n";
    for (const auto &a : m.actions) {
        out << "  a" << a.name << (a.instantiable ? "" : " UNINSTANTIABLE") << " params";
        write_domains(out, a.parameter_types, a.parameter_domains);
        out << "\n    pre ";
        write_condition(out, a.precondition);
        out << "\n    add [";
        for (std::size_t i = 0; i < a.add.size(); ++i) {
            out << (i ? " " : "");
            write_atom(out, a.add[i]);
        }
        out << "] del [";
        for (std::size_t i = 0; i < a.del.size(); ++i) {
            out << (i ? " " : "");
            write_atom(out, a.del[i]);
        }
        out << "]\n";
    }
    out << "methods\n";
    for (const auto &meth : m.methods) {
        out << "  m" << meth.name << (meth.instantiable ? "" : " UNINSTANTIABLE") << " task c" << meth.task;
        write_terms(out, meth.task_args);
        out << " params";
        write_domains(out, meth.parameter_types, meth.parameter_domains);
        out << "\n    pre ";
        write_condition(out, meth.precondition);
        out << "\n    subtasks ";
        write_network(out, meth.network);
        out << '\n';
    }
    out << "init [";
    for (std::size_t i = 0; i < m.init.size(); ++i) {
        out << (i ? " " : "") << 'p' << m.init[i].predicate << '(';
        for (std::size_t k = 0; k < m.init[i].args.size(); ++k)
            out << (k ? " " : "") << '#' << m.init[i].args[k];
        out << ')';
    }
    out << "]\nnetwork ";
    write_network(out, m.initial_network);
    out << '\n';
    return out.str();
}

}  // namespace htn::lifted
