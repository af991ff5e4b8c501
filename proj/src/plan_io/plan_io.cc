#include "htn/plan_io/plan_io.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace htn::plan_io {

PlanFormatError::PlanFormatError(std::size_t line, const std::string &message)
    : std::runtime_error("plan line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> object_names(const GroundProblem &p, const std::vector<lifted::ObjectId> &args) {
    std::vector<std::string> out;
    for (auto o : args)
        out.push_back(p.symbols.objects.name(o));
    return out;
}

}  // namespace

PlanDocument to_document(const GroundProblem &problem, const Plan &plan) {
    std::map<int, int> output_id;
    for (std::size_t k = 0; k < plan.action_instances.size(); ++k)
        output_id[plan.action_instances[k]] = static_cast<int>(k);
    const int first_compound = static_cast<int>(plan.actions.size());
    for (std::size_t d = 0; d < plan.decompositions.size(); ++d)
        output_id[plan.decompositions[d].instance] = first_compound + static_cast<int>(d);

    PlanDocument doc;
    for (std::size_t k = 0; k < plan.actions.size(); ++k) {
        const auto &a = problem.actions[static_cast<std::size_t>(plan.actions[k])];
        doc.actions.push_back(
            {static_cast<int>(k), problem.symbols.primitive_tasks.name(a.name), object_names(problem, a.args)});
    }
    for (int r : plan.root_instances)
        doc.root.push_back(output_id.at(r));
    for (std::size_t d = 0; d < plan.decompositions.size(); ++d) {
        const auto &dec = plan.decompositions[d];
        const auto &sig = problem.tasks[static_cast<std::size_t>(dec.task)];
        const auto &m = problem.methods[static_cast<std::size_t>(dec.method)];
        PlanDocument::MethodLine line{first_compound + static_cast<int>(d), problem.symbols.compound_tasks.name(sig.name),
                                      object_names(problem, sig.args), problem.symbols.methods.name(m.name), {}};
        for (int c : dec.children)
            line.children.push_back(output_id.at(c));
        doc.methods.push_back(std::move(line));
    }
    return doc;
}

std::string format(const PlanDocument &doc) {
    std::ostringstream out;
    out << "==>\n";
    for (const auto &a : doc.actions) {
        out << a.id << ' ' << a.name;
        for (const auto &arg : a.args)
            out << ' ' << arg;
        out << '\n';
    }
    out << "root";
    for (int r : doc.root)
        out << ' ' << r;
    out << '\n';
    for (const auto &m : doc.methods) {
        out << m.id << ' ' << m.task;
        for (const auto &arg : m.args)
            out << ' ' << arg;
        out << " -> " << m.method;
        for (int c : m.children)
            out << ' ' << c;
        out << '\n';
    }
    out << "<==\n";
    return out.str();
}

std::string write_plan(const GroundProblem &problem, const Plan &plan) {
    return format(to_document(problem, plan));
}

namespace {

std::vector<std::string> words(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

int to_int(const std::string &text, std::size_t line) {
    int value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || value < 0)
        throw PlanFormatError(line, "expected a non-negative integer, found '" + text + "'");
    return value;
}

}  // namespace

PlanDocument parse_plan(std::string_view text) {
    enum class Section { Before, Actions, Methods, After } section = Section::Before;
    PlanDocument doc;
    std::istringstream in{std::string(text)};
    std::size_t lineno = 0;
    std::set<int> ids;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto w = words(line);
        if (w.empty() || w[0].starts_with(";"))
            continue;
        switch (section) {
        case Section::Before:
            if (w.size() != 1 || w[0] != "==>")
                throw PlanFormatError(lineno, "expected '==>'");
            section = Section::Actions;
            break;
        case Section::Actions:
            if (w[0] == "root") {
                for (std::size_t k = 1; k < w.size(); ++k)
                    doc.root.push_back(to_int(w[k], lineno));
                section = Section::Methods;
                break;
            }
            if (w.size() < 2)
                throw PlanFormatError(lineno, "action line needs an id and a name");
            doc.actions.push_back({to_int(w[0], lineno), w[1], {w.begin() + 2, w.end()}});
            if (!ids.insert(doc.actions.back().id).second)
                throw PlanFormatError(lineno, "duplicate id " + w[0]);
            break;
        case Section::Methods: {
            if (w.size() == 1 && w[0] == "<==") {
                section = Section::After;
                break;
            }
            const auto arrow = std::find(w.begin(), w.end(), "->");
            if (arrow == w.end() || arrow - w.begin() < 2 || arrow + 1 == w.end())
                throw PlanFormatError(lineno, "method line must read 'id task args -> method children'");
            PlanDocument::MethodLine m{to_int(w[0], lineno), w[1], {w.begin() + 2, arrow}, *(arrow + 1), {}};
            for (auto it = arrow + 2; it != w.end(); ++it)
                m.children.push_back(to_int(*it, lineno));
            if (!ids.insert(m.id).second)
                throw PlanFormatError(lineno, "duplicate id " + w[0]);
            doc.methods.push_back(std::move(m));
            break;
        }
        case Section::After:
            throw PlanFormatError(lineno, "text after '<=='");
        }
    }
    if (section != Section::After)
        throw PlanFormatError(lineno, "missing '<=='");
    for (std::size_t k = 0; k < doc.actions.size(); ++k)
        if (doc.actions[k].id != static_cast<int>(k))
            throw PlanFormatError(0, "action ids must be 0..n-1 in order");
    auto check_ref = [&](int id) {
        if (!ids.contains(id))
            throw PlanFormatError(0, "reference to undeclared id " + std::to_string(id));
    };
    for (int r : doc.root)
        check_ref(r);
    for (const auto &m : doc.methods)
        for (int c : m.children)
            check_ref(c);
    return doc;
}

const char *to_string(Validation::Kind kind) {
    switch (kind) {
    case Validation::Kind::Valid:
        return "valid";
    case Validation::Kind::Executability:
        return "executability";
    case Validation::Kind::Decomposition:
        return "decomposition";
    case Validation::Kind::Ordering:
        return "ordering";
    case Validation::Kind::Incomplete:
        return "incomplete";
    }
    return "?";
}

namespace {

/// Open task instances with a transitively closed before-relation, kept as
/// explicit sets.
class Replay {
public:
    Replay(const GroundProblem &p) : p_(p) {
        p.s0.for_each([&](std::size_t f) { state_.insert(static_cast<FactId>(f)); });
        const auto &net = p.initial_network;
        for (std::size_t i = 0; i < net.size(); ++i) {
            open_[static_cast<int>(i)] = net.tasks[i];
            used_.insert(static_cast<int>(i));
        }
        for (std::size_t i = 0; i < net.size(); ++i)
            for (std::size_t j = 0; j < net.size(); ++j)
                if (net.before.get(i, j))
                    before_.insert({static_cast<int>(i), static_cast<int>(j)});
        close();
    }

    std::optional<std::string> check_roots(const Plan &plan) const {
        std::vector<int> expected;
        for (std::size_t i = 0; i < p_.initial_network.size(); ++i)
            expected.push_back(static_cast<int>(i));
        if (plan.root_instances != expected)
            return "root instances do not match the initial network";
        return std::nullopt;
    }

    std::optional<Validation> decompose(const Decomposition &d, std::size_t position) {
        auto fail = [&](Validation::Kind kind, std::string why) {
            return Validation{kind, position, "decomposition " + std::to_string(position) + ": " + why};
        };
        auto it = open_.find(d.instance);
        if (it == open_.end())
            return fail(Validation::Kind::Decomposition, "instance " + std::to_string(d.instance) + " is not open");
        if (d.method < 0 || static_cast<std::size_t>(d.method) >= p_.methods.size())
            return fail(Validation::Kind::Decomposition, "unknown method");
        const auto &m = p_.methods[static_cast<std::size_t>(d.method)];
        if (p_.tasks[static_cast<std::size_t>(it->second)].primitive)
            return fail(Validation::Kind::Decomposition, "instance is primitive");
        if (it->second != d.task || m.task != d.task)
            return fail(Validation::Kind::Decomposition, "method does not accomplish the instance's task");
        if (!is_free(d.instance))
            return fail(Validation::Kind::Ordering, "instance has an open predecessor");
        if (!holds(m.pre_pos, m.pre_neg))
            return fail(Validation::Kind::Decomposition, "method precondition does not hold");
        if (d.children.size() != m.subtasks.size())
            return fail(Validation::Kind::Decomposition, "child count differs from the method's subtasks");
        for (int c : d.children)
            if (!used_.insert(c).second)
                return fail(Validation::Kind::Decomposition, "child instance id " + std::to_string(c) + " reused");

        std::set<std::pair<int, int>> next;
        for (auto [a, b] : before_) {
            if (a == d.instance) {
                for (int c : d.children)
                    next.insert({c, b});
            } else if (b == d.instance) {
                for (int c : d.children)
                    next.insert({a, c});
            } else {
                next.insert({a, b});
            }
        }
        for (std::size_t s = 0; s < m.subtasks.size(); ++s)
            for (std::size_t t = 0; t < m.subtasks.size(); ++t)
                if (m.ordering.get(s, t))
                    next.insert({d.children[s], d.children[t]});
        before_ = std::move(next);
        open_.erase(it);
        for (std::size_t s = 0; s < m.subtasks.size(); ++s)
            open_[d.children[s]] = m.subtasks[s];
        close();
        for (auto [a, b] : before_)
            if (a == b)
                return fail(Validation::Kind::Ordering, "ordering becomes cyclic");
        return std::nullopt;
    }

    std::optional<Validation> execute(ActionId action, int instance, std::size_t position) {
        auto fail = [&](Validation::Kind kind, std::string why) {
            return Validation{kind, position, "action " + std::to_string(position) + ": " + why};
        };
        if (action < 0 || static_cast<std::size_t>(action) >= p_.actions.size())
            return fail(Validation::Kind::Decomposition, "unknown action");
        const auto &a = p_.actions[static_cast<std::size_t>(action)];
        auto it = open_.find(instance);
        if (it == open_.end())
            return fail(Validation::Kind::Decomposition, "not derived from an open task instance");
        if (it->second != a.task)
            return fail(Validation::Kind::Decomposition, "action does not accomplish the instance's task");
        if (!is_free(instance))
            return fail(Validation::Kind::Ordering, "an ordering constraint is violated");
        if (!holds(a.pre_pos, a.pre_neg))
            return fail(Validation::Kind::Executability, "precondition does not hold");
        a.eff_del.for_each([&](std::size_t f) { state_.erase(static_cast<FactId>(f)); });
        a.eff_add.for_each([&](std::size_t f) { state_.insert(static_cast<FactId>(f)); });
        open_.erase(it);
        std::erase_if(before_, [&](const auto &pair) { return pair.first == instance || pair.second == instance; });
        return std::nullopt;
    }

    bool finished() const { return open_.empty(); }

private:
    bool is_free(int instance) const {
        return std::none_of(before_.begin(), before_.end(), [&](const auto &pair) { return pair.second == instance; });
    }

    bool holds(const Bitset &pos, const Bitset &neg) const {
        bool ok = true;
        pos.for_each([&](std::size_t f) { ok = ok && state_.contains(static_cast<FactId>(f)); });
        neg.for_each([&](std::size_t f) { ok = ok && !state_.contains(static_cast<FactId>(f)); });
        return ok;
    }

    void close() {
        for (bool changed = true; changed;) {
            changed = false;
            std::vector<std::pair<int, int>> add;
            for (auto [a, b] : before_)
                for (auto it = before_.lower_bound({b, std::numeric_limits<int>::min()});
                     it != before_.end() && it->first == b; ++it)
                    if (!before_.contains({a, it->second}))
                        add.push_back({a, it->second});
            for (const auto &pair : add)
                changed = before_.insert(pair).second || changed;
        }
    }

    const GroundProblem &p_;
    std::set<FactId> state_;
    std::map<int, TaskId> open_;
    std::set<int> used_;
    std::set<std::pair<int, int>> before_;
};

}  // namespace

Validation validate_plan(const GroundProblem &problem, const Plan &plan) {
    if (problem.grounding_failure)
        return {Validation::Kind::Decomposition, 0, "the problem has no ground solution"};
    if (plan.action_instances.size() != plan.actions.size())
        return {Validation::Kind::Decomposition, 0, "every action needs a task instance"};
    // Executability first, on the action sequence alone.
    std::set<FactId> state;
    problem.s0.for_each([&](std::size_t f) { state.insert(static_cast<FactId>(f)); });
    for (std::size_t k = 0; k < plan.actions.size(); ++k) {
        const ActionId id = plan.actions[k];
        if (id < 0 || static_cast<std::size_t>(id) >= problem.actions.size())
            return {Validation::Kind::Executability, k, "action " + std::to_string(k) + ": unknown action"};
        const auto &a = problem.actions[static_cast<std::size_t>(id)];
        bool ok = true;
        a.pre_pos.for_each([&](std::size_t f) { ok = ok && state.contains(static_cast<FactId>(f)); });
        a.pre_neg.for_each([&](std::size_t f) { ok = ok && !state.contains(static_cast<FactId>(f)); });
        if (!ok)
            return {Validation::Kind::Executability, k, "action " + std::to_string(k) + ": precondition does not hold"};
        a.eff_del.for_each([&](std::size_t f) { state.erase(static_cast<FactId>(f)); });
        a.eff_add.for_each([&](std::size_t f) { state.insert(static_cast<FactId>(f)); });
    }

    Replay replay(problem);
    if (auto why = replay.check_roots(plan))
        return {Validation::Kind::Decomposition, 0, *why};
    std::size_t next = 0;
    auto decompose_until = [&](std::size_t actions_done) -> std::optional<Validation> {
        for (; next < plan.decompositions.size() && plan.decompositions[next].before_action <= actions_done; ++next)
            if (auto failure = replay.decompose(plan.decompositions[next], next))
                return failure;
        return std::nullopt;
    };
    for (std::size_t k = 1; k < plan.decompositions.size(); ++k)
        if (plan.decompositions[k].before_action < plan.decompositions[k - 1].before_action)
            return {Validation::Kind::Decomposition, k, "decompositions out of order"};
    for (std::size_t k = 0; k < plan.actions.size(); ++k) {
        if (auto failure = decompose_until(k))
            return *failure;
        if (auto failure = replay.execute(plan.actions[k], plan.action_instances[k], k))
            return *failure;
    }
    if (auto failure = decompose_until(plan.actions.size()))
        return *failure;
    if (next != plan.decompositions.size())
        return {Validation::Kind::Decomposition, next, "decomposition scheduled after the last action"};
    if (!replay.finished())
        return {Validation::Kind::Incomplete, plan.actions.size(), "task instances remain unaccomplished"};
    return {};
}

}  // namespace htn::plan_io
