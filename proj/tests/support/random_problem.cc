#include "random_problem.h"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

namespace htn::testing {

namespace {

const std::vector<std::string> objects{"a", "b"};

class Generator {
public:
    Generator(std::uint32_t seed, bool po) : rng_(seed), po_(po) {}

    GeneratedProblem run(std::uint32_t seed) {
        nullary_ = uniform(0, 2);
        unary_ = uniform(nullary_ == 0 ? 1 : 0, (6 - nullary_) / 2);
        const int actions = uniform(1, 3);
        const int compounds = uniform(1, 3);
        for (int i = 0; i < actions; ++i)
            action_arity_.push_back(uniform(0, 1));
        for (int i = 0; i < compounds; ++i)
            compound_arity_.push_back(uniform(0, 1));

        std::ostringstream d;
        d << "(define (domain rnd" << seed << ")\n"
          << "  (:requirements :typing :hierarchy :negative-preconditions :method-preconditions)\n"
          << "  (:types obj)\n  (:constants a b - obj)\n  (:predicates";
        for (int i = 0; i < nullary_; ++i)
            d << " (p" << i << ")";
        for (int i = 0; i < unary_; ++i)
            d << " (q" << i << " ?x - obj)";
        d << ")\n  (:tasks";
        for (int i = 0; i < compounds; ++i)
            d << " (c" << i << (compound_arity_[static_cast<std::size_t>(i)] ? " ?x - obj" : "") << ")";
        d << ")\n";

        // Every compound task gets a method first, the rest are spread at random.
        const int methods = uniform(compounds, 4);
        for (int m = 0; m < methods; ++m) {
            const int task = m < compounds ? m : uniform(0, compounds - 1);
            write_method(d, m, task);
        }
        for (int a = 0; a < actions; ++a)
            write_action(d, a);
        d << ")\n";

        std::ostringstream p;
        p << "(define (problem rnd" << seed << "-p)\n  (:domain rnd" << seed << ")\n"
          << "  (:htn\n    :parameters ()\n";
        std::vector<std::string> initial{task_call(false, 0, {"a", "b"})};
        if (chance(0.4))
            initial.push_back(random_subtask(-1, {"a", "b"}));
        write_network(p, initial, "    ");
        p << "  )\n  (:init";
        for (int i = 0; i < nullary_; ++i)
            if (chance(0.5))
                p << " (p" << i << ")";
        for (int i = 0; i < unary_; ++i)
            for (const auto &o : objects)
                if (chance(0.5))
                    p << " (q" << i << " " << o << ")";
        p << "))\n";
        return {"rnd" + std::to_string(seed) + (po_ ? "-po" : ""), d.str(), p.str()};
    }

private:
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    template <typename T>
    const T &pick(const std::vector<T> &v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

    /// Random atom over the given terms (variables or objects).
    std::string atom(const std::vector<std::string> &terms) {
        const int total = nullary_ + unary_;
        const int k = uniform(0, total - 1);
        if (k < nullary_)
            return "(p" + std::to_string(k) + ")";
        return "(q" + std::to_string(k - nullary_) + " " + pick(terms) + ")";
    }

    std::string literal(const std::vector<std::string> &terms) {
        const std::string a = atom(terms);
        return chance(0.35) ? "(not " + a + ")" : a;
    }

    std::string conjunction(const std::vector<std::string> &parts) {
        if (parts.empty())
            return "()";
        std::string out = "(and";
        for (const auto &p : parts)
            out += " " + p;
        return out + ")";
    }

    std::string task_call(bool primitive, int index, const std::vector<std::string> &terms) {
        const int arity = primitive ? action_arity_[static_cast<std::size_t>(index)]
                                    : compound_arity_[static_cast<std::size_t>(index)];
        std::string out = "(" + std::string(primitive ? "act" : "c") + std::to_string(index);
        if (arity)
            out += " " + pick(terms);
        return out + ")";
    }

    /// A primitive task, or a compound task deeper in the hierarchy than `level`.
    std::string random_subtask(int level, const std::vector<std::string> &terms) {
        const int deeper = static_cast<int>(compound_arity_.size()) - level - 1;
        if (deeper > 0 && chance(0.45))
            return task_call(false, uniform(level + 1, static_cast<int>(compound_arity_.size()) - 1), terms);
        return task_call(true, uniform(0, static_cast<int>(action_arity_.size()) - 1), terms);
    }

    void write_network(std::ostringstream &out, const std::vector<std::string> &tasks, const std::string &indent) {
        if (!po_) {
            out << indent << ":ordered-subtasks " << conjunction(tasks) << "\n";
            return;
        }
        std::vector<std::string> labeled;
        for (std::size_t i = 0; i < tasks.size(); ++i)
            labeled.push_back("(t" + std::to_string(i) + " " + tasks[i] + ")");
        out << indent << ":subtasks " << conjunction(labeled) << "\n";
        std::vector<std::string> pairs;
        for (std::size_t i = 0; i < tasks.size(); ++i)
            for (std::size_t j = i + 1; j < tasks.size(); ++j)
                if (chance(0.35))
                    pairs.push_back("(< t" + std::to_string(i) + " t" + std::to_string(j) + ")");
        if (tasks.size() >= 2 && chance(0.1))
            pairs.push_back("(< t1 t0)");
        if (!pairs.empty())
            out << indent << ":ordering " << conjunction(pairs) << "\n";
    }

    void write_method(std::ostringstream &out, int index, int task) {
        std::vector<std::string> params;
        std::vector<std::string> terms{"a", "b"};
        const bool task_param = compound_arity_[static_cast<std::size_t>(task)] != 0;
        if (task_param)
            params.push_back("?x");
        if (chance(0.3))
            params.push_back("?y");
        terms.insert(terms.end(), params.begin(), params.end());

        out << "  (:method m" << index << "\n    :parameters (";
        for (std::size_t i = 0; i < params.size(); ++i)
            out << (i ? " " : "") << params[i] << " - obj";
        out << ")\n    :task (c" << task << (task_param ? " ?x" : "") << ")\n";
        std::vector<std::string> pre;
        for (int k = uniform(0, 2); k > 0; --k)
            pre.push_back(literal(terms));
        if (!pre.empty())
            out << "    :precondition " << conjunction(pre) << "\n";
        std::vector<std::string> subtasks;
        for (int k = uniform(0, 3); k > 0; --k)
            subtasks.push_back(random_subtask(task, terms));
        write_network(out, subtasks, "    ");
        out << "  )\n";
    }

    void write_action(std::ostringstream &out, int index) {
        const bool param = action_arity_[static_cast<std::size_t>(index)] != 0;
        std::vector<std::string> terms{"a", "b"};
        if (param)
            terms.push_back("?x");
        out << "  (:action act" << index << "\n    :parameters (" << (param ? "?x - obj" : "") << ")\n";
        std::vector<std::string> pre;
        for (int k = uniform(0, 2); k > 0; --k)
            pre.push_back(literal(terms));
        if (!pre.empty())
            out << "    :precondition " << conjunction(pre) << "\n";
        std::vector<std::string> eff;
        std::vector<std::string> used;
        for (int k = uniform(1, 2); k > 0; --k) {
            const std::string a = atom(terms);
            if (std::find(used.begin(), used.end(), a) != used.end())
                continue;
            used.push_back(a);
            eff.push_back(chance(0.4) ? "(not " + a + ")" : a);
        }
        out << "    :effect " << conjunction(eff) << "\n  )\n";
    }

    std::mt19937 rng_;
    bool po_;
    int nullary_ = 0;
    int unary_ = 0;
    std::vector<int> action_arity_;
    std::vector<int> compound_arity_;
};

}  // namespace

GeneratedProblem random_problem(std::uint32_t seed, bool partial_order) {
    return Generator(seed, partial_order).run(seed);
}

}  // namespace htn::testing
