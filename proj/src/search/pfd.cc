#include "htn/search/pfd.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <tuple>

namespace htn::search {

std::optional<TaskNetwork> decompose_in_network(const TaskNetwork &network, std::size_t i, const GroundMethod &m,
                                                ClosureMode mode) {
    const std::size_t n = network.size();
    const std::size_t k = m.subtasks.size();
    const std::size_t kept = n - 1;

    TaskNetwork out;
    out.tasks = network.tasks;
    out.tasks.erase(out.tasks.begin() + static_cast<std::ptrdiff_t>(i));
    out.tasks.insert(out.tasks.end(), m.subtasks.begin(), m.subtasks.end());
    out.before = BoolMatrix(kept + k);

    auto old_index = [&](std::size_t a) { return a < i ? a : a + 1; };
    for (std::size_t a = 0; a < kept; ++a) {
        for (std::size_t b = 0; b < kept; ++b)
            if (network.before.get(old_index(a), old_index(b)))
                out.before.set(a, b);
        const bool before_removed = network.before.get(old_index(a), i);
        const bool after_removed = network.before.get(i, old_index(a));
        for (std::size_t s = 0; s < k; ++s) {
            if (before_removed)
                out.before.set(a, kept + s);
            if (after_removed)
                out.before.set(kept + s, a);
        }
    }

    if (mode == ClosureMode::Warshall) {
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = 0; t < k; ++t)
                if (m.ordering.get(s, t))
                    out.before.set(kept + s, kept + t);
        out.before = warshall_closure(std::move(out.before));
    } else {
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = 0; t < k; ++t)
                if (m.ordering.get(s, t))
                    add_edge_closed(out.before, kept + s, kept + t);
    }
    if (out.before.has_reflexive())
        return std::nullopt;
    return out;
}

TaskNetwork canonical_network(const TaskNetwork &network) {
    const std::size_t n = network.size();
    std::vector<std::size_t> in(n, 0), out(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (network.before.get(a, b)) {
                ++out[a];
                ++in[b];
            }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(network.tasks[a], in[a], out[a], a) < std::tie(network.tasks[b], in[b], out[b], b);
    });
    TaskNetwork canon;
    for (auto p : perm)
        canon.tasks.push_back(network.tasks[p]);
    canon.before = network.before.permuted(perm);
    return canon;
}

std::size_t PfdSearch::KeyHash::operator()(const Key &k) const {
    std::size_t h = k.state.hash();
    for (TaskId t : k.network.tasks)
        h = h * 1000003U ^ std::hash<int>{}(t);
    for (auto w : k.network.before.words())
        h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
    return h;
}

namespace {

std::size_t count_compound(const GroundProblem &p, const TaskNetwork &network) {
    return static_cast<std::size_t>(
        std::count_if(network.tasks.begin(), network.tasks.end(), [&](TaskId t) { return !p.is_primitive(t); }));
}

}  // namespace

PfdSearch::PfdSearch(const GroundProblem &problem, SearchOptions options) : problem_(problem), options_(options) {
    add_node(problem.s0, problem.initial_network, -1, {}, 0);
}

std::optional<PfdSearch::NodeId> PfdSearch::add_node(State state, TaskNetwork network, NodeId parent, Step step,
                                                      std::size_t actions) {
    if (options_.duplicate_detection && !seen_.insert({state, canonical_network(network)}).second) {
        ++stats_.duplicates;
        return std::nullopt;
    }
    const auto id = static_cast<NodeId>(nodes_.size());
    const NodeRank rank{count_compound(problem_, network), actions, next_seq_++};
    nodes_.push_back({std::move(state), std::move(network), parent, step, rank});
    ++stats_.generated;
    return id;
}

namespace {

std::vector<Step> path_to(const std::deque<PfdSearch::Node> &nodes, int id) {
    std::vector<Step> path;
    for (int n = id; nodes[static_cast<std::size_t>(n)].parent >= 0; n = nodes[static_cast<std::size_t>(n)].parent)
        path.push_back(nodes[static_cast<std::size_t>(n)].step);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::vector<ActionId> PfdSearch::plan_prefix(NodeId id) const {
    std::vector<ActionId> out;
    for (const auto &step : path_to(nodes_, id))
        if (!step.decomposition)
            out.push_back(step.id);
    return out;
}

std::vector<std::pair<TaskId, MethodId>> PfdSearch::decomposition_log(NodeId id) const {
    std::vector<std::pair<TaskId, MethodId>> out;
    for (const auto &step : path_to(nodes_, id))
        if (step.decomposition)
            out.emplace_back(problem_.methods[static_cast<std::size_t>(step.id)].task, step.id);
    return out;
}

Plan PfdSearch::extract_plan(NodeId id) const { return replay_steps(problem_, path_to(nodes_, id), false); }

std::vector<PfdSearch::NodeId> PfdSearch::expand_free_primitive(NodeId id, std::size_t i) {
    const TaskId task = node(id).network.tasks[i];
    std::vector<NodeId> out;
    for (ActionId a : problem_.relevant_actions[static_cast<std::size_t>(task)]) {
        const auto &action = problem_.actions[static_cast<std::size_t>(a)];
        if (!applicable(action, node(id).state))
            continue;
        if (auto child = add_node(apply(node(id).state, action), remove_task(node(id).network, i), id,
                                  {false, i, a}, node(id).rank.actions + 1))
            out.push_back(*child);
    }
    return out;
}

std::vector<PfdSearch::NodeId> PfdSearch::expand_free_compound(NodeId id, std::size_t i) {
    const TaskId task = node(id).network.tasks[i];
    std::vector<NodeId> out;
    for (MethodId m : problem_.relevant_methods[static_cast<std::size_t>(task)]) {
        const auto &method = problem_.methods[static_cast<std::size_t>(m)];
        if (!applicable(method, node(id).state))
            continue;
        auto network = decompose_in_network(node(id).network, i, method);
        if (!network) {
            ++stats_.cyclic;
            continue;
        }
        if (auto child = add_node(node(id).state, std::move(*network), id, {true, i, m}, node(id).rank.actions))
            out.push_back(*child);
    }
    return out;
}

std::vector<std::size_t> PfdSearch::branch_tasks(NodeId id) const {
    auto free = free_tasks(node(id).network);
    if (options_.pfd_first_free && free.size() > 1)
        free.resize(1);
    return free;
}

std::vector<PfdSearch::NodeId> PfdSearch::expand(NodeId id) {
    std::vector<NodeId> out;
    for (std::size_t i : branch_tasks(id)) {
        auto children = problem_.is_primitive(node(id).network.tasks[i]) ? expand_free_primitive(id, i)
                                                                          : expand_free_compound(id, i);
        out.insert(out.end(), children.begin(), children.end());
    }
    return out;
}

SearchResult PfdSearch::solve() {
    SearchResult result;
    if (problem_.grounding_failure) {
        result.status = Status::Unsolvable;
        return result;
    }
    const Budget budget(options_);
    using Entry = std::pair<NodeRank, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    frontier.emplace(node(root()).rank, root());
    while (!frontier.empty()) {
        const NodeId id = frontier.top().second;
        if (node(id).network.empty()) {
            result.status = Status::Solved;
            result.plan = extract_plan(id);
            break;
        }
        if (const Limit limit = budget.exhausted(stats_.expanded); limit != Limit::None) {
            result.status = Status::ResourceExhausted;
            result.limit = limit;
            break;
        }
        frontier.pop();
        const auto free = branch_tasks(id);
        const auto children = expand(id);
        ++stats_.expanded;
        if (options_.trace) {
            auto &trace = *options_.trace;
            trace << "expand " << id << " free [";
            for (std::size_t k = 0; k < free.size(); ++k)
                trace << (k ? " " : "") << task_name(problem_, node(id).network.tasks[free[k]]);
            trace << "] branches " << children.size() << '\n';
        }
        for (NodeId c : children)
            frontier.emplace(node(c).rank, c);
    }
    result.stats = stats_;
    return result;
}

SearchResult pfd_solve(const GroundProblem &problem, const SearchOptions &options) {
    PfdSearch search(problem, options);
    return search.solve();
}

}  // namespace htn::search
