#include "htn/search/tfd.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace htn::search {

std::size_t TfdSearch::KeyHash::operator()(const Key &k) const {
    return k.state->hash() ^ (std::hash<int>{}(k.stack) * 0x9e3779b97f4a7c15ULL);
}

TfdSearch::TfdSearch(const GroundProblem &problem, SearchOptions options)
    : problem_(problem), options_(options) {
    if (auto why = total_order_violation(problem))
        throw std::invalid_argument("TFD needs a totally ordered problem: " + *why);
    int stack = -1;
    const auto &initial = problem.initial_network.tasks;
    for (auto it = initial.rbegin(); it != initial.rend(); ++it)
        stack = cons(*it, stack);
    add_node(problem.s0, stack, -1, {}, 0);
}

int TfdSearch::cons(TaskId task, int tail) {
    const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(task)) << 32) |
                              static_cast<std::uint32_t>(tail + 1);
    auto [it, inserted] = cell_ids_.emplace(key, static_cast<int>(cells_.size()));
    if (inserted)
        cells_.push_back({task, tail, compounds(tail) + (problem_.is_primitive(task) ? 0 : 1)});
    return it->second;
}

std::size_t TfdSearch::compounds(int stack) const {
    return stack < 0 ? 0 : cells_[static_cast<std::size_t>(stack)].compounds;
}

std::optional<TfdSearch::NodeId> TfdSearch::add_node(State state, int stack, NodeId parent, Step step,
                                                      std::size_t actions) {
    const auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back({std::move(state), stack, parent, step, {compounds(stack), actions, next_seq_}});
    if (options_.duplicate_detection && !seen_.insert({&nodes_.back().state, stack}).second) {
        nodes_.pop_back();
        ++stats_.duplicates;
        return std::nullopt;
    }
    ++next_seq_;
    ++stats_.generated;
    return id;
}

std::vector<TaskId> TfdSearch::tasks(NodeId id) const {
    std::vector<TaskId> out;
    for (int s = node(id).stack; s >= 0; s = cells_[static_cast<std::size_t>(s)].tail)
        out.push_back(cells_[static_cast<std::size_t>(s)].task);
    return out;
}

std::size_t TfdSearch::non_decomposed(NodeId id) const { return compounds(node(id).stack); }

namespace {

template <typename Nodes>
std::vector<Step> path_to(const Nodes &nodes, int id) {
    std::vector<Step> path;
    for (int n = id; nodes[static_cast<std::size_t>(n)].parent >= 0; n = nodes[static_cast<std::size_t>(n)].parent)
        path.push_back(nodes[static_cast<std::size_t>(n)].step);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::vector<ActionId> TfdSearch::plan_prefix(NodeId id) const {
    std::vector<ActionId> out;
    for (const auto &step : path_to(nodes_, id))
        if (!step.decomposition)
            out.push_back(step.id);
    return out;
}

std::vector<std::pair<TaskId, MethodId>> TfdSearch::decomposition_log(NodeId id) const {
    std::vector<std::pair<TaskId, MethodId>> out;
    for (const auto &step : path_to(nodes_, id))
        if (step.decomposition)
            out.emplace_back(problem_.methods[static_cast<std::size_t>(step.id)].task, step.id);
    return out;
}

Plan TfdSearch::extract_plan(NodeId id) const { return replay_steps(problem_, path_to(nodes_, id), true); }

std::vector<TfdSearch::NodeId> TfdSearch::expand_primitive(NodeId id) {
    const int stack = node(id).stack;
    const Cell head = cells_[static_cast<std::size_t>(stack)];
    std::vector<NodeId> out;
    for (ActionId a : problem_.relevant_actions[static_cast<std::size_t>(head.task)]) {
        const auto &action = problem_.actions[static_cast<std::size_t>(a)];
        if (!applicable(action, node(id).state))
            continue;
        if (auto child = add_node(apply(node(id).state, action), head.tail, id, {false, 0, a},
                                  node(id).rank.actions + 1))
            out.push_back(*child);
    }
    return out;
}

std::vector<TfdSearch::NodeId> TfdSearch::expand_compound(NodeId id) {
    const int stack = node(id).stack;
    const Cell head = cells_[static_cast<std::size_t>(stack)];
    std::vector<NodeId> out;
    for (MethodId m : problem_.relevant_methods[static_cast<std::size_t>(head.task)]) {
        const auto &method = problem_.methods[static_cast<std::size_t>(m)];
        if (!applicable(method, node(id).state))
            continue;
        int next = head.tail;
        for (auto it = method.subtasks.rbegin(); it != method.subtasks.rend(); ++it)
            next = cons(*it, next);
        if (auto child = add_node(node(id).state, next, id, {true, 0, m}, node(id).rank.actions))
            out.push_back(*child);
    }
    return out;
}

std::vector<TfdSearch::NodeId> TfdSearch::expand(NodeId id) {
    const TaskId head = cells_[static_cast<std::size_t>(node(id).stack)].task;
    return problem_.is_primitive(head) ? expand_primitive(id) : expand_compound(id);
}

SearchResult TfdSearch::solve() {
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
        if (node(id).stack < 0) {
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
        const auto children = expand(id);
        ++stats_.expanded;
        if (options_.trace) {
            const TaskId head = cells_[static_cast<std::size_t>(node(id).stack)].task;
            *options_.trace << "expand " << id << " task " << task_name(problem_, head) << " branches "
                            << children.size() << '\n';
        }
        for (NodeId c : children)
            frontier.emplace(node(c).rank, c);
    }
    result.stats = stats_;
    return result;
}

SearchResult tfd_solve(const GroundProblem &problem, const SearchOptions &options) {
    TfdSearch search(problem, options);
    return search.solve();
}

}  // namespace htn::search
