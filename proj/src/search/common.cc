#include "htn/search/common.h"

#include <cassert>

namespace htn::search {

std::size_t select_node(std::span<const NodeRank> frontier) {
    assert(!frontier.empty());
    std::size_t best = 0;
    for (std::size_t i = 1; i < frontier.size(); ++i)
        if (frontier[i] < frontier[best])
            best = i;
    return best;
}

const char *to_string(Status status) {
    switch (status) {
    case Status::Solved:
        return "solved";
    case Status::Unsolvable:
        return "unsolvable";
    case Status::ResourceExhausted:
        return "resource exhausted";
    }
    return "?";
}

const char *to_string(Limit limit) {
    switch (limit) {
    case Limit::None:
        return "none";
    case Limit::Timeout:
        return "timeout";
    case Limit::MaxNodes:
        return "max nodes";
    }
    return "?";
}

Plan replay_steps(const GroundProblem &problem, const std::vector<Step> &path, bool prepend_subtasks) {
    Plan plan;
    std::vector<int> instances;
    for (std::size_t i = 0; i < problem.initial_network.tasks.size(); ++i) {
        instances.push_back(static_cast<int>(i));
        plan.root_instances.push_back(static_cast<int>(i));
    }
    int next_instance = static_cast<int>(instances.size());
    for (const auto &step : path) {
        const int instance = instances[step.index];
        instances.erase(instances.begin() + static_cast<std::ptrdiff_t>(step.index));
        if (!step.decomposition) {
            plan.actions.push_back(step.id);
            plan.action_instances.push_back(instance);
            continue;
        }
        const auto &m = problem.methods[static_cast<std::size_t>(step.id)];
        Decomposition d{instance, m.task, m.id, {}, plan.actions.size()};
        for (std::size_t k = 0; k < m.subtasks.size(); ++k)
            d.children.push_back(next_instance++);
        if (prepend_subtasks)
            instances.insert(instances.begin(), d.children.begin(), d.children.end());
        else
            instances.insert(instances.end(), d.children.begin(), d.children.end());
        plan.decompositions.push_back(std::move(d));
    }
    return plan;
}

Budget::Budget(const SearchOptions &options) : max_nodes_(options.max_nodes) {
    if (options.timeout)
        deadline_ = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(*options.timeout);
}

Limit Budget::exhausted(std::size_t expanded) const {
    if (max_nodes_ && expanded >= *max_nodes_)
        return Limit::MaxNodes;
    if (deadline_ && std::chrono::steady_clock::now() >= *deadline_)
        return Limit::Timeout;
    return Limit::None;
}

}  // namespace htn::search
