#include "htn/network/task_network.h"

#include <algorithm>

namespace htn {

TaskNetwork TaskNetwork::chain(std::vector<TaskId> tasks) {
    TaskNetwork n{std::move(tasks), BoolMatrix(0)};
    n.before = BoolMatrix(n.tasks.size());
    for (std::size_t i = 0; i < n.tasks.size(); ++i)
        for (std::size_t j = i + 1; j < n.tasks.size(); ++j)
            n.before.set(i, j);
    return n;
}

std::vector<std::size_t> free_tasks(const TaskNetwork &network) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < network.size(); ++i)
        if (!network.before.column_any(i))
            out.push_back(i);
    return out;
}

TaskNetwork remove_task(const TaskNetwork &network, std::size_t i) {
    TaskNetwork out;
    out.tasks = network.tasks;
    out.tasks.erase(out.tasks.begin() + static_cast<std::ptrdiff_t>(i));
    out.before = network.before.without(i);
    return out;
}

std::vector<std::size_t> linear_order(const BoolMatrix &closed) {
    const std::size_t n = closed.size();
    if (closed.has_reflexive())
        return {};
    // In a strict total order the element with k predecessors sits at rank k.
    std::vector<std::size_t> order(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t preds = 0;
        for (std::size_t i = 0; i < n; ++i)
            preds += closed.get(i, j) ? 1 : 0;
        if (order[preds] != n)
            return {};
        order[preds] = j;
    }
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!closed.get(order[k], order[k + 1]))
            return {};
    return order;
}

}  // namespace htn
