#ifndef HTN_NETWORK_TASK_NETWORK_H
#define HTN_NETWORK_TASK_NETWORK_H

#include "htn/network/bool_matrix.h"

#include <cstddef>
#include <vector>

namespace htn {

using TaskId = int;

/// Ground task instances with before[i][j] meaning i must precede j.
struct TaskNetwork {
    std::vector<TaskId> tasks;
    BoolMatrix before;

    std::size_t size() const { return tasks.size(); }
    bool empty() const { return tasks.empty(); }

    /// Strict chain over list positions.
    static TaskNetwork chain(std::vector<TaskId> tasks);

    friend bool operator==(const TaskNetwork &, const TaskNetwork &) = default;
};

/// Indices of tasks without a predecessor, ascending.
std::vector<std::size_t> free_tasks(const TaskNetwork &network);

/// Removes task i with its row and column.
TaskNetwork remove_task(const TaskNetwork &network, std::size_t i);

/// If the closed relation `before` is a strict total order, returns the
/// positions in execution order; otherwise an empty vector (for n > 0).
std::vector<std::size_t> linear_order(const BoolMatrix &closed);

}  // namespace htn

#endif
