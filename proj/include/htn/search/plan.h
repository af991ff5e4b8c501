#ifndef HTN_SEARCH_PLAN_H
#define HTN_SEARCH_PLAN_H

#include "htn/grounding/ground_problem.h"

#include <cstddef>
#include <vector>

namespace htn {

/// One method application. Instance ids name task occurrences: roots are
/// 0..k-1 in initial-network order, later ones are numbered as created.
struct Decomposition {
    int instance = 0;
    TaskId task = 0;
    MethodId method = 0;
    std::vector<int> children;  // in method subtask order
    std::size_t before_action = 0;  // actions executed before this decomposition
    friend bool operator==(const Decomposition &, const Decomposition &) = default;
};

struct Plan {
    std::vector<ActionId> actions;
    std::vector<int> action_instances;  // primitive task instance executed by each action
    std::vector<int> root_instances;
    std::vector<Decomposition> decompositions;  // in application order
    friend bool operator==(const Plan &, const Plan &) = default;
};

}  // namespace htn

#endif
