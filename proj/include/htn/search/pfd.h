#ifndef HTN_SEARCH_PFD_H
#define HTN_SEARCH_PFD_H

#include "htn/search/common.h"

#include <deque>
#include <optional>
#include <unordered_set>
#include <vector>

namespace htn::search {

enum class ClosureMode {
    Warshall,  // recompute the closure of the whole network
    Incremental,  // extend the closed matrix one method edge at a time
};

/// Replaces task i of a closed network by the subtasks of m, appended at the
/// end. Constraints on task i carry over to every subtask. Returns nullopt
/// when the result has an ordering cycle.
std::optional<TaskNetwork> decompose_in_network(const TaskNetwork &network, std::size_t i, const GroundMethod &m,
                                                ClosureMode mode = ClosureMode::Warshall);

/// Isomorphism-invariant form of a network: tasks sorted by (task id,
/// in-degree, out-degree), remaining ties by position; matrix permuted to match.
TaskNetwork canonical_network(const TaskNetwork &network);

class PfdSearch {
public:
    using NodeId = int;

    struct Node {
        State state;
        TaskNetwork network;  // closed, acyclic; in search order, not canonical
        NodeId parent = -1;
        Step step;
        NodeRank rank;
    };

    PfdSearch(const GroundProblem &problem, SearchOptions options = {});

    NodeId root() const { return 0; }
    const Node &node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
    std::size_t node_count() const { return nodes_.size(); }

    std::vector<ActionId> plan_prefix(NodeId id) const;
    std::vector<std::pair<TaskId, MethodId>> decomposition_log(NodeId id) const;
    Plan extract_plan(NodeId id) const;

    /// Task i must be free and primitive.
    std::vector<NodeId> expand_free_primitive(NodeId id, std::size_t i);
    /// Task i must be free and compound; cyclic decompositions are dropped.
    std::vector<NodeId> expand_free_compound(NodeId id, std::size_t i);
    /// Branches over the free tasks (only the first with pfd_first_free).
    std::vector<NodeId> expand(NodeId id);

    SearchResult solve();

private:
    struct Key {
        State state;
        TaskNetwork network;
        friend bool operator==(const Key &, const Key &) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key &k) const;
    };

    std::optional<NodeId> add_node(State state, TaskNetwork network, NodeId parent, Step step, std::size_t actions);
    std::vector<std::size_t> branch_tasks(NodeId id) const;

    const GroundProblem &problem_;
    SearchOptions options_;
    std::deque<Node> nodes_;
    std::unordered_set<Key, KeyHash> seen_;
    std::uint64_t next_seq_ = 0;
    SearchStats stats_;
};

SearchResult pfd_solve(const GroundProblem &problem, const SearchOptions &options = {});

}  // namespace htn::search

#endif
