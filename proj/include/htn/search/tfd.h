#ifndef HTN_SEARCH_TFD_H
#define HTN_SEARCH_TFD_H

#include "htn/search/common.h"

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace htn::search {

/// Totally ordered forward decomposition as a best-first search. Task
/// sequences are shared, hash-consed cons lists, so equal remaining
/// sequences have equal ids.
class TfdSearch {
public:
    using NodeId = int;

    struct Node {
        State state;
        int stack = -1;  // -1 is the empty sequence
        NodeId parent = -1;
        Step step;
        NodeRank rank;
    };

    /// The problem must be totally ordered; throws std::invalid_argument otherwise.
    TfdSearch(const GroundProblem &problem, SearchOptions options = {});

    NodeId root() const { return 0; }
    const Node &node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
    std::size_t node_count() const { return nodes_.size(); }

    /// Remaining tasks, head first.
    std::vector<TaskId> tasks(NodeId id) const;
    std::size_t non_decomposed(NodeId id) const;
    std::vector<ActionId> plan_prefix(NodeId id) const;
    std::vector<std::pair<TaskId, MethodId>> decomposition_log(NodeId id) const;
    Plan extract_plan(NodeId id) const;

    /// Successors of a node whose head task is primitive: one per applicable
    /// relevant action. Empty when none applies.
    std::vector<NodeId> expand_primitive(NodeId id);
    /// Successors of a node whose head task is compound: one per applicable
    /// relevant method, with its subtasks placed in front of the rest.
    std::vector<NodeId> expand_compound(NodeId id);
    /// Dispatches on the head task; the node must have a non-empty sequence.
    std::vector<NodeId> expand(NodeId id);

    SearchResult solve();

private:
    struct Cell {
        TaskId task;
        int tail;
        std::size_t compounds;
    };
    struct Key {
        const State *state;
        int stack;
    };
    struct KeyHash {
        std::size_t operator()(const Key &k) const;
    };
    struct KeyEq {
        bool operator()(const Key &a, const Key &b) const { return a.stack == b.stack && *a.state == *b.state; }
    };

    int cons(TaskId task, int tail);
    std::size_t compounds(int stack) const;
    /// Adds a node unless it duplicates a known (state, sequence) pair.
    std::optional<NodeId> add_node(State state, int stack, NodeId parent, Step step, std::size_t actions);

    const GroundProblem &problem_;
    SearchOptions options_;
    std::vector<Cell> cells_;
    std::unordered_map<std::uint64_t, int> cell_ids_;
    std::deque<Node> nodes_;  // stable addresses for the duplicate keys
    std::unordered_set<Key, KeyHash, KeyEq> seen_;
    std::uint64_t next_seq_ = 0;
    SearchStats stats_;
};

SearchResult tfd_solve(const GroundProblem &problem, const SearchOptions &options = {});

}  // namespace htn::search

#endif
