#ifndef HTN_SEARCH_COMMON_H
#define HTN_SEARCH_COMMON_H

#include "htn/search/plan.h"

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace htn::search {

/// Ordering key of a search node: fewer non-decomposed (compound) tasks
/// first, then fewer actions, then earlier insertion.
struct NodeRank {
    std::size_t non_decomposed = 0;
    std::size_t actions = 0;
    std::uint64_t seq = 0;
    friend auto operator<=>(const NodeRank &, const NodeRank &) = default;
};

/// Index of the best node; the frontier must be non-empty.
std::size_t select_node(std::span<const NodeRank> frontier);

struct SearchOptions {
    std::optional<std::chrono::duration<double>> timeout;
    std::optional<std::size_t> max_nodes;  // expansions
    bool duplicate_detection = true;
    std::ostream *trace = nullptr;
    bool pfd_first_free = false;
};

enum class Status { Solved, Unsolvable, ResourceExhausted };
enum class Limit { None, Timeout, MaxNodes };

const char *to_string(Status status);
const char *to_string(Limit limit);

struct SearchStats {
    std::size_t expanded = 0;
    std::size_t generated = 0;
    std::size_t duplicates = 0;
    std::size_t cyclic = 0;  // decompositions discarded for ordering cycles
};

struct SearchResult {
    Status status = Status::Unsolvable;
    Limit limit = Limit::None;
    std::optional<Plan> plan;
    SearchStats stats;
};

/// Transition taken from a parent node: an action or a method applied to the
/// task at `index` of the parent's network (0 for the sequence head).
struct Step {
    bool decomposition = false;
    std::size_t index = 0;
    int id = 0;  // ActionId or MethodId
};

/// Rebuilds instance ids along a root-to-leaf step path. TFD networks are
/// sequences with subtasks prepended; PFD networks append subtasks.
Plan replay_steps(const GroundProblem &problem, const std::vector<Step> &path, bool prepend_subtasks);

/// Deadline / node budget bookkeeping shared by both engines.
class Budget {
public:
    explicit Budget(const SearchOptions &options);
    /// Limit reached before the next expansion, if any.
    Limit exhausted(std::size_t expanded) const;

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::optional<std::size_t> max_nodes_;
};

}  // namespace htn::search

#endif
