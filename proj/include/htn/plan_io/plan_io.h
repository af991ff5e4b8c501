#ifndef HTN_PLAN_IO_PLAN_IO_H
#define HTN_PLAN_IO_PLAN_IO_H

#include "htn/search/plan.h"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace htn::plan_io {

/// Textual hierarchical plan. Actions take ids 0..n-1 in execution order;
/// compound task instances follow in decomposition order.
struct PlanDocument {
    struct ActionLine {
        int id = 0;
        std::string name;
        std::vector<std::string> args;
        friend bool operator==(const ActionLine &, const ActionLine &) = default;
    };
    struct MethodLine {
        int id = 0;
        std::string task;
        std::vector<std::string> args;
        std::string method;
        std::vector<int> children;
        friend bool operator==(const MethodLine &, const MethodLine &) = default;
    };
    std::vector<ActionLine> actions;
    std::vector<int> root;
    std::vector<MethodLine> methods;
    friend bool operator==(const PlanDocument &, const PlanDocument &) = default;
};

class PlanFormatError : public std::runtime_error {
public:
    PlanFormatError(std::size_t line, const std::string &message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

PlanDocument to_document(const GroundProblem &problem, const Plan &plan);
std::string format(const PlanDocument &doc);
std::string write_plan(const GroundProblem &problem, const Plan &plan);

/// Reads the format produced by `format`. Throws PlanFormatError.
PlanDocument parse_plan(std::string_view text);

struct Validation {
    enum class Kind { Valid, Executability, Decomposition, Ordering, Incomplete };
    Kind kind = Kind::Valid;
    std::size_t position = 0;  // action index or decomposition index
    std::string reason;
    bool valid() const { return kind == Kind::Valid; }
};

const char *to_string(Validation::Kind kind);

/// Replays the plan's actions and decompositions in order from the initial
/// network using its own set-based state and ordering bookkeeping.
Validation validate_plan(const GroundProblem &problem, const Plan &plan);

}  // namespace htn::plan_io

#endif
