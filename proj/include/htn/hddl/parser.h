#ifndef HTN_HDDL_PARSER_H
#define HTN_HDDL_PARSER_H

#include "htn/hddl/ast.h"
#include "htn/hddl/lexer.h"

#include <span>
#include <string>
#include <string_view>

namespace htn::hddl {

/// Parses a domain and checks it: declared types/predicates/tasks, arities,
/// variable scoping, ordering labels and requirement flags.
LiftedDomainAst parse_domain(std::span<const Token> tokens);

/// Parses a problem against an already parsed domain.
LiftedProblemAst parse_problem(std::span<const Token> tokens, const LiftedDomainAst &domain);

// Convenience overloads over raw source text.
LiftedDomainAst parse_domain(std::string_view source);
LiftedProblemAst parse_problem(std::string_view source, const LiftedDomainAst &domain);

/// Requirement flags accepted by the parser.
bool is_supported_requirement(std::string_view flag);

/// Canonical HDDL text for an AST. Parsing the output yields an equal AST.
std::string unparse(const LiftedDomainAst &domain);
std::string unparse(const LiftedProblemAst &problem);

}  // namespace htn::hddl

#endif
