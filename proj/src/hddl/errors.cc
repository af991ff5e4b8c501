#include "htn/hddl/errors.h"

namespace htn::hddl {

namespace {
std::string render(const std::string &kind, int line, int column, const std::string &message) {
    if (line == 0)
        return kind + ": " + message;
    return kind + " at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}
}  // namespace

HddlError::HddlError(const std::string &kind, int line, int column, const std::string &message)
    : std::runtime_error(render(kind, line, column, message)),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(message) {}

IllegalCharacter::IllegalCharacter(int line, int column, char c)
    : HddlError("IllegalCharacter", line, column,
                "byte 0x" + [c] {
                    const char *hex = "0123456789abcdef";
                    const auto u = static_cast<unsigned char>(c);
                    return std::string{hex[u >> 4], hex[u & 15]};
                }() + " is not part of the HDDL alphabet") {}

SyntaxError::SyntaxError(int line, int column, const std::string &expected, const std::string &found)
    : HddlError("SyntaxError", line, column, "expected " + expected + " but found " + found),
      expected_(expected) {}

SemanticError::SemanticError(int line, int column, const std::string &message)
    : HddlError("SemanticError", line, column, message) {}

UnsupportedRequirement::UnsupportedRequirement(int line, int column, const std::string &name)
    : HddlError("UnsupportedRequirement", line, column, "requirement " + name + " is not supported"),
      name_(name) {}

DomainMismatch::DomainMismatch(int line, int column, const std::string &expected, const std::string &found)
    : HddlError("DomainMismatch", line, column,
                "problem refers to domain '" + found + "' but the domain is '" + expected + "'") {}

}  // namespace htn::hddl
