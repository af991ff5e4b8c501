#ifndef HTN_HDDL_ERRORS_H
#define HTN_HDDL_ERRORS_H

#include <stdexcept>
#include <string>

namespace htn::hddl {

/// Base of every diagnostic raised while reading HDDL input. Positions are
/// 1-based; (0, 0) means "no position" (e.g. a domain/problem mismatch).
class HddlError : public std::runtime_error {
public:
    HddlError(const std::string &kind, int line, int column, const std::string &message);

    const std::string &kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string &detail() const { return detail_; }

private:
    std::string kind_;
    int line_;
    int column_;
    std::string detail_;
};

class IllegalCharacter : public HddlError {
public:
    IllegalCharacter(int line, int column, char c);
};

class SyntaxError : public HddlError {
public:
    SyntaxError(int line, int column, const std::string &expected, const std::string &found);
    const std::string &expected() const { return expected_; }

private:
    std::string expected_;
};

class SemanticError : public HddlError {
public:
    SemanticError(int line, int column, const std::string &message);
};

class UnsupportedRequirement : public HddlError {
public:
    UnsupportedRequirement(int line, int column, const std::string &name);
    const std::string &requirement() const { return name_; }

private:
    std::string name_;
};

class DomainMismatch : public HddlError {
public:
    DomainMismatch(int line, int column, const std::string &expected, const std::string &found);
};

}  // namespace htn::hddl

#endif
