#ifndef HTN_HDDL_LEXER_H
#define HTN_HDDL_LEXER_H

#include <string>
#include <string_view>
#include <vector>

namespace htn::hddl {

enum class TokenKind { LParen, RParen, Keyword, Ident, Variable };

struct Token {
    TokenKind kind;
    std::string text;
    int line;
    int column;
};

const char *to_string(TokenKind kind);

/// Splits HDDL source into tokens. Symbols are lower-cased; `;` comments
/// run to the end of the line. Throws IllegalCharacter on any byte outside
/// the lexical alphabet (letters, digits, `-_.<>=` and the sigils `?` `:`).
std::vector<Token> tokenize(std::string_view source);

}  // namespace htn::hddl

#endif
