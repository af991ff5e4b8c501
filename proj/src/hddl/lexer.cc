#include "htn/hddl/lexer.h"

#include "htn/hddl/errors.h"

#include <cctype>

namespace htn::hddl {

const char *to_string(TokenKind kind) {
    switch (kind) {
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Ident: return "identifier";
    case TokenKind::Variable: return "variable";
    }
    return "token";
}

namespace {

bool is_symbol_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x80)
        return false;
    return std::isalnum(u) || c == '-' || c == '_' || c == '.' || c == '<' || c == '>' || c == '=';
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    const std::size_t n = source.size();

    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count; ++k, ++i) {
            if (source[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };

    while (i < n) {
        const char c = source[i];
        if (is_space(c)) {
            advance(1);
        } else if (c == ';') {
            while (i < n && source[i] != '\n')
                advance(1);
        } else if (c == '(') {
            tokens.push_back({TokenKind::LParen, "(", line, column});
            advance(1);
        } else if (c == ')') {
            tokens.push_back({TokenKind::RParen, ")", line, column});
            advance(1);
        } else if (c == '?' || c == ':' || is_symbol_char(c)) {
            const int start_line = line;
            const int start_column = column;
            std::size_t j = i + 1;
            while (j < n && is_symbol_char(source[j]))
                ++j;
            std::string text(source.substr(i, j - i));
            if ((c == '?' || c == ':') && text.size() == 1)
                throw IllegalCharacter(start_line, start_column, c);
            for (char &ch : text)
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            const TokenKind kind = c == '?' ? TokenKind::Variable
                                 : c == ':' ? TokenKind::Keyword
                                            : TokenKind::Ident;
            tokens.push_back({kind, std::move(text), start_line, start_column});
            advance(j - i);
        } else {
            throw IllegalCharacter(line, column, c);
        }
    }
    return tokens;
}

}  // namespace htn::hddl
