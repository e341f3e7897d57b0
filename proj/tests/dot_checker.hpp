#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Minimal structural validator for the Graphviz digraph dialect: enough of
// the grammar to accept what a DOT parser would and reject broken output,
// with node/edge counts for assertions. No rendering engine involved.
namespace dotcheck {

struct Summary {
    std::size_t node_statements = 0;
    std::size_t edge_statements = 0;
    std::size_t dashed_edges = 0;
};

namespace detail {

struct Token {
    enum Kind { Id, Symbol, Arrow, End } kind = End;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::optional<Token> next() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size()) return Token{Token::End, ""};

        const char c = text_[pos_];
        if (c == '"') {
            std::string out;
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
                out += text_[pos_++];
            }
            if (pos_ >= text_.size()) return std::nullopt;  // unterminated string
            ++pos_;
            return Token{Token::Id, out};
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            pos_ += 2;
            return Token{Token::Arrow, "->"};
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
            std::string out;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_' || text_[pos_] == '.'))
                out += text_[pos_++];
            return Token{Token::Id, out};
        }
        if (std::string_view("{}[];,=").find(c) != std::string_view::npos) {
            ++pos_;
            return Token{Token::Symbol, std::string(1, c)};
        }
        return std::nullopt;  // illegal character
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Returns counts when text is a well-formed digraph, nullopt otherwise.
inline std::optional<Summary> check_digraph(std::string_view text) {
    detail::Lexer lexer(text);
    std::vector<detail::Token> tokens;
    while (true) {
        auto t = lexer.next();
        if (!t) return std::nullopt;
        tokens.push_back(*t);
        if (t->kind == detail::Token::End) break;
    }

    std::size_t i = 0;
    auto is_symbol = [&](std::string_view s) {
        return tokens[i].kind == detail::Token::Symbol && tokens[i].text == s;
    };

    if (tokens[i].kind != detail::Token::Id || tokens[i].text != "digraph") return std::nullopt;
    ++i;
    if (tokens[i].kind == detail::Token::Id) ++i;  // optional graph name
    if (!is_symbol("{")) return std::nullopt;
    ++i;

    Summary summary;
    while (!is_symbol("}")) {
        if (tokens[i].kind != detail::Token::Id) return std::nullopt;
        ++i;

        bool edge = false;
        if (tokens[i].kind == detail::Token::Arrow) {
            ++i;
            if (tokens[i].kind != detail::Token::Id) return std::nullopt;
            ++i;
            edge = true;
        }

        bool dashed = false;
        if (is_symbol("[")) {
            ++i;
            while (!is_symbol("]")) {
                if (tokens[i].kind != detail::Token::Id) return std::nullopt;
                const std::string key = tokens[i].text;
                ++i;
                if (!is_symbol("=")) return std::nullopt;
                ++i;
                if (tokens[i].kind != detail::Token::Id) return std::nullopt;
                if (key == "style" && tokens[i].text == "dashed") dashed = true;
                ++i;
                if (is_symbol(",")) ++i;
            }
            ++i;
        }
        if (is_symbol(";")) ++i;

        if (edge) {
            ++summary.edge_statements;
            if (dashed) ++summary.dashed_edges;
        } else {
            ++summary.node_statements;
        }
    }
    ++i;
    if (tokens[i].kind != detail::Token::End) return std::nullopt;
    return summary;
}

}  // namespace dotcheck
