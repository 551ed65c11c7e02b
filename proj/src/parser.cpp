#include "logicnet/parser.hpp"

#include <cctype>
#include <sstream>

namespace logicnet {

namespace {

enum class Tok {
    Ident,
    NotOp,
    AndOp,
    OrOp,
    ImpliesOp,
    PossiblyOp,
    LParen,
    RParen,
    End
};

struct Token {
    Tok type;
    std::string text;
    std::size_t offset;
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::Ident:
            return "identifier";
        case Tok::NotOp:
            return "'!'";
        case Tok::AndOp:
            return "'&'";
        case Tok::OrOp:
            return "'|'";
        case Tok::ImpliesOp:
            return "'->'";
        case Tok::PossiblyOp:
            return "'<>'";
        case Tok::LParen:
            return "'('";
        case Tok::RParen:
            return "')'";
        case Tok::End:
            return "end of input";
    }
    return "?";
}

bool starts_with(std::string_view text, std::size_t at, std::string_view lit) {
    return text.substr(at, lit.size()) == lit;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i + 1;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) ||
                    text[j] == '_')) {
                ++j;
            }
            tokens.push_back(
                {Tok::Ident, std::string(text.substr(i, j - i)), i});
            i = j;
            continue;
        }
        // Multi-byte first: ASCII digraphs, then UTF-8 aliases.
        struct Lexeme {
            std::string_view lit;
            Tok type;
        };
        static constexpr Lexeme lexemes[] = {
            {"->", Tok::ImpliesOp},     {"<>", Tok::PossiblyOp},
            {"¬", Tok::NotOp},     {"∧", Tok::AndOp},
            {"∨", Tok::OrOp},      {"→", Tok::ImpliesOp},
            {"◊", Tok::PossiblyOp}, {"!", Tok::NotOp},
            {"&", Tok::AndOp},          {"|", Tok::OrOp},
            {"(", Tok::LParen},         {")", Tok::RParen},
        };
        bool matched = false;
        for (const Lexeme& lex : lexemes) {
            if (starts_with(text, i, lex.lit)) {
                tokens.push_back({lex.type, std::string(lex.lit), i});
                i += lex.lit.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            throw ParseError("unexpected character", i,
                             {"identifier", "'!'", "'<>'", "'('"});
        }
    }
    tokens.push_back({Tok::End, "", text.size()});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Formula parse() {
        Formula f = implication();
        if (peek().type != Tok::End) {
            fail({Tok::AndOp, Tok::OrOp, Tok::ImpliesOp, Tok::End});
        }
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(std::vector<Tok> expected) const {
        std::vector<std::string> names;
        names.reserve(expected.size());
        for (Tok t : expected) names.push_back(describe(t));
        std::ostringstream msg;
        const std::string what = describe(peek().type);
        msg << "unexpected " << what;
        if (!peek().text.empty() && "'" + peek().text + "'" != what) {
            msg << " '" << peek().text << "'";
        }
        throw ParseError(msg.str(), peek().offset, std::move(names));
    }

    // implication := disjunction ('->' implication)?   right-associative
    Formula implication() {
        Formula lhs = disjunction();
        if (peek().type == Tok::ImpliesOp) {
            take();
            return implies(std::move(lhs), implication());
        }
        return lhs;
    }

    // disjunction := conjunction ('|' conjunction)*    left-associative
    Formula disjunction() {
        Formula lhs = conjunction();
        while (peek().type == Tok::OrOp) {
            take();
            lhs = disj(std::move(lhs), conjunction());
        }
        return lhs;
    }

    // conjunction := unary ('&' unary)*                left-associative
    Formula conjunction() {
        Formula lhs = unary();
        while (peek().type == Tok::AndOp) {
            take();
            lhs = conj(std::move(lhs), unary());
        }
        return lhs;
    }

    // unary := '!' unary | '<>' unary | atom
    Formula unary() {
        if (peek().type == Tok::NotOp) {
            take();
            return neg(unary());
        }
        if (peek().type == Tok::PossiblyOp) {
            take();
            return possibly(unary());
        }
        return atom();
    }

    // atom := identifier | '(' implication ')'
    Formula atom() {
        if (peek().type == Tok::Ident) {
            return var(take().text);
        }
        if (peek().type == Tok::LParen) {
            take();
            Formula inner = implication();
            if (peek().type != Tok::RParen) {
                fail({Tok::AndOp, Tok::OrOp, Tok::ImpliesOp, Tok::RParen});
            }
            take();
            return inner;
        }
        fail({Tok::Ident, Tok::LParen, Tok::NotOp, Tok::PossiblyOp});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(std::string message, std::size_t offset,
                       std::vector<std::string> expected)
    : std::runtime_error([&] {
          std::ostringstream full;
          full << "syntax error at byte " << offset << ": " << message
               << "; expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) {
              if (i) full << (i + 1 == expected.size() ? " or " : ", ");
              full << expected[i];
          }
          return full.str();
      }()),
      offset_(offset),
      expected_(std::move(expected)) {}

Formula parse(std::string_view text) {
    return Parser(tokenize(text)).parse();
}

}  // namespace logicnet
