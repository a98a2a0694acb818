#include "iplogic/parser.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace iplogic {

namespace {

enum class Tok { LParen, RParen, NotOp, AndOp, OrOp, IffOp, ImpOp, RevImpOp, True, False, Atom, End };

struct Token {
  Tok kind;
  std::string text;  // Atom name, or the lexeme for diagnostics
  std::size_t line, column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::NotOp: return "'~'";
    case Tok::AndOp: return "'&'";
    case Tok::OrOp: return "'v'";
    case Tok::IffOp: return "'<->'";
    case Tok::ImpOp: return "'->'";
    case Tok::RevImpOp: return "'<-'";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Atom: return "atom";
    case Tok::End: return "end of input";
  }
  return "token";
}

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_space();
      std::size_t line = line_, column = column_;
      if (pos_ == text_.size()) {
        tokens.push_back({Tok::End, "", line, column});
        return tokens;
      }
      char ch = text_[pos_];
      switch (ch) {
        case '(': tokens.push_back({Tok::LParen, "(", line, column}); advance(); break;
        case ')': tokens.push_back({Tok::RParen, ")", line, column}); advance(); break;
        case '~': tokens.push_back({Tok::NotOp, "~", line, column}); advance(); break;
        case '&': tokens.push_back({Tok::AndOp, "&", line, column}); advance(); break;
        case '-':
          advance();
          if (pos_ < text_.size() && text_[pos_] == '>') {
            advance();
            tokens.push_back({Tok::ImpOp, "->", line, column});
          } else {
            fail("expected '->'", line, column);
          }
          break;
        case '<':
          advance();
          if (pos_ < text_.size() && text_[pos_] == '-') {
            advance();
            if (pos_ < text_.size() && text_[pos_] == '>') {
              advance();
              tokens.push_back({Tok::IffOp, "<->", line, column});
            } else {
              tokens.push_back({Tok::RevImpOp, "<-", line, column});
            }
          } else {
            fail("expected '<-' or '<->'", line, column);
          }
          break;
        default:
          if (std::islower(static_cast<unsigned char>(ch))) {
            std::string word = read_word();
            if (word == "v")
              tokens.push_back({Tok::OrOp, "v", line, column});
            else if (word == "true")
              tokens.push_back({Tok::True, "true", line, column});
            else if (word == "false")
              tokens.push_back({Tok::False, "false", line, column});
            else
              tokens.push_back({Tok::Atom, std::move(word), line, column});
          } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
            fail("atoms must start with a lowercase letter", line, column);
          } else {
            fail(std::string("unexpected character '") + ch + "'", line, column);
          }
          break;
      }
    }
  }

private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  std::string read_word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      advance();
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& message, std::size_t line, std::size_t column) {
    throw ParseError(message, line, column);
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, column_ = 1;
};

// Recursive descent over the operator ladder, loosest first:
//   formula := imp
//   imp     := revimp ("->" imp)?
//   revimp  := iff ("<-" iff)*
//   iff     := or ("<->" or)?
//   or      := and ("v" or)?
//   and     := neg ("&" and)?
//   neg     := "~" neg | primary
//   primary := "true" | "false" | ATOM | "(" formula ")"
class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_imp();
    expect(Tok::End);
    return f;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }

  Token take() { return tokens_[pos_++]; }

  void expect(Tok kind) {
    if (peek().kind != kind)
      fail(std::string("expected ") + describe(kind) + ", got " + describe(peek().kind));
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }

  Formula parse_imp() {
    Formula lhs = parse_revimp();
    if (peek().kind == Tok::ImpOp) {
      take();
      return Formula::implication(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  Formula parse_revimp() {
    Formula acc = parse_iff();
    while (peek().kind == Tok::RevImpOp) {
      take();
      acc = Formula::rev_implication(std::move(acc), parse_iff());
    }
    return acc;
  }

  Formula parse_iff() {
    Formula lhs = parse_or();
    if (peek().kind == Tok::IffOp) {
      take();
      Formula rhs = parse_or();
      if (peek().kind == Tok::IffOp)
        fail("'<->' is non associative; parenthesize the intended grouping");
      return Formula::equivalence(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    if (peek().kind == Tok::OrOp) {
      take();
      return Formula::disjunction(std::move(lhs), parse_or());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_neg();
    if (peek().kind == Tok::AndOp) {
      take();
      return Formula::conjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_neg() {
    if (peek().kind == Tok::NotOp) {
      take();
      return Formula::negation(parse_neg());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    switch (peek().kind) {
      case Tok::True: take(); return Formula::top();
      case Tok::False: take(); return Formula::bottom();
      case Tok::Atom: return Formula::atom(take().text);
      case Tok::LParen: {
        take();
        Formula f = parse_imp();
        expect(Tok::RParen);
        take();
        return f;
      }
      default:
        fail(std::string("expected a formula, got ") + describe(peek().kind));
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "parse error at " << line << ":" << column << ": " << message;
        return os.str();
      }()),
      line_(line),
      column_(column) {}

Formula parse(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

}  // namespace iplogic
