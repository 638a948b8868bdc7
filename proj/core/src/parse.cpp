#include "lammult/syntax.hpp"

#include <cctype>

namespace lammult {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + msg),
      line(line),
      column(column) {}

namespace {

struct Token {
  enum class Kind { LParen, RParen, Lambda, Dot, Ident, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance_token(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance_token();
    return t;
  }

 private:
  void advance_token() {
    skip_space_and_comments();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) {
      current_ = {Token::Kind::End, "", line, col};
      return;
    }
    char c = src_[pos_];
    switch (c) {
      case '(':
        bump();
        current_ = {Token::Kind::LParen, "(", line, col};
        return;
      case ')':
        bump();
        current_ = {Token::Kind::RParen, ")", line, col};
        return;
      case '\\':
        bump();
        current_ = {Token::Kind::Lambda, "\\", line, col};
        return;
      case '.':
        bump();
        current_ = {Token::Kind::Dot, ".", line, col};
        return;
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < src_.size()) {
        char d = src_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'') {
          text += d;
          bump();
        } else {
          break;
        }
      }
      current_ = {Token::Kind::Ident, std::move(text), line, col};
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_{Token::Kind::End, "", 1, 1};
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Term parse_whole() {
    Term t = parse_term();
    const Token& tok = lex_.peek();
    if (tok.kind != Token::Kind::End) {
      throw ParseError("unexpected input after term", tok.line, tok.column);
    }
    return t;
  }

 private:
  Term parse_term() {
    Token tok = lex_.take();
    switch (tok.kind) {
      case Token::Kind::Ident:
        return Term::var(Identifier{tok.text});
      case Token::Kind::LParen:
        if (lex_.peek().kind == Token::Kind::Lambda) {
          lex_.take();
          return parse_binder(tok);
        }
        return parse_application(tok);
      default:
        throw ParseError("expected a term", tok.line, tok.column);
    }
  }

  Term parse_binder(const Token& open) {
    std::vector<Identifier> params;
    while (lex_.peek().kind == Token::Kind::Ident) {
      Token p = lex_.take();
      Identifier id{p.text};
      for (const Identifier& seen : params) {
        if (seen == id) {
          throw ParseError("duplicate parameter '" + p.text + "' in binder",
                           p.line, p.column);
        }
      }
      params.push_back(std::move(id));
    }
    if (params.empty()) {
      const Token& tok = lex_.peek();
      throw ParseError("binder needs at least one parameter", tok.line, tok.column);
    }
    expect(Token::Kind::Dot, "expected '.' after binder parameters");
    Term body = parse_term();
    expect(Token::Kind::RParen, "expected ')' to close binder");
    (void)open;
    return Term::fun(std::move(params), std::move(body));
  }

  Term parse_application(const Token& open) {
    Term head = parse_term();
    std::vector<Term> args;
    while (lex_.peek().kind != Token::Kind::RParen) {
      if (lex_.peek().kind == Token::Kind::End) {
        const Token& tok = lex_.peek();
        throw ParseError("expected ')' to close application", tok.line, tok.column);
      }
      args.push_back(parse_term());
    }
    Token close = lex_.take();
    if (args.empty()) {
      throw ParseError(
          "application needs at least one argument (arity-zero tuples are not "
          "a term)",
          open.line, open.column);
    }
    (void)close;
    return Term::app(std::move(head), std::move(args));
  }

  void expect(Token::Kind kind, const char* msg) {
    const Token& tok = lex_.peek();
    if (tok.kind != kind) throw ParseError(msg, tok.line, tok.column);
    lex_.take();
  }

  Lexer lex_;
};

}  // namespace

Term parse(std::string_view text) { return Parser{text}.parse_whole(); }

}  // namespace lammult
