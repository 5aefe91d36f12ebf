#include "tss/parser.hpp"

#include "tss/error.hpp"

#include <cctype>

namespace tss {

namespace {

struct Token {
  enum class Kind { number, ident, op, lparen, rparen, comma, end };
  Kind kind;
  std::size_t begin, end;
  Rational number;
  std::string text;
  char op = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_ = Token{Token::Kind::end, pos_, pos_, Rational(0), "", 0};
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      std::string frac;
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          frac += text_[pos_++];
        if (frac.empty())
          throw Error(errc::syntax_error, "expected digits after decimal point", pos_);
      }
      Rational value{Integer(digits)};
      if (!frac.empty()) {
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value += Rational(Integer(frac), scale);
      }
      current_ = Token{Token::Kind::number, start, pos_, value, "", 0};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      current_ = Token{Token::Kind::ident, start, pos_, Rational(0), name, 0};
      return;
    }
    switch (c) {
      case '+': case '-': case '*': case '/': case '^':
        current_ = Token{Token::Kind::op, start, start + 1, Rational(0), "", c};
        ++pos_;
        return;
      case '(':
        current_ = Token{Token::Kind::lparen, start, start + 1, Rational(0), "", 0};
        ++pos_;
        return;
      case ')':
        current_ = Token{Token::Kind::rparen, start, start + 1, Rational(0), "", 0};
        ++pos_;
        return;
      case ',':
        current_ = Token{Token::Kind::comma, start, start + 1, Rational(0), "", 0};
        ++pos_;
        return;
      default:
        throw Error(errc::syntax_error,
                    std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ExprPtr run() {
    ExprPtr e = parse_sum();
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::end)
      throw Error(errc::syntax_error, "unexpected trailing input", t.begin);
    return e;
  }

 private:
  static ExprPtr make(Expr::Kind kind, std::size_t begin, std::size_t end) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->begin = begin;
    e->end = end;
    return e;
  }

  ExprPtr binary(char op, ExprPtr lhs, ExprPtr rhs) {
    auto e = make(Expr::Kind::binary, lhs->begin, rhs->end);
    e->op = op;
    e->children.push_back(std::move(lhs));
    e->children.push_back(std::move(rhs));
    return e;
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_product();
    while (lex_.peek().kind == Token::Kind::op &&
           (lex_.peek().op == '+' || lex_.peek().op == '-')) {
      char op = lex_.take().op;
      lhs = binary(op, std::move(lhs), parse_product());
    }
    return lhs;
  }

  ExprPtr parse_product() {
    ExprPtr lhs = parse_unary();
    while (lex_.peek().kind == Token::Kind::op &&
           (lex_.peek().op == '*' || lex_.peek().op == '/')) {
      char op = lex_.take().op;
      lhs = binary(op, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (lex_.peek().kind == Token::Kind::op && lex_.peek().op == '-') {
      Token t = lex_.take();
      ExprPtr inner = parse_unary();
      auto e = make(Expr::Kind::unary_minus, t.begin, inner->end);
      e->children.push_back(std::move(inner));
      return e;
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (lex_.peek().kind == Token::Kind::op && lex_.peek().op == '^') {
      lex_.take();
      // Right-associative; the exponent may carry its own unary minus.
      ExprPtr exponent = parse_unary();
      return binary('^', std::move(base), std::move(exponent));
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::number: {
        Token tok = lex_.take();
        auto e = make(Expr::Kind::number, tok.begin, tok.end);
        e->number_value = tok.number;
        return e;
      }
      case Token::Kind::ident: {
        Token tok = lex_.take();
        if (lex_.peek().kind == Token::Kind::lparen) {
          lex_.take();
          auto e = make(Expr::Kind::call, tok.begin, 0);
          e->name = tok.text;
          e->children.push_back(parse_sum());
          while (lex_.peek().kind == Token::Kind::comma) {
            lex_.take();
            e->children.push_back(parse_sum());
          }
          const Token& close = lex_.peek();
          if (close.kind != Token::Kind::rparen)
            throw Error(errc::syntax_error, "expected ')'", close.begin);
          e->end = lex_.take().end;
          return e;
        }
        auto e = make(Expr::Kind::symbol, tok.begin, tok.end);
        e->name = tok.text;
        return e;
      }
      case Token::Kind::lparen: {
        lex_.take();
        ExprPtr inner = parse_sum();
        const Token& close = lex_.peek();
        if (close.kind != Token::Kind::rparen)
          throw Error(errc::syntax_error, "expected ')'", close.begin);
        lex_.take();
        return inner;
      }
      default:
        throw Error(errc::syntax_error, "expected a number, name, or '('", t.begin);
    }
  }

  Lexer lex_;
};

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

}  // namespace tss
