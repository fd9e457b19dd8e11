#include "wittlab/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "wittlab/errors.hpp"

namespace wittlab {

namespace {

enum class Tok { Ident, Int, LAngle, RAngle, LDouble, RDouble, Comma, Plus, Star, Minus, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, std::string(1, c), line, column};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(src.substr(i, j - i));
      out.push_back(t);
      advance(j - i);
      continue;
    }
    std::size_t width = 1;
    switch (c) {
      case '<':
        if (i + 1 < src.size() && src[i + 1] == '<') {
          t.kind = Tok::LDouble;
          width = 2;
        } else {
          t.kind = Tok::LAngle;
        }
        break;
      case '>':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          t.kind = Tok::RDouble;
          width = 2;
        } else {
          t.kind = Tok::RAngle;
        }
        break;
      case ',': t.kind = Tok::Comma; break;
      case '+': t.kind = Tok::Plus; break;
      case '*': t.kind = Tok::Star; break;
      case '-': t.kind = Tok::Minus; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
    t.text = std::string(src.substr(i, width));
    out.push_back(t);
    advance(width);
  }
  out.push_back(Token{Tok::End, "end of input", line, column});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, FieldTower field) : tokens_(lex(src)), field_(field) {}

  Form parse() {
    Form f = form();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  FieldTower field_;

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& message, const Token* at = nullptr) const {
    const Token& t = at ? *at : peek();
    throw ParseError(message, t.line, t.column);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what + ", found '" + peek().text + "'");
    next();
  }

  bool is_factor(const Token& t) const {
    return (t.kind == Tok::Ident && t.text != "x" && t.text != "H") || (t.kind == Tok::Int && t.text == "1");
  }

  bool is_repeat() const {
    return peek().kind == Tok::Int && peek(1).kind == Tok::Ident && peek(1).text == "x";
  }

  SquareClass factor() {
    const Token& t = next();
    if (t.kind == Tok::Int) return SquareClass::one(field_);
    if (t.text == "s") {
      if (field_.base() == BaseKind::QuadClosed) {
        fail("no nonsquare 's' over a quadratically closed base", &t);
      }
      return SquareClass::base_nonsquare(field_);
    }
    if (int idx = field_.var_index(t.text)) return SquareClass::uniformizer(field_, idx);
    fail("unknown variable " + t.text, &t);
  }

  // factor { "*" factor }, stopping before a "*" that introduces an atom.
  SquareClass product() {
    SquareClass c = factor();
    while (peek().kind == Tok::Star && is_factor(peek(1)) &&
           !(peek(1).kind == Tok::Int && peek(2).kind == Tok::Ident && peek(2).text == "x")) {
      next();
      c = c * factor();
    }
    return c;
  }

  SquareClass literal() {
    SquareClass c = SquareClass::one(field_);
    if (peek().kind == Tok::Minus) {
      next();
      c = class_of_minus_one(field_);
    }
    if (!is_factor(peek())) fail("expected a square class, found '" + peek().text + "'");
    return c * product();
  }

  std::vector<SquareClass> class_list(Tok close, const char* what) {
    std::vector<SquareClass> out;
    if (peek().kind == close) {
      next();
      return out;
    }
    out.push_back(literal());
    while (peek().kind == Tok::Comma) {
      next();
      out.push_back(literal());
    }
    expect(close, what);
    return out;
  }

  Form form() {
    Form f = term();
    while (peek().kind == Tok::Plus) {
      next();
      f = perp(f, term());
    }
    return f;
  }

  Form term() {
    Form f = atom();
    while (peek().kind == Tok::Star) {
      next();
      f = tensor(f, atom());
    }
    return f;
  }

  Form atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LAngle: {
        next();
        return Form(field_, class_list(Tok::RAngle, "'>'"));
      }
      case Tok::LDouble: {
        next();
        return pfister(PfisterSpec{field_, class_list(Tok::RDouble, "'>>'")});
      }
      case Tok::Minus:
        next();
        return negate(atom());
      case Tok::LParen: {
        next();
        Form f = form();
        expect(Tok::RParen, "')'");
        return f;
      }
      default: break;
    }
    if (t.kind == Tok::Ident && t.text == "H") {
      next();
      return hyperbolic_plane(field_);
    }
    if (is_repeat()) {
      const Token& count = next();
      next();
      if (count.text.size() > 6) fail("repetition count too large", &count);
      const std::size_t k = std::stoul(count.text);
      return repeat(k, atom());
    }
    if (is_factor(t)) {
      SquareClass c = product();
      if (peek().kind != Tok::Star) fail("expected '*' and a form after scalar " + format_class(c));
      next();
      return scale(c, atom());
    }
    fail(t.kind == Tok::End ? std::string("unexpected end of input") : "unexpected '" + t.text + "'");
  }
};

}  // namespace

Form parse_form(std::string_view src, FieldTower field) {
  return Parser(src, field).parse();
}

}  // namespace wittlab
