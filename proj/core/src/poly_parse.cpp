#include "confalg/poly_parse.hpp"

#include <cctype>

#include "confalg/error.hpp"

namespace confalg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseScope& scope) : text_(text), scope_(scope) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " +
                     msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Poly power() {
    std::optional<VarId> ident;
    Poly base = atom(ident);
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const std::string digits = integer();
    if (digits.size() > 4) fail("exponent too large");
    const int e = std::stoi(digits);
    if (!negative) return base.pow(static_cast<unsigned>(e));
    if (!ident || scope_.registry->role(*ident) != VarRole::parameter) {
      fail("negative exponents are allowed on parameters only");
    }
    return Poly::term(1, Monomial::var(*ident, -e), *scope_.registry);
  }

  Poly atom(std::optional<VarId>& ident) {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer());
      if (accept('/')) {
        Rational den(integer());
        if (den == 0) fail("zero denominator");
        value /= den;
      }
      return Poly(value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      const VarId id = resolve(name);
      ident = id;
      return Poly::var(id, *scope_.registry);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  VarId resolve(const std::string& name) {
    const VarRegistry& reg = *scope_.registry;
    if (VarRegistry::is_reserved(name)) return *reg.find(name);
    if (scope_.parameters) {
      if (!scope_.parameters->count(name)) fail("undeclared identifier '" + name + "'");
      return scope_.registry->intern(name, VarRole::parameter);
    }
    auto id = reg.find(name);
    if (!id || reg.role(*id) != VarRole::parameter) fail("undeclared identifier '" + name + "'");
    return *id;
  }

  std::string_view text_;
  const ParseScope& scope_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const ParseScope& scope) {
  return Parser(text, scope).parse();
}

}  // namespace confalg
