#include "puiseux/parser.hpp"

#include <cctype>
#include <optional>

#include "puiseux/error.hpp"

namespace puiseux {
namespace {

constexpr int kMaxOrder = 9;

struct Pos {
  std::size_t line = 1, column = 1;
};

class Parser {
 public:
  // `var` is the name of the independent variable; y's are allowed only with allow_y.
  Parser(std::string_view text, char var, bool allow_y) : text_(text), var_(var), allow_y_(allow_y) {}

  DiffPoly parse() {
    skip_space();
    if (at_end()) fail("empty input");
    DiffPoly f = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return f;
  }

  int max_y() const { return max_y_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] static void fail_at(const std::string& msg, Pos p) { throw ParseError(msg, p.line, p.column); }

  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[i_]; }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static bool is_constant(const DiffPoly& f) {
    if (f.is_zero()) return true;
    const MonomialKey& key = f.terms().begin()->first;
    return f.size() == 1 && key.xexp.is_zero() && key.total_degree() == 0;
  }

  static Rat constant_value(const DiffPoly& f) {
    return f.is_zero() ? Rat(0) : f.terms().begin()->second.rational_value();
  }

  // A single x^r with coefficient 1.
  static std::optional<Rat> bare_x_power(const DiffPoly& f) {
    if (f.size() != 1) return std::nullopt;
    const auto& [key, c] = *f.terms().begin();
    if (key.total_degree() != 0 || !(c == AlgNum::one(f.field()))) return std::nullopt;
    return key.xexp;
  }

  DiffPoly constant(const Rat& r) const { return DiffPoly::constant(AlgNum(NumberField::rational(), r), kMaxOrder); }

  DiffPoly expr() {
    DiffPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  DiffPoly term() {
    DiffPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        skip_space();
        Pos at = pos_;
        DiffPoly d = unary();
        if (!is_constant(d)) fail_at("division by a non-constant", at);
        Rat v = constant_value(d);
        if (v.is_zero()) fail_at("division by zero", at);
        acc = acc.scaled(AlgNum(NumberField::rational(), Rat(1) / v));
      } else {
        return acc;
      }
    }
  }

  DiffPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  // Exponent after '^': an integer, or a parenthesized signed fraction.
  Rat exponent() {
    skip_space();
    if (accept('(')) {
      Rat r = signed_integer();
      if (accept('/')) {
        skip_space();
        Pos at = pos_;
        Integer d = digits();
        if (d == 0) fail_at("zero denominator", at);
        r /= Rat(d);
      }
      expect(')');
      return r;
    }
    return signed_integer();
  }

  Rat signed_integer() {
    bool neg = false;
    while (accept('-')) neg = !neg;
    skip_space();
    Rat r(digits());
    return neg ? -r : r;
  }

  Integer digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      s += peek();
      advance();
    }
    return Integer(s);
  }

  DiffPoly power() {
    skip_space();
    Pos base_at = pos_;
    bool is_y = false;
    DiffPoly base = atom(is_y);
    if (!accept('^')) return base;
    skip_space();
    Pos exp_at = pos_;
    Rat e = exponent();
    if (is_y) {
      if (!e.is_integer() || e.sign() < 0) fail_at("exponent of y must be a nonnegative integer", exp_at);
    }
    if (auto r = bare_x_power(base)) return DiffPoly::x_power(AlgNum::one(NumberField::rational()), *r * e, kMaxOrder);
    if (!e.is_integer()) fail_at("fractional power of a compound expression", exp_at);
    if (is_constant(base)) {
      Rat v = constant_value(base);
      if (v.is_zero() && e.sign() < 0) fail_at("zero to a negative power", base_at);
      return constant(e.sign() >= 0 ? v.pow(static_cast<long>(e.num().get_si()))
                                    : (Rat(1) / v).pow(static_cast<long>(-e.num().get_si())));
    }
    if (e.sign() < 0) fail_at("negative power of a non-monomial", exp_at);
    if (e.num() > 64) fail_at("exponent too large", exp_at);
    return base.pow(static_cast<int>(e.num().get_si()));
  }

  DiffPoly atom(bool& is_y) {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Rat(digits()));
    if (c == '(') {
      advance();
      DiffPoly inner = expr();
      expect(')');
      return inner;
    }
    if (c == var_) {
      advance();
      return DiffPoly::x_power(AlgNum::one(NumberField::rational()), Rat(1), kMaxOrder);
    }
    if (c == 'y' && allow_y_) {
      Pos at = pos_;
      advance();
      int j = 0;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Integer n = digits();
        if (n > kMaxOrder) fail_at("derivative index above " + std::to_string(kMaxOrder), at);
        j = static_cast<int>(n.get_si());
      } else {
        while (peek() == '\'') {
          advance();
          ++j;
        }
        if (j > kMaxOrder) fail_at("derivative index above " + std::to_string(kMaxOrder), at);
      }
      max_y_ = std::max(max_y_, j);
      is_y = true;
      return DiffPoly::y(NumberField::rational(), j, kMaxOrder);
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  char var_;
  bool allow_y_;
  std::size_t i_ = 0;
  Pos pos_;
  int max_y_ = 0;
};

}  // namespace

DiffPoly parse_diffpoly(std::string_view text) {
  Parser p(text, 'x', true);
  DiffPoly wide = p.parse();
  if (wide.is_zero()) throw ParseError("the polynomial is zero", 1, 1);
  DiffPoly f(NumberField::rational(), p.max_y());
  for (const auto& [key, c] : wide.terms()) {
    std::vector<int> alpha(key.alpha.begin(), key.alpha.begin() + std::min<std::ptrdiff_t>(p.max_y() + 1, static_cast<std::ptrdiff_t>(key.alpha.size())));
    f.add_term(c, key.xexp, alpha);
  }
  return f;
}

QPoly parse_qpoly(std::string_view text) {
  char var = 'Z';
  for (char c : text)
    if (std::isalpha(static_cast<unsigned char>(c))) {
      var = c;
      break;
    }
  for (std::size_t i = 0; i < text.size(); ++i)
    if (std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != var)
      throw ParseError("a univariate polynomial uses one variable", 1, i + 1);
  Parser p(text, var, false);
  DiffPoly f = p.parse();
  std::vector<Rat> coeffs;
  for (const auto& [key, c] : f.terms()) {
    if (!key.xexp.is_integer() || key.xexp.sign() < 0)
      throw ParseError("exponents of a polynomial must be nonnegative integers", 1, 1);
    auto i = static_cast<std::size_t>(key.xexp.num().get_si());
    if (coeffs.size() <= i) coeffs.resize(i + 1);
    coeffs[i] = c.rational_value();
  }
  return QPoly(coeffs);
}

ParamValue parse_param_value(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::string_view t = b == std::string_view::npos ? std::string_view{} : text.substr(b);
  if (t.substr(0, 5) == "root(") {
    std::size_t close = t.rfind(')');
    if (close == std::string_view::npos || close < 5) throw ParseError("expected ')'", 1, text.size() + 1);
    QPoly p = parse_qpoly(t.substr(5, close - 5));
    if (p.degree() < 1) throw ParseError("root() needs a nonconstant polynomial", 1, b + 6);
    return ParamValue{std::nullopt, p};
  }
  Parser p(text, '\0', false);
  DiffPoly f = p.parse();
  if (f.is_zero()) return ParamValue{Rat(0), QPoly()};
  if (f.size() != 1 || !f.terms().begin()->first.xexp.is_zero()) throw ParseError("expected a rational constant", 1, 1);
  return ParamValue{f.terms().begin()->second.rational_value(), QPoly()};
}

std::string serialize(const DiffPoly& f) {
  if (f.field()->degree() != 1) throw MathError("only polynomials over Q serialize to the input grammar");
  return f.str();
}

}  // namespace puiseux
