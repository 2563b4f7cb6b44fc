#include "puiseux/rat.hpp"

#include <cctype>
#include <ostream>

#include "puiseux/error.hpp"

namespace puiseux {

Rat::Rat(const Integer& n, const Integer& d) {
  if (d == 0) throw MathError("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den)) throw MathError("malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (negative) n = -n;
  return Rat(n, d);
}

Rat Rat::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  return Rat(mpq_class(1 / q_));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw MathError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

Integer Rat::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Rat falling_factorial(const Rat& mu, int k) {
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= mu - Rat(i);
  return r;
}

const Rat& ExtRat::value() const {
  if (kind_ != Kind::finite) throw MathError("infinite value has no rational representative");
  return value_;
}

std::string ExtRat::str() const {
  switch (kind_) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "+inf";
    default: return value_.str();
  }
}

ExtRat ExtRat::parse(std::string_view text) {
  if (text == "+inf" || text == "inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtRat(Rat::parse(text));
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != ExtRat::Kind::finite) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
  if (a.is_finite() && b.is_finite()) return ExtRat(a.value_ + b.value_);
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
    throw MathError("undefined sum of opposite infinities");
  return a.is_finite() ? b : a;
}

ExtRat operator-(const ExtRat& a) {
  if (a.is_pos_inf()) return ExtRat::neg_inf();
  if (a.is_neg_inf()) return ExtRat::pos_inf();
  return ExtRat(-a.value_);
}

std::ostream& operator<<(std::ostream& os, const ExtRat& r) { return os << r.str(); }

}  // namespace puiseux
