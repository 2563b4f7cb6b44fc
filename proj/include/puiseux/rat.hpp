#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace puiseux {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : q_(v) {}
  Rat(long v) : q_(v) {}
  Rat(const Integer& n) : q_(n) {}
  Rat(const Integer& n, const Integer& d);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p" or "p/q" (optional sign, decimal digits).
  static Rat parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  std::string str() const { return q_.get_str(); }

  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  Rat inverse() const;
  Rat pow(long e) const;
  Integer floor() const;

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer factorial(int n);
Integer binomial(int n, int k);

/// (mu)_k = mu (mu - 1) ... (mu - k + 1); (mu)_0 = 1.
Rat falling_factorial(const Rat& mu, int k);

/// A rational extended by -inf and +inf. Used for inclinations and orders.
class ExtRat {
 public:
  ExtRat() = default;
  ExtRat(const Rat& r) : kind_(Kind::finite), value_(r) {}
  ExtRat(int v) : kind_(Kind::finite), value_(v) {}
  static ExtRat neg_inf() { return ExtRat(Kind::neg_inf); }
  static ExtRat pos_inf() { return ExtRat(Kind::pos_inf); }

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }
  const Rat& value() const;
  std::string str() const;
  static ExtRat parse(std::string_view text);

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  /// inf + finite = inf. Opposite infinities throw.
  friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
  friend ExtRat operator-(const ExtRat& a);

 private:
  enum class Kind { neg_inf = 0, finite = 1, pos_inf = 2 };
  explicit ExtRat(Kind k) : kind_(k) {}
  Kind kind_ = Kind::finite;
  Rat value_;
};

std::ostream& operator<<(std::ostream& os, const ExtRat& r);

}  // namespace puiseux
