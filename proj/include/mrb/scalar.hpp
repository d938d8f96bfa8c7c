#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace mrb {

//! Exact element a + b*sqrt(d) of Q(sqrt d). Outside a QuadraticSession b is always 0.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}
  Scalar(long v) : a_(v) {}
  Scalar(const mpq_class& a) : a_(a) {}
  Scalar(const mpq_class& a, const mpq_class& b);

  static Scalar parse(std::string_view text);
  //! sqrt(d) of the active session.
  static Scalar root();

  std::string str() const;

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& surd_part() const { return b_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_one() const { return sgn(b_) == 0 && a_ == 1; }

  Scalar inverse() const;
  //! Exact square root inside the active field, if one exists.
  std::optional<Scalar> sqrt() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

//! Discriminant of the active quadratic session, 0 when arithmetic is purely rational.
long discriminant();

//! Opens Q(sqrt d) for its lifetime. d must be square-free and not 0 or 1.
//! Open it before any parallel region; the discriminant is process-wide.
class QuadraticSession {
 public:
  explicit QuadraticSession(long d);
  ~QuadraticSession();
  QuadraticSession(const QuadraticSession&) = delete;
  QuadraticSession& operator=(const QuadraticSession&) = delete;

 private:
  long previous_;
};

}  // namespace mrb
