#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mrb/linalg.hpp"

namespace mrb {

using Monomial = std::vector<std::uint8_t>;

//! Graded lexicographic order, largest first.
struct GrLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

//! Sparse multivariate polynomial with Scalar coefficients.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GrLexGreater>;

  Poly() = default;
  explicit Poly(int nvars) : n_(nvars) {}
  static Poly constant(int nvars, const Scalar& c);
  static Poly variable(int nvars, int v);

  int nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;

  //! Divides by the leading coefficient; zero stays zero.
  Poly monic() const;
  Scalar evaluate(const Vec& values) const;
  std::string str(const std::function<std::string(int)>& name) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Scalar& s) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void add_term(const Monomial& m, const Scalar& c);
  int n_ = 0;
  Terms t_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

//! Name "a<i><j>" (1-based) for the entry variable i*n+j of an n x n matrix.
std::string matrix_entry_name(int n, int v);

}  // namespace mrb
