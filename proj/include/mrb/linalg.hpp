#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrb/scalar.hpp"

namespace mrb {

using Vec = std::vector<Scalar>;

Vec zeros(int n);
Vec unit(int n, int i);
bool is_zero(const Vec& v);
//! y += a*x
void axpy(Vec& y, const Scalar& a, const Vec& x);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator-(const Vec& x);
Vec operator*(const Scalar& a, const Vec& x);
std::string to_string(const Vec& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix diagonal(const Vec& d);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Vec column(int j) const;
  Vec row(int i) const;
  Vec apply(const Vec& x) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return r_ == c_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

std::string to_string(const Matrix& m);

struct RankKernel {
  int rank = 0;
  std::vector<Vec> kernel;
};

//! Exact Gauss-Jordan elimination; one kernel vector per free column, carrying a 1 there.
RankKernel rank_kernel(const Matrix& m);
int rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
//! Reduced row-echelon basis of the span of the given vectors.
std::vector<Vec> span_basis(const std::vector<Vec>& vs, int dim);
//! Whether v lies in the span of basis (as returned by span_basis).
bool in_span(const std::vector<Vec>& basis, const Vec& v);

}  // namespace mrb
