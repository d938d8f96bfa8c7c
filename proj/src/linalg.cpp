#include "mrb/linalg.hpp"

#include "mrb/error.hpp"

namespace mrb {

Vec zeros(int n) { return Vec(static_cast<size_t>(n)); }

Vec unit(int n, int i) {
  Vec v(static_cast<size_t>(n));
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (y.size() != x.size()) throw InputError("vector length mismatch");
  if (a.is_zero()) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec operator+(const Vec& x, const Vec& y) {
  Vec r = x;
  axpy(r, 1, y);
  return r;
}

Vec operator-(const Vec& x, const Vec& y) {
  Vec r = x;
  axpy(r, -1, y);
  return r;
}

Vec operator-(const Vec& x) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

Vec operator*(const Scalar& a, const Vec& x) {
  Vec r(x.size());
  if (a.is_zero()) return r;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) r[i] = a * x[i];
  return r;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.r_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.c_) throw InputError("ragged matrix rows");
    for (int j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.c_; ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw InputError("column length mismatch");
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::column(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Matrix::row(int i) const {
  return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_);
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != c_) throw InputError("matrix-vector dimension mismatch");
  Vec y(r_);
  for (int j = 0; j < c_; ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < r_; ++i)
      if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw InputError("matrix product dimension mismatch");
  Matrix p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j)
        if (!o(k, j).is_zero()) p(i, j) += a * o(k, j);
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw InputError("matrix sum dimension mismatch");
  Matrix s = *this;
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw InputError("matrix difference dimension mismatch");
  Matrix s = *this;
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
  return s;
}

Matrix Matrix::operator-() const {
  Matrix s = *this;
  for (auto& x : s.a_) x = -x;
  return s;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.a_) x *= s;
  return r;
}

std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += " ";
      s += m(i, j).str();
    }
  }
  return s + "]";
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    for (int j = c; j < a.cols(); ++j)
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (int j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RankKernel rank_kernel(const Matrix& m) {
  Matrix a = m;
  auto pivots = rref(a);
  RankKernel out;
  out.rank = static_cast<int>(pivots.size());
  std::vector<int> pivot_row(m.cols(), -1);
  for (int i = 0; i < out.rank; ++i) pivot_row[pivots[i]] = i;
  for (int f = 0; f < m.cols(); ++f) {
    if (pivot_row[f] >= 0) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (int i = 0; i < out.rank; ++i) v[pivots[i]] = -a(i, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

int rank(const Matrix& m) {
  Matrix a = m;
  return static_cast<int>(rref(a).size());
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vs, int dim) {
  if (vs.empty()) return {};
  Matrix a(static_cast<int>(vs.size()), dim);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = vs[i][j];
  auto pivots = rref(a);
  std::vector<Vec> out;
  for (size_t i = 0; i < pivots.size(); ++i) out.push_back(a.row(static_cast<int>(i)));
  return out;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  int dim = static_cast<int>(v.size());
  auto with = basis;
  with.push_back(v);
  return span_basis(with, dim).size() == span_basis(basis, dim).size();
}

}  // namespace mrb
