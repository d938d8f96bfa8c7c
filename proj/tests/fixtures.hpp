#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "mrb/cochain.hpp"
#include "mrb/operators.hpp"

namespace fx {

using namespace mrb;

inline Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

inline Matrix diag(std::initializer_list<long> xs) { return Matrix::diagonal(vec(xs)); }

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> rs;
  for (auto r : rows) rs.push_back(vec(r));
  return Matrix::from_rows(rs);
}

//! e_i with a 1-based index, matching how the algebras below are written.
inline Vec e(int n, int i) { return unit(n, i - 1); }

//! [e1,e2,e3] = e1.
inline ThreeLieAlgebra trilie3() {
  ThreeLieAlgebra A(3, "trilie3");
  A.set(0, 1, 2, e(3, 1));
  return A;
}

//! [e2,e3,e4] = e1.
inline ThreeLieAlgebra heisenberg4() {
  ThreeLieAlgebra A(4, "heisenberg4");
  A.set(1, 2, 3, e(4, 1));
  return A;
}

//! The simple 4-dimensional 3-Lie algebra: [e_i,e_j,e_k] = sum_l eps_{ijkl} e_l.
inline ThreeLieAlgebra simple4() {
  ThreeLieAlgebra A(4, "simple4");
  A.set(0, 1, 2, e(4, 4));
  A.set(0, 1, 3, -e(4, 3));
  A.set(0, 2, 3, e(4, 2));
  A.set(1, 2, 3, -e(4, 1));
  return A;
}

inline ThreeLieAlgebra abelian(int n) { return ThreeLieAlgebra(n, "abelian"); }

//! Alternating tensor with each increasing-triple coordinate drawn from `values`.
inline ThreeLieAlgebra random_tensor(std::mt19937& g, int n, const std::vector<long>& values, int sparsity = 1) {
  ThreeLieAlgebra A(n);
  std::uniform_int_distribution<size_t> pick(0, values.size() - 1);
  std::uniform_int_distribution<int> keep(0, sparsity - 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec v(n);
        for (auto& x : v)
          if (keep(g) == 0) x = Scalar(values[pick(g)]);
        A.set(i, j, k, v);
      }
  return A;
}

inline Matrix random_matrix(std::mt19937& g, int r, int c, int lo = -2, int hi = 2) {
  Matrix m(r, c);
  std::uniform_int_distribution<int> u(lo, hi);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Scalar(u(g));
  return m;
}

inline Cochain random_cochain(std::mt19937& g, int in, int out, int slots, int lo = -2, int hi = 2) {
  Cochain c(in, out, slots);
  std::uniform_int_distribution<int> u(lo, hi);
  for (auto& x : c.flat()) x = Scalar(u(g));
  return c;
}

//! Every diagonal matrix with entries from values, in odometer order.
inline std::vector<Matrix> all_diagonals(int n, const std::vector<long>& values) {
  std::vector<Matrix> out;
  std::vector<size_t> idx(n, 0);
  while (true) {
    Vec d(n);
    for (int i = 0; i < n; ++i) d[i] = Scalar(values[idx[i]]);
    out.push_back(Matrix::diagonal(d));
    int p = n - 1;
    while (p >= 0 && ++idx[p] == values.size()) idx[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

#ifdef MRB_DATA_DIR
inline std::string data(const std::string& name) { return std::string(MRB_DATA_DIR) + "/" + name; }
#endif

}  // namespace fx
