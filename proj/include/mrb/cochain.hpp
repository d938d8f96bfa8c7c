#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mrb/combinatorics.hpp"
#include "mrb/linalg.hpp"

namespace mrb {

using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse(const Vec& v);
SparseVec sparse_unit(int i);

//! Multilinear map (wedge^2 U)^{slots} (x) U -> V, dim U = in_dim, dim V = out_dim.
//! Flat layout: ((p_1*P + ... + p_s)*in_dim + k)*out_dim + c with P = C(in_dim, 2).
//! Under the usual numbering an element with s slots lies in C^{s+1}.
class Cochain {
 public:
  Cochain() = default;
  Cochain(int in_dim, int out_dim, int slots);
  static Cochain from_matrix(const Matrix& m);

  int in_dim() const { return d_; }
  int out_dim() const { return m_; }
  int slots() const { return s_; }
  const WedgeBasis& wedges() const { return wb_; }
  long tuple_count() const { return tuples_; }
  long size() const { return tuples_ * m_; }

  long tuple_index(std::span<const int> pairs, int last) const;
  //! Inverse of tuple_index: fills pairs and returns the final index.
  int decode(long tuple, std::vector<int>& pairs) const;

  Scalar& at(long tuple, int c) { return data_[static_cast<size_t>(tuple) * m_ + c]; }
  const Scalar& at(long tuple, int c) const { return data_[static_cast<size_t>(tuple) * m_ + c]; }
  Vec value(long tuple) const;
  void set_value(long tuple, const Vec& v);
  //! Entries in flat order.
  const std::vector<Scalar>& flat() const { return data_; }
  std::vector<Scalar>& flat() { return data_; }

  //! out += coef * f(wedges..., last), each wedge given in pair coordinates.
  void accumulate(std::span<const SparseVec> wedge_args, const SparseVec& last, const Scalar& coef, Vec& out) const;
  Vec eval(std::span<const SparseVec> wedge_args, const SparseVec& last) const;
  Vec eval_basis(std::span<const int> pairs, int last) const;
  //! Zero-slot cochains as matrices and back.
  Matrix as_matrix() const;

  bool is_zero() const;
  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& s, Cochain a);
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.d_ == b.d_ && a.m_ == b.m_ && a.s_ == b.s_ && a.data_ == b.data_;
  }

 private:
  int d_ = 0, m_ = 0, s_ = 0;
  WedgeBasis wb_{0};
  long tuples_ = 0;
  std::vector<Scalar> data_;
};

//! Sparse wedge x^y in pair coordinates, for sparse x, y.
SparseVec sparse_wedge(const WedgeBasis& wb, const SparseVec& x, const SparseVec& y);

}  // namespace mrb
