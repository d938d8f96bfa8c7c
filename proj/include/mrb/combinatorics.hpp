#pragma once

#include <span>
#include <utility>
#include <vector>

#include "mrb/linalg.hpp"

namespace mrb {

//! perm[t] is the 0-based image of position t.
struct Shuffle {
  std::vector<int> perm;
  int sign;
};

//! All (p,q)-shuffles, first block chosen in lexicographic order.
std::vector<Shuffle> shuffles(int p, int q);
int permutation_sign(std::span<const int> perm);
long binomial(int n, int k);

//! Pairs i<j of an n-element basis, numbered lexicographically.
class WedgeBasis {
 public:
  explicit WedgeBasis(int n);
  int n() const { return n_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  int index(int i, int j) const { return idx_[static_cast<size_t>(i) * n_ + j]; }
  std::pair<int, int> pair(int p) const { return pairs_[p]; }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> idx_;
};

//! Wedge of two vectors in pair coordinates: (a^b)_{ij} = a_i b_j - a_j b_i.
Vec wedge(const WedgeBasis& wb, const Vec& a, const Vec& b);

//! n x n x n array of m-vectors, entry (i,j,k,c) at ((i*n+j)*n+k)*m+c.
struct Tensor3 {
  int n = 0;
  int m = 1;
  std::vector<Scalar> v;

  Tensor3() = default;
  Tensor3(int n_, int m_) : n(n_), m(m_), v(static_cast<size_t>(n_) * n_ * n_ * m_) {}
  Scalar& at(int i, int j, int k, int c = 0) { return v[((static_cast<size_t>(i) * n + j) * n + k) * m + c]; }
  const Scalar& at(int i, int j, int k, int c = 0) const {
    return v[((static_cast<size_t>(i) * n + j) * n + k) * m + c];
  }
  bool is_alternating() const;
  friend bool operator==(const Tensor3&, const Tensor3&) = default;
};

//! Projection onto alternating tensors: (1/6) sum of sign(s) t(s(i,j,k)).
Tensor3 antisymmetrize3(const Tensor3& t);
//! Alternating tensor agreeing with t on strictly increasing triples.
Tensor3 extend_alternating(const Tensor3& t);

}  // namespace mrb
