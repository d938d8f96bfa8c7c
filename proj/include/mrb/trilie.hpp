#pragma once

#include <string>
#include <vector>

#include "mrb/combinatorics.hpp"
#include "mrb/linalg.hpp"
#include "mrb/parallel.hpp"
#include "mrb/verdict.hpp"

namespace mrb {

class ThreeLieAlgebra {
 public:
  //! One nonzero structure constant [e_i,e_j,e_k] with i<j<k.
  struct Term {
    int i, j, k;
    Vec value;
  };

  ThreeLieAlgebra() = default;
  explicit ThreeLieAlgebra(int dim, std::string label = "");
  //! Requires an alternating tensor.
  static ThreeLieAlgebra from_tensor(const Tensor3& t, std::string label = "");

  void set(int i, int j, int k, const Vec& value);

  int dim() const { return d_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }
  const std::vector<std::string>& basis_names() const { return names_; }
  void set_basis_names(std::vector<std::string> names);

  const Vec& on_basis(int i, int j, int k) const { return c_[(static_cast<size_t>(i) * d_ + j) * d_ + k]; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_abelian() const { return terms_.empty(); }
  Tensor3 tensor() const;

  friend bool operator==(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) { return a.d_ == b.d_ && a.c_ == b.c_; }

 private:
  void rebuild_terms();
  int d_ = 0;
  std::string label_;
  std::vector<std::string> names_;
  std::vector<Vec> c_;
  std::vector<Term> terms_;
};

//! Trilinear alternating evaluation for any coefficient ring T that admits
//! T*Scalar, T+T, T-T, T*T and is_zero(T).
template <class T>
std::vector<T> bracket_t(const ThreeLieAlgebra& A, const std::vector<T>& x, const std::vector<T>& y,
                         const std::vector<T>& z) {
  std::vector<T> out(A.dim());
  for (const auto& t : A.terms()) {
    const int a[3] = {t.i, t.j, t.k};
    T det{};
    bool any = false;
    static constexpr int P[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
    for (int s = 0; s < 6; ++s) {
      const T& p = x[a[P[s][0]]];
      const T& q = y[a[P[s][1]]];
      const T& r = z[a[P[s][2]]];
      if (is_zero(p) || is_zero(q) || is_zero(r)) continue;
      T prod = p * q * r;
      if (s < 3) det = any ? det + prod : prod;
      else det = any ? det - prod : -prod;
      any = true;
    }
    if (!any || is_zero(det)) continue;
    for (int c = 0; c < A.dim(); ++c)
      if (!t.value[c].is_zero()) out[c] = out[c] + det * t.value[c];
  }
  return out;
}

Vec bracket(const ThreeLieAlgebra& A, const Vec& x, const Vec& y, const Vec& z);

Verdict check_fundamental_identity(const ThreeLieAlgebra& A, Exec exec = Exec::parallel);

//! rho(e_a ^ e_b) for a<b, indexed by WedgeBasis(dim).
struct Representation {
  ThreeLieAlgebra algebra;
  int dim = 0;
  std::vector<Matrix> rho;

  //! rho(e_a, e_b) for any a, b (antisymmetric, zero on the diagonal).
  Matrix on_basis(int a, int b) const;
  Matrix of(const Vec& x, const Vec& y) const;
  Vec act(const Vec& x, const Vec& y, const Vec& v) const;
};

Representation zero_representation(const ThreeLieAlgebra& A, int dim);
Representation adjoint(const ThreeLieAlgebra& A);
Verdict check_representation(const Representation& r);

struct ActionPair {
  ThreeLieAlgebra acting;
  ThreeLieAlgebra acted;
  Representation rho;
};

Verdict check_action(const ActionPair& p);

struct DerivedAndCenter {
  std::vector<Vec> derived;
  std::vector<Vec> center;
};

DerivedAndCenter derived_and_center(const ThreeLieAlgebra& A);
//! The standing condition that every bracket is central.
bool derived_in_center(const ThreeLieAlgebra& A);

Verdict check_nijenhuis_operator(const ThreeLieAlgebra& A, const Matrix& N);

struct ProductStructureReport {
  Verdict verdict;
  bool involutive = false;
  bool not_plus_minus_identity = false;
  Verdict integrability;
  std::vector<Vec> plus, minus;
  bool plus_subalgebra = false;
  bool minus_subalgebra = false;
};

ProductStructureReport check_product_structure(const ThreeLieAlgebra& A, const Matrix& E);

//! Whether psi is invertible and preserves the bracket on basis triples.
bool is_automorphism(const ThreeLieAlgebra& A, const Matrix& psi);

}  // namespace mrb
