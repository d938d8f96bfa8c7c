#pragma once

#include <functional>
#include <optional>

#include "mrb/operators.hpp"

namespace mrb {

using BinaryOp = std::function<Vec(const Vec&, const Vec&)>;

//! Bilinear product from structure constants: table[i*dim+j] = e_i . e_j.
struct BilinearTable {
  int dim = 0;
  std::vector<Vec> table;

  BilinearTable() = default;
  explicit BilinearTable(int d) : dim(d), table(static_cast<size_t>(d) * d, Vec(d)) {}
  void set(int i, int j, const Vec& v);
  const Vec& at(int i, int j) const { return table[static_cast<size_t>(i) * dim + j]; }
  Vec operator()(const Vec& x, const Vec& y) const;
};

struct LieAlgebra : BilinearTable {
  using BilinearTable::BilinearTable;
  //! Sets [e_i,e_j] = v and [e_j,e_i] = -v.
  void set_bracket(int i, int j, const Vec& v);
};

struct PreLieAlgebra : BilinearTable {
  using BilinearTable::BilinearTable;
};

struct CommAssocWithDerivation {
  BilinearTable product;
  Matrix D;
  Vec f;
};

struct TraceFunctional {
  Vec f;
  Scalar operator()(const Vec& x) const;
};

Verdict check_jacobi(const LieAlgebra& L);
Verdict check_left_symmetry(const PreLieAlgebra& P);
//! Commutativity, associativity, Leibniz rule for D, and f(Dx.y) = f(x.Dy).
Verdict check_commassoc_derivation(const CommAssocWithDerivation& C);

//! [x,y,z] = f(x)[y,z] + f(y)[z,x] + f(z)[x,y] for an arbitrary bilinear bracket.
ThreeLieAlgebra three_bracket_from(const BinaryOp& br, const TraceFunctional& f, int dim);
ThreeLieAlgebra lie_to_3lie(const LieAlgebra& L, const TraceFunctional& f);

//! Weight-lambda modified Rota-Baxter identity for a bilinear product:
//! R(x)R(y) = R(R(x)y + xR(y)) + lambda xy.
Verdict check_mrb_binary(const BinaryOp& mul, int dim, const Matrix& R, const Scalar& lambda,
                         const std::string& label = "modified Rota-Baxter (binary)");
Verdict check_mrb_on_lie(const LieAlgebra& L, const Matrix& R, const Scalar& lambda);
Verdict check_mrb_on_prelie(const PreLieAlgebra& P, const Matrix& R, const Scalar& lambda);
Verdict check_mrb_on_commassoc(const CommAssocWithDerivation& C, const Matrix& R, const Scalar& lambda);

//! `corrected` carries distinct f(Rx), f(Ry), f(Rz) terms; `literal` repeats the
//! f(Ry)[z,x] term and drops f(Rx)[y,z]. The literal form exists to exhibit the difference.
enum class ResidualForm { corrected, literal };

//! The compatibility residual for a bracket br on the underlying space of the 3-Lie
//! algebra built by three_bracket_from(br, f).
Vec compatibility_residual(const BinaryOp& br, const TraceFunctional& f, const Matrix& R, const Scalar& lambda,
                           const Vec& x, const Vec& y, const Vec& z, ResidualForm form = ResidualForm::corrected);

//! Each evaluates the residual on ordered basis triples after checking its hypotheses.
Verdict lie_compatibility_residual(const LieAlgebra& L, const TraceFunctional& f, const Matrix& R,
                                   const Scalar& lambda, ResidualForm form = ResidualForm::corrected);
Verdict prelie_compatibility_residual(const PreLieAlgebra& P, const TraceFunctional& f, const Matrix& R,
                                      const Scalar& lambda, ResidualForm form = ResidualForm::corrected);
Verdict derivation_compatibility_residual(const CommAssocWithDerivation& C, const Matrix& R, const Scalar& lambda,
                                          ResidualForm form = ResidualForm::corrected);

LieAlgebra prelie_to_lie(const PreLieAlgebra& P);
//! x*y = x.D(y), which is left-symmetric (D(x).y is the right-symmetric opposite).
//! When R is supplied, requires DR = RD.
PreLieAlgebra commassoc_deriv_to_prelie(const CommAssocWithDerivation& C, const std::optional<Matrix>& R = {});
//! Cofactor expansion along the functional row.
ThreeLieAlgebra commassoc_deriv_to_3lie(const CommAssocWithDerivation& C);
//! [x,y]_D = D(x).y - D(y).x, the opposite of the commutator of the pre-Lie product.
LieAlgebra derivation_commutator(const CommAssocWithDerivation& C);

}  // namespace mrb
