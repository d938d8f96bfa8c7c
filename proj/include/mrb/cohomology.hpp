#pragma once

#include <vector>

#include "mrb/cochain.hpp"
#include "mrb/operators.hpp"

namespace mrb {

//! The generic coboundary with coefficients in r; f must have in_dim = dim g and out_dim = r.dim.
Cochain coboundary_3lie(const Representation& r, const Cochain& f);
//! Matrix of the coboundary on cochains with `slots` wedge slots, columns in flat order.
Matrix coboundary_matrix(const Representation& r, int slots, Exec exec = Exec::parallel);

//! Coboundary of the induced algebra with coefficients rho_R.
Cochain partial_R(const WeightedOperator& w, const Cochain& f);
//! d_R(X)x = R[X,x] - [X,Rx] with [X,x] = ad_X(x); X in wedge-pair coordinates.
Matrix d_R(const WeightedOperator& w, const Vec& X);
//! Matrix of ad_X.
Matrix ad_wedge(const ThreeLieAlgebra& A, const Vec& X);

//! LHS - RHS of the explicit closedness condition for a linear map F, at (x, y, z).
Vec closedness_display(const WeightedOperator& w, const Matrix& F, const Vec& x, const Vec& y, const Vec& z);

//! Degree 1 is g^g; degree n >= 2 holds cochains with n-2 wedge slots.
class OperatorComplex {
 public:
  explicit OperatorComplex(const WeightedOperator& w, long budget = 20000);

  const WeightedOperator& op() const { return w_; }
  const ThreeLieAlgebra& induced() const { return rho_.algebra; }
  const Representation& rho() const { return rho_; }
  long dim(int n) const;
  //! D_R on degree n as an explicit matrix (dim(n+1) x dim(n)).
  Matrix differential(int n, Exec exec = Exec::parallel) const;

 private:
  WeightedOperator w_;
  Representation rho_;
  long budget_;
};

struct CohomologyRow {
  int n;
  long dim_c, dim_z, dim_b, dim_h;
};

std::vector<CohomologyRow> cohomology_dims(const WeightedOperator& w, int max_degree, long budget = 20000,
                                           Exec exec = Exec::parallel);

}  // namespace mrb
