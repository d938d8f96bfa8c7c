#pragma once

#include <array>
#include <vector>

#include "mrb/polynomial.hpp"
#include "mrb/trilie.hpp"

namespace mrb {

struct WeightedOperator {
  ThreeLieAlgebra algebra;
  Matrix R;
  Scalar lambda;

  WeightedOperator() = default;
  //! Validates shape and lambda != 0.
  WeightedOperator(ThreeLieAlgebra A, Matrix R_, Scalar lambda_);
};

//! LHS - RHS of the weight-lambda Rota-Baxter identity.
Vec rb_residual(const ThreeLieAlgebra& A, const Matrix& R, const Scalar& lambda, const Vec& x, const Vec& y,
                const Vec& z);
//! LHS - RHS of the modified Rota-Baxter identity.
Vec mrb_residual(const ThreeLieAlgebra& A, const Matrix& R, const Scalar& lambda, const Vec& x, const Vec& y,
                 const Vec& z);

Verdict check_rb(const WeightedOperator& w);
Verdict check_mrb_absolute(const WeightedOperator& w);
Verdict check_mrb_absolute(const ThreeLieAlgebra& A, const Matrix& R, const Scalar& lambda);

//! Relative data: rho is an action of g on h, zeta an action of h on g, T: h -> g.
struct RelativeMRBDatum {
  ThreeLieAlgebra h;
  ThreeLieAlgebra g;
  Representation rho;
  Representation zeta;
  Matrix T;
  Scalar lambda;
};

//! The two action axioms (reported, not enforced by check_mrb_relative).
Verdict check_relative_actions(const RelativeMRBDatum& d);
Vec mrb_relative_residual(const RelativeMRBDatum& d, const Vec& u, const Vec& v, const Vec& w);
Verdict check_mrb_relative(const RelativeMRBDatum& d);
//! h = g, rho = zeta = ad, T = R.
RelativeMRBDatum fold_absolute(const WeightedOperator& w);

bool mrb_negation_closure(const WeightedOperator& w);
WeightedOperator mrb_conjugation(const WeightedOperator& w, const Matrix& psi);
//! (2R + lambda id, lambda^2)
WeightedOperator rb_to_mrb(const WeightedOperator& w);

//! [x,y,z]_R = [Rx,Ry,z] + [x,Ry,Rz] + [Rx,y,Rz] + lambda [x,y,z], without preconditions.
Vec induced_bracket_value(const WeightedOperator& w, const Vec& x, const Vec& y, const Vec& z);
//! rho_R(x,y)z = [Rx,Ry,z] - R([Rx,y,z] + [x,Ry,z]) + lambda [x,y,z], without preconditions.
Vec rho_R_value(const WeightedOperator& w, const Vec& x, const Vec& y, const Vec& z);
//! Throws PreconditionError unless the derived algebra is central and R is mRB.
void require_induced_preconditions(const WeightedOperator& w);
ThreeLieAlgebra induced_bracket(const WeightedOperator& w);
Representation rho_R(const WeightedOperator& w);

enum class SearchShape { full, diagonal, upper_triangular };

//! Every matrix of the given shape with entries from values that is mRB; odometer order,
//! first free entry most significant, values in the given order.
std::vector<Matrix> search_mrb(const ThreeLieAlgebra& A, const Scalar& lambda, const std::vector<Scalar>& values,
                               SearchShape shape, long budget = 100000, Exec exec = Exec::parallel);

struct PolyCondition {
  std::array<int, 3> triple;
  int coordinate;
  Poly poly;
};

//! Generic-matrix expansion of the mRB identity; variable i*n+j is a_{i+1,j+1}.
//! One monic polynomial per nonzero (basis triple, coordinate).
std::vector<PolyCondition> mrb_polynomial_conditions(const ThreeLieAlgebra& A, const Scalar& lambda);
//! Values of the matrix entries in variable order.
Vec matrix_assignment(const Matrix& R);

}  // namespace mrb
