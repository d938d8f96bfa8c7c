#pragma once

#include <array>
#include <vector>

#include "mrb/operators.hpp"

namespace mrb {

//! R_t = R + t * direction.
struct LinearDeformation {
  WeightedOperator base;
  Matrix direction;

  Matrix at(const Scalar& t) const { return base.R + t * direction; }
};

//! A wedge vector X (pair coordinates) satisfying the three Nijenhuis-element conditions for base.
class NijenhuisElement {
 public:
  //! Throws PreconditionError naming the failing condition.
  NijenhuisElement(WeightedOperator base, Vec X);

  const WeightedOperator& base() const { return base_; }
  const Vec& X() const { return X_; }

 private:
  WeightedOperator base_;
  Vec X_;
};

//! Coefficients of t^0..t^3 in the modified Rota-Baxter residual of R + tR^ at (x, y, z).
std::array<Vec, 4> deformation_coefficients(const LinearDeformation& d, const Vec& x, const Vec& y, const Vec& z);

//! Coefficientwise check; `where` is "t^k". Throws PreconditionError if the base is not mRB.
Verdict check_linear_deformation(const LinearDeformation& d, Exec exec = Exec::parallel);
//! Independent oracle: the plain mRB check of R + tR^ at t = 1, 2, 3.
Verdict check_linear_deformation_by_specialization(const LinearDeformation& d);

//! True when the t^1 coefficient agrees with the closedness display (and with partial_R
//! whenever the induced algebra exists) on every basis argument and vanishes.
bool deformation_is_cocycle(const LinearDeformation& d);

//! phi_t = id + t ad_X. Multiplicativity of phi_t on the bracket and R2_t phi_t = phi_t R1_t,
//! both coefficientwise. `where` is "multiplicativity t^k" or "intertwining t^k".
Verdict check_equivalence(const LinearDeformation& d1, const LinearDeformation& d2, const Vec& X);

//! `where` is "triple" ([ad x, ad y, ad z] = 0), "mixed" (the three two-ad terms) or
//! "operator" (ad R ad = ad ad R).
Verdict check_nijenhuis_element(const WeightedOperator& w, const Vec& X);

//! R + t d_R(X).
LinearDeformation trivial_deformation_from_nijenhuis(const NijenhuisElement& n);

struct OmegaReport {
  Tensor3 omega;
  //! The t^2 part [R^x,R^y,z] + [x,R^y,R^z] + [R^x,y,R^z] of the bracket induced by R + tR^.
  Tensor3 quadratic;
  //! [.]_{R+tR^} = [.]_R + t omega exactly, i.e. quadratic vanishes.
  bool matches_expansion = false;
  //! Fundamental identity of [.]_R + t omega, coefficientwise in t.
  Verdict fundamental_identity;
};

//! The six-term omega on basis arguments, without preconditions.
Tensor3 omega_tensor(const LinearDeformation& d);
//! Requires a valid deformation and a central derived algebra.
OmegaReport omega_from_direction(const LinearDeformation& d);

//! check_nijenhuis_operator(induced_bracket(w), ad_X).
Verdict check_adX_nijenhuis_on_induced(const NijenhuisElement& n);

//! All nonzero X with coefficients from `values` (odometer order over wedge pairs, first pair
//! most significant) that are Nijenhuis elements. Throws BudgetError past `budget` candidates.
std::vector<Vec> nijenhuis_sweep(const WeightedOperator& w, const std::vector<Scalar>& values, long budget = 100000,
                                 Exec exec = Exec::parallel);
//! Only the wedge-basis vectors e_a ^ e_b.
std::vector<Vec> nijenhuis_basis_sweep(const WeightedOperator& w);

}  // namespace mrb
