#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mrb/cochain.hpp"
#include "mrb/operators.hpp"

namespace mrb {

// Cochains here are Cochain objects with in_dim == out_dim, read as elements of
// C(E, E) with graded degree equal to the slot count.

//! Circle product P o Q; result has p + q slots.
Cochain circle_product(const Cochain& P, const Cochain& Q, Exec exec = Exec::parallel);
//! [P, Q] = P o Q - (-1)^{pq} Q o P.
Cochain graded_bracket(const Cochain& P, const Cochain& Q, Exec exec = Exec::parallel);

//! E = g (+) h, g first.
struct SumSpace {
  int g = 0;
  int h = 0;
  int dim() const { return g + h; }
  bool in_h(int e) const { return e >= g; }
};

//! The same bracket restricted to the abelian block (inputs in h, output in g); zero elsewhere.
Cochain projected_bracket(const SumSpace& sp, const Cochain& P, const Cochain& Q, Exec exec = Exec::parallel);

//! mu(x ^ y, z) = [x, y, z].
Cochain bracket_cochain(const ThreeLieAlgebra& A);
//! Inverse of bracket_cochain for one-slot cochains that are alternating in all three arguments.
std::optional<ThreeLieAlgebra> cochain_bracket(const Cochain& c);

//! Zeroes everything outside the abelian block.
Cochain project_abelian(const SumSpace& sp, const Cochain& c);
//! Compact form (in h, out g) of the abelian block.
Cochain abelian_part(const SumSpace& sp, const Cochain& c);
//! theta: in_dim h, out_dim g, placed into C(E, E).
Cochain embed_abelian(const SumSpace& sp, const Cochain& theta);
//! T: h -> g as a g x h matrix.
Cochain embed_operator(const SumSpace& sp, const Matrix& T);

//! The four pieces of a degree-one element: pi on g, rho of g on h, mu on h, zeta of h on g.
struct DeltaParts {
  ThreeLieAlgebra pi;
  Representation rho;
  ThreeLieAlgebra mu;
  Representation zeta;
};

//! delta = pi + rho + w (mu + zeta), alternating on E.
Cochain assemble_delta(const DeltaParts& parts, const Scalar& w = Scalar(1));
//! Throws InputError unless delta has one slot, is alternating and maps each input type to
//! its component (ggg, ghh -> g; ggh, hhh -> h).
DeltaParts decompose_delta(const SumSpace& sp, const Cochain& delta);

struct PairReport {
  //! [delta, delta] = 0, equivalently the fundamental identity of delta on E.
  bool bracket_vanishes = false;
  Verdict sum_identity;
  Verdict pi_identity, mu_identity;
  Verdict rho_action, zeta_action;
};

PairReport relative_pair_report(const DeltaParts& parts, Exec exec = Exec::parallel);

//! Parity embedding of C(g, g) into C(g (+) g', g (+) g'): a leg in g' is a copy of g, and the
//! value lands in g' exactly when an odd number of legs do. Each pair of g' legs contributes a
//! factor s2 (so s2 = 1 is the plain embedding).
Cochain nu(const Cochain& f, const Scalar& s2 = Scalar(1));
//! Restriction to g-legs, when c is in the image of nu.
std::optional<Cochain> nu_inverse(const Cochain& c, const Scalar& s2 = Scalar(1));

//! Elements of the subspace whose g-valued part vanishes on any input with an h leg.
bool in_h_subspace(const SumSpace& sp, const Cochain& c);
//! Inclusion; throws InputError outside the subspace.
Cochain iota(const SumSpace& sp, const Cochain& c);

//! Homogeneous input of the L-infinity[1] algebra V'[1] (+) a.
struct LTerm {
  enum Kind { shifted, abelian } kind;
  Cochain c;

  int degree() const { return kind == shifted ? c.slots() - 1 : c.slots(); }
  static LTerm V(Cochain c) { return {shifted, std::move(c)}; }
  static LTerm A(Cochain c) { return {abelian, std::move(c)}; }
};

//! Sum of homogeneous components in each summand.
struct LValue {
  std::vector<Cochain> shifted;
  std::vector<Cochain> abelian;

  bool is_zero() const;
  void add(const LValue& o, const Scalar& coef = Scalar(1));
  //! Component with the given slot count (zero cochain on E when absent).
  Cochain shifted_part(int slots, int dim) const;
  Cochain abelian_part(int slots, int dim) const;
};

//! Derived-bracket operations of a V-data (C(E,E), a, P, Delta) on V'[1] (+) a.
class DerivedLinf {
 public:
  explicit DerivedLinf(SumSpace sp, std::optional<Cochain> Delta = std::nullopt, Exec exec = Exec::parallel);

  const SumSpace& space() const { return sp_; }
  bool has_delta() const { return Delta_.has_value(); }
  //! l_k on homogeneous inputs, with Koszul signs for the reordering.
  LValue l(std::span<const LTerm> xs) const;
  //! l_k evaluated on a multilinear expansion: inputs are sums of homogeneous terms.
  LValue l_expanded(std::span<const std::vector<LTerm>> xs) const;
  //! Largest k for which l_k(alpha^k) can be nonzero.
  int arity_bound(std::span<const LTerm> alpha) const;

 private:
  SumSpace sp_;
  std::optional<Cochain> Delta_;
  Exec exec_;
};

struct MCReport {
  bool ok = false;
  //! (1/k!) l_k(alpha^k) for k = 1..terms.size().
  std::vector<LValue> terms;
  LValue total;
  //! P[delta, T] and P[[[delta, T], T], T] in compact form.
  Cochain linear, cubic;
  //! Closed forms of the two displays; cubic equals 6 times its closed form.
  Cochain linear_closed, cubic_closed;
  bool closed_forms_agree = false;
};

//! Sum over k of (1/k!) l_k(alpha^k), evaluated up to the arity bound.
std::vector<LValue> mc_terms(const DerivedLinf& L, std::span<const LTerm> alpha);

//! alpha = (delta[1], T) with delta = pi + rho + lambda (mu + zeta) on g (+) h.
MCReport mc_check_relative_modified(const RelativeMRBDatum& d, Exec exec = Exec::parallel);
//! alpha = (nu(pi)[1], lambda^{-1/2} T); throws PreconditionError when lambda has no square root
//! in the active field.
MCReport mc_check_absolute(const WeightedOperator& w, Exec exec = Exec::parallel);
//! alpha = (iota(pi + rho + lambda mu)[1], T); zeta is ignored.
MCReport mc_check_relative_rb(const RelativeMRBDatum& d, Exec exec = Exec::parallel);

//! The L-infinity[1] algebra twisted by a Maurer-Cartan element alpha.
class TwistedLinf {
 public:
  //! Throws PreconditionError when alpha is not Maurer-Cartan.
  TwistedLinf(DerivedLinf L, std::vector<LTerm> alpha);

  const DerivedLinf& base() const { return L_; }
  //! l_n^alpha(xs) = sum_i (1/i!) l_{n+i}(alpha^i, xs).
  LValue l(std::span<const LTerm> xs) const;
  //! l_1^alpha on an abelian element theta (compact form, in h, out g).
  Cochain differential_abelian(const Cochain& theta) const;
  //! Matrix of l_1^alpha from compact abelian cochains with `slots` slots to slots + 1.
  Matrix differential_matrix(int slots) const;

 private:
  DerivedLinf L_;
  std::vector<LTerm> alpha_;
  std::vector<Cochain> chain_;  // D_T^j of the shifted part of alpha, divided by j!
};

//! alpha for the absolute case on g (+) g'; lambda must have a square root.
std::vector<LTerm> absolute_mc_element(const WeightedOperator& w);

}  // namespace mrb
