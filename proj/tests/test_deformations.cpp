#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mrb/cohomology.hpp"
#include "mrb/deformations.hpp"
#include "mrb/error.hpp"

using namespace mrb;
using fx::e;

namespace {

Vec br(const ThreeLieAlgebra& A, const Vec& x, const Vec& y, const Vec& z) { return bracket(A, x, y, z); }

WeightedOperator example_op() { return WeightedOperator(fx::heisenberg4(), fx::diag({1, 1, -1, -1}), Scalar(1)); }

// LHS - RHS of the modified Rota-Baxter identity for an arbitrary operator S.
Vec mrb_defect(const ThreeLieAlgebra& A, const Matrix& S, const Scalar& l, const Vec& x, const Vec& y, const Vec& z) {
  const Vec Sx = S.apply(x), Sy = S.apply(y), Sz = S.apply(z);
  Vec rhs = S.apply(br(A, Sx, Sy, z) + br(A, x, Sy, Sz) + br(A, Sx, y, Sz) + l * br(A, x, y, z));
  rhs = rhs - l * (br(A, Sx, y, z) + br(A, x, Sy, z) + br(A, x, y, Sz));
  return br(A, Sx, Sy, Sz) - rhs;
}

// Coefficients of the cubic p(t) from its values at t = 0, 1, 2, 3 (Newton forward differences).
std::array<Vec, 4> interpolate_cubic(const std::array<Vec, 4>& v) {
  const Vec d1 = v[1] - v[0], d2 = v[2] - Scalar(2) * v[1] + v[0], d3 = v[3] - Scalar(3) * v[2] + Scalar(3) * v[1] - v[0];
  // p(t) = v0 + t d1 + t(t-1)/2 d2 + t(t-1)(t-2)/6 d3
  const Scalar half(mpq_class(1, 2)), sixth(mpq_class(1, 6));
  std::array<Vec, 4> c;
  c[0] = v[0];
  c[1] = d1 - half * d2 + Scalar(2) * sixth * d3;
  c[2] = half * d2 - Scalar(3) * sixth * d3;
  c[3] = sixth * d3;
  return c;
}

std::array<Vec, 4> coefficients_by_interpolation(const LinearDeformation& d, const Vec& x, const Vec& y, const Vec& z) {
  std::array<Vec, 4> v;
  for (int t = 0; t <= 3; ++t) v[t] = mrb_defect(d.base.algebra, d.at(Scalar(t)), d.base.lambda, x, y, z);
  return interpolate_cubic(v);
}

// The three coefficient equations written out directly, each as LHS - RHS.
std::array<Vec, 3> direct_equations(const LinearDeformation& d, const Vec& x, const Vec& y, const Vec& z) {
  const auto& A = d.base.algebra;
  const Matrix &R = d.base.R, &H = d.direction;
  const Scalar& l = d.base.lambda;
  const Vec Rx = R.apply(x), Ry = R.apply(y), Rz = R.apply(z);
  const Vec Hx = H.apply(x), Hy = H.apply(y), Hz = H.apply(z);
  auto b = [&](const Vec& p, const Vec& q, const Vec& r) { return br(A, p, q, r); };
  const Vec mixed = b(Hx, Ry, z) + b(Rx, Hy, z) + b(x, Hy, Rz) + b(x, Ry, Hz) + b(Rx, y, Hz) + b(Hx, y, Rz);
  std::array<Vec, 3> out;
  out[0] = b(Hx, Ry, Rz) + b(Rx, Hy, Rz) + b(Rx, Ry, Hz) - R.apply(mixed) -
           H.apply(b(Rx, Ry, z) + b(x, Ry, Rz) + b(Rx, y, Rz) + l * b(x, y, z)) +
           l * (b(Hx, y, z) + b(x, Hy, z) + b(x, y, Hz));
  out[1] = b(Rx, Hy, Hz) + b(Hx, Hy, Rz) + b(Hx, Ry, Hz) - H.apply(mixed) -
           R.apply(b(Hx, Hy, z) + b(x, Hy, Hz) + b(Hx, y, Hz));
  out[2] = b(Hx, Hy, Hz) - H.apply(b(Hx, Hy, z) + b(x, Hy, Hz) + b(Hx, y, Hz));
  return out;
}

bool valid_by_interpolation(const LinearDeformation& d) {
  const int n = d.base.algebra.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto c = coefficients_by_interpolation(d, unit(n, i), unit(n, j), unit(n, k));
        for (int p = 1; p <= 3; ++p)
          if (!is_zero(c[p])) return false;
      }
  return true;
}

// The three Nijenhuis-element equations on every ordered triple, with [X, u] = ad_X(u).
bool nijenhuis_element_oracle(const WeightedOperator& w, const Vec& X) {
  const auto& A = w.algebra;
  const int n = A.dim();
  const WedgeBasis wb(n);
  auto adX = [&](const Vec& u) {
    Vec out(n);
    for (int p = 0; p < wb.size(); ++p)
      if (!X[p].is_zero()) {
        auto [a, b] = wb.pair(p);
        axpy(out, X[p], br(A, unit(n, a), unit(n, b), u));
      }
    return out;
  };
  for (int i = 0; i < n; ++i) {
    const Vec x = unit(n, i);
    if (adX(w.R.apply(adX(x))) != adX(adX(w.R.apply(x)))) return false;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec y = unit(n, j), z = unit(n, k);
        if (!is_zero(br(A, adX(x), adX(y), adX(z)))) return false;
        if (!is_zero(br(A, x, adX(y), adX(z)) + br(A, adX(x), adX(y), z) + br(A, adX(x), y, adX(z)))) return false;
      }
  }
  return true;
}

// phi_t = id + t ad_X specialised at t = 1..4; both conditions are cubic in t and vanish at t = 0.
bool equivalent_by_specialization(const LinearDeformation& d1, const LinearDeformation& d2, const Vec& X) {
  const auto& A = d1.base.algebra;
  const int n = A.dim();
  const Matrix ad = ad_wedge(A, X);
  for (int t = 1; t <= 4; ++t) {
    const Matrix phi = Matrix::identity(n) + Scalar(t) * ad;
    if (d2.at(Scalar(t)) * phi != phi * d1.at(Scalar(t))) return false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
          if (phi.apply(br(A, x, y, z)) != br(A, phi.apply(x), phi.apply(y), phi.apply(z))) return false;
        }
  }
  return true;
}

// [x,y,z]_S = [Sx,Sy,z] + [x,Sy,Sz] + [Sx,y,Sz] + lambda [x,y,z] as a tensor.
Tensor3 induced_tensor(const ThreeLieAlgebra& A, const Matrix& S, const Scalar& l) {
  const int n = A.dim();
  Tensor3 T(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
        const Vec v = br(A, S.apply(x), S.apply(y), z) + br(A, x, S.apply(y), S.apply(z)) +
                      br(A, S.apply(x), y, S.apply(z)) + l * br(A, x, y, z);
        for (int c = 0; c < n; ++c) T.at(i, j, k, c) = v[c];
      }
  return T;
}

bool nijenhuis_operator_oracle(const ThreeLieAlgebra& A, const Matrix& N) {
  const int n = A.dim();
  const Matrix N2 = N * N, N3 = N2 * N;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
        const Vec Nx = N.apply(x), Ny = N.apply(y), Nz = N.apply(z);
        const Vec rhs = N.apply(br(A, Nx, Ny, z) + br(A, x, Ny, Nz) + br(A, Nx, y, Nz)) -
                        N2.apply(br(A, Nx, y, z) + br(A, x, Ny, z) + br(A, x, y, Nz)) + N3.apply(br(A, x, y, z));
        if (br(A, Nx, Ny, Nz) != rhs) return false;
      }
  return true;
}

//! Every nonzero wedge vector with coefficients in {-1, 0, 1}.
std::vector<Vec> small_wedges(int n) {
  const int P = n * (n - 1) / 2;
  std::vector<Vec> out;
  std::vector<int> idx(P, 0);
  while (true) {
    Vec X(P);
    bool any = false;
    for (int p = 0; p < P; ++p) {
      X[p] = Scalar(idx[p] - 1);
      any = any || idx[p] != 1;
    }
    if (any) out.push_back(X);
    int p = P - 1;
    while (p >= 0 && ++idx[p] == 3) idx[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

LinearDeformation zero_deformation(const WeightedOperator& w) {
  const int n = w.algebra.dim();
  return {w, Matrix(n, n)};
}

}  // namespace

TEST(Interpolation, RecoversKnownCubic) {
  // p(t) = 2 - t + 3t^2 + 5t^3 in a single coordinate.
  std::array<Vec, 4> v;
  for (int t = 0; t <= 3; ++t) v[t] = {Scalar(2 - t + 3 * t * t + 5 * t * t * t)};
  auto c = interpolate_cubic(v);
  EXPECT_EQ(c[0][0], Scalar(2));
  EXPECT_EQ(c[1][0], Scalar(-1));
  EXPECT_EQ(c[2][0], Scalar(3));
  EXPECT_EQ(c[3][0], Scalar(5));
}

TEST(Coefficients, MatchInterpolationAndDirectEquations) {
  std::mt19937 g(1);
  for (const auto& A : {fx::heisenberg4(), fx::trilie3(), fx::simple4()}) {
    const int n = A.dim();
    for (int trial = 0; trial < 4; ++trial) {
      LinearDeformation d{WeightedOperator(A, fx::random_matrix(g, n, n), Scalar(trial + 1)),
                          fx::random_matrix(g, n, n)};
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
            const auto c = deformation_coefficients(d, x, y, z);
            const auto o = coefficients_by_interpolation(d, x, y, z);
            const auto p = direct_equations(d, x, y, z);
            for (int q = 0; q < 4; ++q) ASSERT_EQ(c[q], o[q]) << "t^" << q;
            for (int q = 0; q < 3; ++q) ASSERT_EQ(c[q + 1], p[q]) << "t^" << q + 1;
            ASSERT_EQ(c[0], mrb_defect(A, d.base.R, d.base.lambda, x, y, z));
          }
    }
  }
}

TEST(LinearDeformation, ZeroDirectionIsValid) {
  const auto w = example_op();
  EXPECT_TRUE(check_linear_deformation(zero_deformation(w)));
  EXPECT_TRUE(check_linear_deformation_by_specialization(zero_deformation(w)));
}

TEST(LinearDeformation, DirectionEqualToBaseFailsOnExample) {
  const auto w = example_op();
  LinearDeformation d{w, w.R};
  EXPECT_FALSE(valid_by_interpolation(d));
  const auto v = check_linear_deformation(d);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.where, "t^1");
  EXPECT_FALSE(check_linear_deformation_by_specialization(d));
  // (1+t)R is modified Rota-Baxter at the rescaled weight (1+t)^2 lambda instead.
  for (int t = 1; t <= 3; ++t)
    EXPECT_TRUE(check_mrb_absolute(w.algebra, d.at(Scalar(t)), Scalar((1 + t) * (1 + t))));
}

TEST(LinearDeformation, AgreesWithBothOraclesOnDiagonalDirections) {
  const auto w = example_op();
  int valid = 0;
  for (const Matrix& H : fx::all_diagonals(4, {-1, 0, 1, 2})) {
    LinearDeformation d{w, H};
    const bool lib = static_cast<bool>(check_linear_deformation(d));
    EXPECT_EQ(lib, valid_by_interpolation(d)) << to_string(H);
    EXPECT_EQ(lib, static_cast<bool>(check_linear_deformation_by_specialization(d))) << to_string(H);
    valid += lib;
  }
  EXPECT_GT(valid, 1);
  EXPECT_LT(valid, 256);
}

TEST(LinearDeformation, AgreesWithOraclesOnRandomDirections) {
  std::mt19937 g(2);
  const auto w = example_op();
  for (int trial = 0; trial < 150; ++trial) {
    LinearDeformation d{w, fx::random_matrix(g, 4, 4, -1, 1)};
    const bool lib = static_cast<bool>(check_linear_deformation(d));
    ASSERT_EQ(lib, valid_by_interpolation(d));
    ASSERT_EQ(lib, static_cast<bool>(check_linear_deformation_by_specialization(d)));
  }
}

TEST(LinearDeformation, SerialAndParallelAgree) {
  std::mt19937 g(3);
  const auto w = example_op();
  for (int trial = 0; trial < 30; ++trial) {
    LinearDeformation d{w, fx::random_matrix(g, 4, 4)};
    const auto a = check_linear_deformation(d, Exec::serial), b = check_linear_deformation(d, Exec::parallel);
    EXPECT_EQ(a.ok, b.ok);
    EXPECT_EQ(a.where, b.where);
    EXPECT_EQ(a.tuple, b.tuple);
  }
}

TEST(LinearDeformation, Errors) {
  const auto w = example_op();
  EXPECT_THROW(check_linear_deformation({w, Matrix(3, 3)}), InputError);
  WeightedOperator bad(fx::heisenberg4(), fx::diag({1, 2, -1, -1}), Scalar(1));
  EXPECT_THROW(check_linear_deformation(zero_deformation(bad)), PreconditionError);
  EXPECT_THROW(check_linear_deformation_by_specialization(zero_deformation(bad)), PreconditionError);
}

TEST(Cocycle, ZeroDirection) { EXPECT_TRUE(deformation_is_cocycle(zero_deformation(example_op()))); }

TEST(Cocycle, EveryValidDirectionIsClosed) {
  const auto w = example_op();
  int checked = 0;
  for (const Matrix& H : fx::all_diagonals(4, {-1, 0, 1, 2})) {
    LinearDeformation d{w, H};
    if (!valid_by_interpolation(d)) continue;
    EXPECT_TRUE(deformation_is_cocycle(d));
    EXPECT_TRUE(partial_R(w, Cochain::from_matrix(H)).is_zero());
    ++checked;
  }
  EXPECT_GT(checked, 1);
}

TEST(Cocycle, DRDirectionsAreClosed) {
  std::mt19937 g(4);
  const auto w = example_op();
  for (int trial = 0; trial < 10; ++trial) {
    const Vec X = fx::random_matrix(g, 6, 1).column(0);
    LinearDeformation d{w, d_R(w, X)};
    ASSERT_TRUE(check_linear_deformation(d));
    EXPECT_TRUE(deformation_is_cocycle(d));
  }
}

TEST(Cocycle, RequiresValidDeformation) {
  const auto w = example_op();
  EXPECT_THROW(deformation_is_cocycle({w, w.R}), PreconditionError);
}

TEST(NijenhuisElementCheck, ZeroPasses) {
  EXPECT_TRUE(check_nijenhuis_element(example_op(), Vec(6)));
  EXPECT_TRUE(check_nijenhuis_element(WeightedOperator(fx::simple4(), Matrix::identity(4), Scalar(1)), Vec(6)));
}

TEST(NijenhuisElementCheck, ExampleWedge) {
  const auto w = example_op();
  const WedgeBasis wb(4);
  const Vec X = unit(6, wb.index(1, 2));
  const Matrix ad = ad_wedge(w.algebra, X);
  EXPECT_TRUE((ad * ad).is_zero());
  for (int c = 0; c < 4; ++c) EXPECT_TRUE(ad.column(c)[1].is_zero() && ad.column(c)[2].is_zero() && ad.column(c)[3].is_zero());
  EXPECT_TRUE(check_nijenhuis_element(w, X));
  EXPECT_TRUE(nijenhuis_element_oracle(w, X));
}

TEST(NijenhuisElementCheck, TrilieWedgeByExhaustiveEvaluation) {
  WeightedOperator w(fx::trilie3(), Matrix::identity(3), Scalar(1));
  ASSERT_TRUE(check_mrb_absolute(w));
  const Vec X = unit(3, WedgeBasis(3).index(0, 1));
  EXPECT_EQ(static_cast<bool>(check_nijenhuis_element(w, X)), nijenhuis_element_oracle(w, X));
}

TEST(NijenhuisElementCheck, AgreesWithOracleOnSmallWedges) {
  std::vector<WeightedOperator> ops{example_op(), WeightedOperator(fx::trilie3(), Matrix::identity(3), Scalar(1)),
                                    WeightedOperator(fx::simple4(), Matrix::identity(4), Scalar(1)),
                                    WeightedOperator(fx::trilie3(), fx::diag({-1, 0, 0}), Scalar(1))};
  for (const auto& w : ops) {
    if (!check_mrb_absolute(w)) continue;
    for (const Vec& X : small_wedges(w.algebra.dim()))
      ASSERT_EQ(static_cast<bool>(check_nijenhuis_element(w, X)), nijenhuis_element_oracle(w, X)) << to_string(X);
  }
}

TEST(NijenhuisElementCheck, FailingConditionIsNamed) {
  WeightedOperator w(fx::simple4(), Matrix::identity(4), Scalar(1));
  bool saw_failure = false;
  for (const Vec& X : small_wedges(4)) {
    const auto v = check_nijenhuis_element(w, X);
    if (v) continue;
    saw_failure = true;
    EXPECT_TRUE(v.where == "triple" || v.where == "mixed" || v.where == "operator") << v.where;
  }
  EXPECT_TRUE(saw_failure);
}

TEST(NijenhuisElementCheck, SweepsMatchOracle) {
  const auto w = example_op();
  const auto all = small_wedges(4);
  const auto found = nijenhuis_sweep(w, {Scalar(-1), Scalar(0), Scalar(1)});
  std::vector<Vec> expect;
  for (const Vec& X : all)
    if (nijenhuis_element_oracle(w, X)) expect.push_back(X);
  EXPECT_EQ(found.size(), expect.size());
  EXPECT_EQ(found.size(), 728u);
  EXPECT_EQ(nijenhuis_basis_sweep(w).size(), 6u);

  WeightedOperator t(fx::trilie3(), Matrix::identity(3), Scalar(1));
  std::vector<Vec> expect3;
  for (const Vec& X : small_wedges(3))
    if (nijenhuis_element_oracle(t, X)) expect3.push_back(X);
  const auto found3 = nijenhuis_sweep(t, {Scalar(-1), Scalar(0), Scalar(1)}, 100000, Exec::serial);
  ASSERT_EQ(found3.size(), expect3.size());
  for (const Vec& X : found3) EXPECT_TRUE(nijenhuis_element_oracle(t, X));
}

TEST(NijenhuisElementCheck, SweepBudget) {
  EXPECT_THROW(nijenhuis_sweep(example_op(), {Scalar(-1), Scalar(0), Scalar(1)}, 100), BudgetError);
}

TEST(NijenhuisElementCheck, ConstructorValidates) {
  EXPECT_NO_THROW(NijenhuisElement(example_op(), Vec(6)));
  EXPECT_THROW(NijenhuisElement(example_op(), Vec(5)), InputError);
  WeightedOperator w(fx::simple4(), Matrix::identity(4), Scalar(1));
  for (const Vec& X : small_wedges(4))
    if (!nijenhuis_element_oracle(w, X)) {
      EXPECT_THROW(NijenhuisElement(w, X), PreconditionError);
      break;
    }
}

TEST(Equivalence, IdenticalDeformationsWithZeroWedge) {
  const auto w = example_op();
  EXPECT_TRUE(check_equivalence(zero_deformation(w), zero_deformation(w), Vec(6)));
  LinearDeformation d{w, d_R(w, unit(6, 2))};
  EXPECT_TRUE(check_equivalence(d, d, Vec(6)));
}

TEST(Equivalence, TrivialDeformationIsEquivalentToZero) {
  const auto w = example_op();
  const WedgeBasis wb(4);
  const Vec X = unit(6, wb.index(1, 2));
  const auto triv = trivial_deformation_from_nijenhuis(NijenhuisElement(w, X));
  EXPECT_EQ(triv.direction, d_R(w, X));
  EXPECT_TRUE(check_equivalence(triv, zero_deformation(w), X));
  EXPECT_TRUE(equivalent_by_specialization(triv, zero_deformation(w), X));
  // The difference of the directions is d_R(X).
  EXPECT_EQ(triv.direction - zero_deformation(w).direction, w.R * ad_wedge(w.algebra, X) - ad_wedge(w.algebra, X) * w.R);
}

TEST(Equivalence, TripleViolationBreaksMultiplicativity) {
  WeightedOperator w(fx::simple4(), Matrix::identity(4), Scalar(1));
  ASSERT_TRUE(check_mrb_absolute(w));
  int tested = 0;
  for (const Vec& X : small_wedges(4)) {
    const auto nv = check_nijenhuis_element(w, X);
    if (nv || nv.where != "triple") continue;
    const auto v = check_equivalence(zero_deformation(w), zero_deformation(w), X);
    ASSERT_FALSE(v);
    EXPECT_TRUE(v.where == "multiplicativity t^2" || v.where == "multiplicativity t^3") << v.where;
    EXPECT_FALSE(equivalent_by_specialization(zero_deformation(w), zero_deformation(w), X));
    ++tested;
  }
  EXPECT_GT(tested, 0);
}

TEST(Equivalence, AgreesWithSpecializationOracle) {
  std::mt19937 g(5);
  const auto w = example_op();
  std::vector<LinearDeformation> ds{zero_deformation(w)};
  for (int p = 0; p < 6; ++p) ds.push_back({w, d_R(w, unit(6, p))});
  int seen[2] = {0, 0};
  for (int trial = 0; trial < 40; ++trial) {
    const auto& a = ds[g() % ds.size()];
    const auto& b = ds[g() % ds.size()];
    const Vec X = fx::random_matrix(g, 6, 1, -1, 1).column(0);
    const bool lib = static_cast<bool>(check_equivalence(a, b, X));
    EXPECT_EQ(lib, equivalent_by_specialization(a, b, X));
    ++seen[lib];
  }
  // Pairs differing by d_R of the chosen wedge are equivalent.
  for (int p = 0; p < 6; ++p) {
    const bool lib = static_cast<bool>(check_equivalence(ds[p + 1], ds[0], unit(6, p)));
    EXPECT_TRUE(lib);
    EXPECT_TRUE(equivalent_by_specialization(ds[p + 1], ds[0], unit(6, p)));
    ++seen[lib];
  }
  EXPECT_GT(seen[0], 0);
  EXPECT_GT(seen[1], 0);
}

TEST(Equivalence, Errors) {
  const auto w = example_op();
  WeightedOperator other(fx::heisenberg4(), fx::diag({1, 1, 1, 1}), Scalar(1));
  ASSERT_TRUE(check_mrb_absolute(other));
  EXPECT_THROW(check_equivalence(zero_deformation(w), zero_deformation(other), Vec(6)), InputError);
  EXPECT_THROW(check_equivalence({w, w.R}, zero_deformation(w), Vec(6)), PreconditionError);
}

TEST(TrivialDeformation, ZeroWedgeGivesZeroDirection) {
  EXPECT_TRUE(trivial_deformation_from_nijenhuis(NijenhuisElement(example_op(), Vec(6))).direction.is_zero());
}

TEST(TrivialDeformation, ContractsHoldForEveryElementOnExample) {
  const auto w = example_op();
  for (const Vec& X : nijenhuis_sweep(w, {Scalar(-1), Scalar(0), Scalar(1)})) {
    const auto d = trivial_deformation_from_nijenhuis(NijenhuisElement(w, X));
    ASSERT_TRUE(check_linear_deformation(d)) << to_string(X);
    ASSERT_TRUE(check_equivalence(d, zero_deformation(w), X)) << to_string(X);
    ASSERT_TRUE(deformation_is_cocycle(d));
  }
}

TEST(TrivialDeformation, ContractsHoldOnOtherAlgebras) {
  std::vector<WeightedOperator> ops{WeightedOperator(fx::trilie3(), Matrix::identity(3), Scalar(1)),
                                    WeightedOperator(fx::simple4(), Matrix::identity(4), Scalar(1))};
  int checked = 0;
  for (const auto& w : ops)
    for (const Vec& X : nijenhuis_sweep(w, {Scalar(-1), Scalar(0), Scalar(1)})) {
      const auto d = trivial_deformation_from_nijenhuis(NijenhuisElement(w, X));
      EXPECT_TRUE(valid_by_interpolation(d)) << to_string(X);
      EXPECT_TRUE(check_linear_deformation(d));
      EXPECT_TRUE(check_equivalence(d, zero_deformation(w), X));
      EXPECT_TRUE(equivalent_by_specialization(d, zero_deformation(w), X));
      ++checked;
    }
  EXPECT_GT(checked, 0);
}

TEST(Omega, ZeroDirection) {
  const auto rep = omega_from_direction(zero_deformation(example_op()));
  for (const auto& s : rep.omega.v) EXPECT_TRUE(s.is_zero());
  EXPECT_TRUE(rep.matches_expansion);
  EXPECT_TRUE(rep.fundamental_identity);
}

TEST(Omega, DirectionEqualToBaseDoublesInducedTerms) {
  const auto w = example_op();
  const Tensor3 om = omega_tensor({w, w.R});
  const Tensor3 doubled = induced_tensor(w.algebra, w.R, Scalar(0));
  for (size_t i = 0; i < om.v.size(); ++i) EXPECT_EQ(om.v[i], Scalar(2) * doubled.v[i]);
}

TEST(Omega, MatchesFiniteDifferenceOnTrivialDirections) {
  const auto w = example_op();
  for (int p = 0; p < 6; ++p) {
    LinearDeformation d{w, d_R(w, unit(6, p))};
    const auto rep = omega_from_direction(d);
    EXPECT_TRUE(rep.matches_expansion);
    EXPECT_TRUE(rep.fundamental_identity);
    const Tensor3 base = induced_tensor(w.algebra, w.R, w.lambda);
    for (int t = 1; t <= 3; ++t) {
      const Tensor3 bt = induced_tensor(w.algebra, d.at(Scalar(t)), w.lambda);
      for (size_t i = 0; i < bt.v.size(); ++i) ASSERT_EQ(bt.v[i] - base.v[i], Scalar(t) * rep.omega.v[i]);
      Tensor3 sum = base;
      for (size_t i = 0; i < sum.v.size(); ++i) sum.v[i] += Scalar(t) * rep.omega.v[i];
      EXPECT_TRUE(check_fundamental_identity(ThreeLieAlgebra::from_tensor(sum)));
    }
  }
}

TEST(Omega, SixTermFormula) {
  std::mt19937 g(6);
  const auto w = example_op();
  const Matrix H = fx::random_matrix(g, 4, 4);
  const Tensor3 om = omega_tensor({w, H});
  const auto& A = w.algebra;
  const Matrix& R = w.R;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const Vec x = unit(4, i), y = unit(4, j), z = unit(4, k);
        const Vec v = br(A, R.apply(x), H.apply(y), z) + br(A, H.apply(x), R.apply(y), z) +
                      br(A, R.apply(x), y, H.apply(z)) + br(A, H.apply(x), y, R.apply(z)) +
                      br(A, x, H.apply(y), R.apply(z)) + br(A, x, R.apply(y), H.apply(z));
        for (int c = 0; c < 4; ++c) ASSERT_EQ(om.at(i, j, k, c), v[c]);
      }
}

TEST(Omega, Preconditions) {
  const auto w = example_op();
  EXPECT_THROW(omega_from_direction({w, w.R}), PreconditionError);
  WeightedOperator t(fx::trilie3(), Matrix::identity(3), Scalar(1));
  EXPECT_THROW(omega_from_direction(zero_deformation(t)), PreconditionError);
}

TEST(AdXNijenhuis, ZeroWedge) { EXPECT_TRUE(check_adX_nijenhuis_on_induced(NijenhuisElement(example_op(), Vec(6)))); }

TEST(AdXNijenhuis, HoldsForEveryElementOnExample) {
  const auto w = example_op();
  const ThreeLieAlgebra induced = ThreeLieAlgebra::from_tensor(induced_tensor(w.algebra, w.R, w.lambda));
  for (const Vec& X : nijenhuis_sweep(w, {Scalar(-1), Scalar(0), Scalar(1)})) {
    ASSERT_TRUE(check_adX_nijenhuis_on_induced(NijenhuisElement(w, X))) << to_string(X);
    ASSERT_TRUE(nijenhuis_operator_oracle(induced, ad_wedge(w.algebra, X)));
  }
}

TEST(AdXNijenhuis, HoldsForEveryOperatorAndBasisElement) {
  for (const Matrix& R : fx::all_diagonals(4, {-1, 0, 1})) {
    WeightedOperator w(fx::heisenberg4(), R, Scalar(1));
    if (!check_mrb_absolute(w)) continue;
    const ThreeLieAlgebra induced = ThreeLieAlgebra::from_tensor(induced_tensor(w.algebra, w.R, w.lambda));
    for (const Vec& X : nijenhuis_basis_sweep(w)) {
      EXPECT_TRUE(check_adX_nijenhuis_on_induced(NijenhuisElement(w, X)));
      EXPECT_TRUE(nijenhuis_operator_oracle(induced, ad_wedge(w.algebra, X)));
    }
  }
}
