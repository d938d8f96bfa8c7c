//! Acceptance run: one PASS/FAIL line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "mrb/cohomology.hpp"
#include "mrb/deformations.hpp"
#include "mrb/error.hpp"
#include "mrb/linfinity.hpp"

using namespace mrb;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Poly a(int n, int i, int j) { return Poly::variable(n * n, (i - 1) * n + (j - 1)); }
Poly c(int n, long v) { return Poly::constant(n * n, Scalar(v)); }

using Br = std::function<Vec(const Vec&, const Vec&, const Vec&)>;

bool fi_oracle(int n, const Br& br) {
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
          for (int t = s + 1; t < n; ++t) {
            const Vec x = unit(n, p), y = unit(n, q), u = unit(n, r), v = unit(n, s), w = unit(n, t);
            if (br(x, y, br(u, v, w)) != br(br(x, y, u), v, w) + br(u, br(x, y, v), w) + br(u, v, br(x, y, w)))
              return false;
          }
  return true;
}

bool fi_oracle(const ThreeLieAlgebra& A) {
  return fi_oracle(A.dim(), [&](const Vec& x, const Vec& y, const Vec& z) { return bracket(A, x, y, z); });
}

std::string str(long v) { return std::to_string(v); }

//! 1. The example operators are modified Rota-Baxter.
Outcome criterion1() {
  Outcome o;
  const ThreeLieAlgebra t3 = fx::trilie3(), h4 = fx::heisenberg4();
  const std::pair<ThreeLieAlgebra, Matrix> cases[] = {
      {t3, Matrix::identity(3)},       {h4, Matrix::identity(4)},        {t3, fx::diag({1, 1, -1})},
      {t3, fx::diag({1, -1, 1})},      {h4, fx::diag({1, 1, -1, -1})},   {h4, fx::diag({1, -1, 1, -1})}};
  int passes = 0;
  for (const auto& [A, R] : cases) {
    const Verdict v = check_mrb_absolute(A, R, Scalar(1));
    o.require(v.ok && v.residual.empty(), A.label() + " " + to_string(R) + ": " + describe(v));
    passes += v.ok;
  }
  if (o.ok) o.detail = str(passes) + "/6 exact passes";
  return o;
}

//! 2. Polynomial conditions reproduce the displayed sets.
Outcome criterion2() {
  Outcome o;
  {
    const int n = 3;
    const auto all = mrb_polynomial_conditions(fx::trilie3(), Scalar(1));
    const Poly det = a(n, 1, 1) * a(n, 2, 2) * a(n, 3, 3) - a(n, 1, 1) * a(n, 3, 2) * a(n, 2, 3) -
                     a(n, 2, 1) * a(n, 1, 2) * a(n, 3, 3) + a(n, 2, 1) * a(n, 3, 2) * a(n, 1, 3) +
                     a(n, 3, 1) * a(n, 1, 2) * a(n, 2, 3) - a(n, 3, 1) * a(n, 2, 2) * a(n, 1, 3);
    const Poly F = a(n, 1, 1) * a(n, 2, 2) - a(n, 2, 1) * a(n, 1, 2) + a(n, 1, 1) * a(n, 3, 3) -
                   a(n, 3, 1) * a(n, 1, 3) + a(n, 2, 2) * a(n, 3, 3) - a(n, 3, 2) * a(n, 2, 3);
    const std::vector<Poly> expected = {(det - (F * a(n, 1, 1) - a(n, 2, 2) - a(n, 3, 3))).monic(),
                                        ((F + c(n, 1)) * a(n, 2, 1)).monic(), ((F + c(n, 1)) * a(n, 3, 1)).monic()};
    o.require(all.size() == expected.size(), "trilie3: " + str(all.size()) + " conditions, expected 3");
    for (size_t i = 0; i < std::min(all.size(), expected.size()); ++i)
      o.require(all[i].poly == expected[i], "trilie3 condition " + str(i + 1) + " differs");
  }
  {
    const int n = 4;
    const auto all = mrb_polynomial_conditions(fx::heisenberg4(), Scalar(1));
    const Poly F = a(n, 2, 2) * a(n, 3, 3) - a(n, 3, 2) * a(n, 2, 3) + a(n, 3, 3) * a(n, 4, 4) -
                   a(n, 4, 3) * a(n, 3, 4) + a(n, 2, 2) * a(n, 4, 4) - a(n, 4, 2) * a(n, 2, 4) + c(n, 1);
    const Poly det = a(n, 2, 2) * a(n, 3, 3) * a(n, 4, 4) - a(n, 2, 2) * a(n, 4, 3) * a(n, 3, 4) -
                     a(n, 3, 2) * a(n, 2, 3) * a(n, 4, 4) + a(n, 3, 2) * a(n, 4, 3) * a(n, 2, 4) +
                     a(n, 4, 2) * a(n, 2, 3) * a(n, 3, 4) - a(n, 4, 2) * a(n, 3, 3) * a(n, 2, 4);
    const std::vector<Poly> expected = {(det - (F * a(n, 1, 1) - a(n, 2, 2) - a(n, 3, 3) - a(n, 4, 4))).monic(),
                                        (F * a(n, 2, 1)).monic(), (F * a(n, 3, 1)).monic(), (F * a(n, 4, 1)).monic()};
    std::vector<Poly> main;
    for (const auto& pc : all)
      if (pc.triple == std::array<int, 3>{1, 2, 3}) main.push_back(pc.poly);
    o.require(main == expected, "heisenberg4: conditions on (e2,e3,e4) differ from the display");
    // The display only expands the triple (e2,e3,e4). The other triples contribute further conditions, and
    // this operator satisfies the displayed ones while failing the identity.
    const Matrix R = fx::mat({{1, 0, 0, 0}, {1, 1, 1, 0}, {0, 0, -1, 0}, {-1, -1, -1, 1}});
    bool display_holds = true;
    for (const auto& p : expected) display_holds = display_holds && p.evaluate(matrix_assignment(R)).is_zero();
    const Verdict v = check_mrb_absolute(fx::heisenberg4(), R, Scalar(1));
    if (o.ok && all.size() != main.size()) {
      o.ok = false;
      o.detail = "trilie3 set exact; heisenberg4 display reproduced on (e2,e3,e4), but the full set has " +
                 str(all.size() - main.size()) + " more conditions from other triples";
      if (display_holds && !v.ok) o.detail += "; " + to_string(R) + " satisfies the display and is not mRB";
    }
  }
  if (o.ok) o.detail = "3 + 4 conditions match, common factor present";
  return o;
}

//! 3. R is Rota-Baxter iff 2R + lambda id is modified Rota-Baxter of weight lambda^2.
Outcome criterion3() {
  Outcome o;
  int cases = 0, rb = 0;
  for (const auto& A : {fx::trilie3(), fx::heisenberg4()})
    for (long l : {1, 2})
      for (const Matrix& R : fx::all_diagonals(A.dim(), {-1, 0, 1})) {
        const WeightedOperator w(A, R, Scalar(l));
        const bool lhs = static_cast<bool>(check_rb(w));
        const WeightedOperator m = rb_to_mrb(w);
        const bool rhs = static_cast<bool>(check_mrb_absolute(A, Scalar(2) * R + Scalar(l) * Matrix::identity(A.dim()),
                                                              Scalar(l * l)));
        o.require(m.lambda == Scalar(l * l), "rb_to_mrb weight");
        o.require(lhs == rhs, A.label() + " " + to_string(R) + " lambda " + str(l));
        ++cases;
        rb += lhs;
      }
  if (o.ok) o.detail = str(cases) + " cases agree (" + str(rb) + " Rota-Baxter)";
  return o;
}

//! 4. Involutions: mRB of weight 1, Nijenhuis and product structure agree.
Outcome criterion4() {
  Outcome o;
  int cases = 0, yes = 0;
  for (const auto& A : {fx::trilie3(), fx::heisenberg4(), fx::simple4()})
    for (const Matrix& E : fx::all_diagonals(A.dim(), {-1, 1})) {
      const int n = A.dim();
      if (E == Matrix::identity(n) || E == -Matrix::identity(n)) continue;
      const bool mrb = static_cast<bool>(check_mrb_absolute(A, E, Scalar(1)));
      const bool nij = static_cast<bool>(check_nijenhuis_operator(A, E));
      const ProductStructureReport p = check_product_structure(A, E);
      const bool prod = p.verdict.ok && p.plus_subalgebra && p.minus_subalgebra;
      o.require(mrb == nij && nij == prod, A.label() + " " + to_string(E));
      ++cases;
      yes += mrb;
    }
  if (o.ok) o.detail = str(cases) + " involutions, three-way agreement (" + str(yes) + " positive)";
  return o;
}

//! 5. Operator cohomology on heisenberg4 with diag(1,1,-1,-1).
Outcome criterion5() {
  Outcome o;
  const WeightedOperator w(fx::heisenberg4(), fx::diag({1, 1, -1, -1}), Scalar(1));
  o.require(derived_in_center(w.algebra), "derived algebra not central");
  o.require(static_cast<bool>(check_representation(rho_R(w))), "rho_R is not a representation");
  const OperatorComplex C(w);
  for (int n = 1; n <= 2; ++n)
    o.require((C.differential(n + 1) * C.differential(n)).is_zero(), "D_R o D_R != 0 in degree " + str(n));
  for (int p = 0; p < 6; ++p)
    o.require(partial_R(w, Cochain::from_matrix(d_R(w, unit(6, p)))).is_zero(), "d_R(X) not closed, X #" + str(p + 1));
  const long pinned[3][4] = {{6, 4, 0, 4}, {16, 14, 2, 12}, {96, 74, 2, 72}};
  std::string table;
  const auto rows = cohomology_dims(w, 3);
  o.require(rows.size() == 3, "table size");
  for (size_t i = 0; i < rows.size() && i < 3; ++i) {
    const auto& r = rows[i];
    o.require(r.dim_c == pinned[i][0] && r.dim_z == pinned[i][1] && r.dim_b == pinned[i][2] && r.dim_h == pinned[i][3],
              "table row " + str(r.n) + " differs from the pinned values");
    table += (i ? " " : "") + std::string("H") + str(r.n) + "=" + str(r.dim_h);
  }
  if (o.ok) o.detail = "D_R^2 = 0 through degree 3, 6 closed d_R(X), " + table;
  return o;
}

//! 6. Nijenhuis elements give trivial deformations.
Outcome criterion6() {
  Outcome o;
  int elements = 0, induced = 0, verdicts = 0;
  const std::pair<ThreeLieAlgebra, Matrix> cases[] = {{fx::trilie3(), fx::diag({1, 1, -1})},
                                                      {fx::trilie3(), fx::diag({1, -1, 1})},
                                                      {fx::heisenberg4(), fx::diag({1, 1, -1, -1})},
                                                      {fx::heisenberg4(), fx::diag({1, -1, 1, -1})}};
  std::mt19937 g(6);
  for (const auto& [A, R] : cases) {
    const WeightedOperator w(A, R, Scalar(1));
    const int n = A.dim();
    for (const Vec& X : nijenhuis_basis_sweep(w)) {
      const NijenhuisElement e(w, X);
      const LinearDeformation d = trivial_deformation_from_nijenhuis(e);
      const LinearDeformation zero{w, Matrix(n, n)};
      const Verdict coef = check_linear_deformation(d);
      const Verdict sampled = check_linear_deformation_by_specialization(d);
      o.require(coef.ok, A.label() + ": d_R(X) is not a deformation");
      o.require(coef.ok == sampled.ok, "oracles disagree on d_R(X)");
      o.require(static_cast<bool>(check_equivalence(d, zero, X)), A.label() + ": not equivalent to zero");
      // ad_X on the induced algebra needs a central derived algebra, which only heisenberg4 has.
      if (derived_in_center(A)) {
        o.require(static_cast<bool>(check_adX_nijenhuis_on_induced(e)), A.label() + ": ad_X not Nijenhuis");
        ++induced;
      }
      ++elements;
      verdicts += 2;
    }
    for (int t = 0; t < 25; ++t) {
      const LinearDeformation d{w, fx::random_matrix(g, n, n, -1, 1)};
      o.require(check_linear_deformation(d).ok == check_linear_deformation_by_specialization(d).ok,
                "oracles disagree on a random direction");
      verdicts += 2;
    }
  }
  if (o.ok)
    o.detail = str(elements) + " Nijenhuis elements (" + str(induced) + " with induced-algebra check), " +
               str(verdicts) + " oracle verdicts agree";
  return o;
}

//! 7. [mu,mu] = 0 iff FI, graded antisymmetry and graded Jacobi.
Outcome criterion7() {
  Outcome o;
  int cases = 0;
  for (const auto& A : {fx::trilie3(), fx::heisenberg4()}) {
    const Cochain mu = bracket_cochain(A);
    o.require(graded_bracket(mu, mu).is_zero() && fi_oracle(A), A.label());
    ++cases;
  }
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y)
      for (int z = -1; z <= 1; ++z) {
        ThreeLieAlgebra A(3);
        A.set(0, 1, 2, fx::vec({x, y, z}));
        const Cochain mu = bracket_cochain(A);
        o.require(graded_bracket(mu, mu).is_zero() == fi_oracle(A), "dim-3 tensor " + to_string(fx::vec({x, y, z})));
        ++cases;
      }
  std::mt19937 g(7);
  int fi = 0;
  for (int t = 0; t < 200; ++t) {
    const ThreeLieAlgebra A = fx::random_tensor(g, 4, {-1, 0, 1}, t % 3 + 1);
    const Cochain mu = bracket_cochain(A);
    const bool f = fi_oracle(A);
    o.require(graded_bracket(mu, mu).is_zero() == f, "random dim-4 tensor #" + str(t));
    fi += f;
    ++cases;
  }
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      const Cochain P = fx::random_cochain(g, 3, 3, p), Q = fx::random_cochain(g, 3, 3, q);
      const Scalar s = (p * q) % 2 ? Scalar(1) : Scalar(-1);
      o.require(graded_bracket(P, Q) == s * graded_bracket(Q, P), "antisymmetry (" + str(p) + "," + str(q) + ")");
    }
  std::uniform_int_distribution<int> ar(0, 2);
  for (int t = 0; t < 100; ++t) {
    const int p = ar(g), q = ar(g), r = ar(g) % 2;
    const Cochain P = fx::random_cochain(g, 2, 2, p), Q = fx::random_cochain(g, 2, 2, q),
                  S = fx::random_cochain(g, 2, 2, r);
    const Scalar s = (p * q) % 2 ? Scalar(-1) : Scalar(1);
    o.require(graded_bracket(P, graded_bracket(Q, S)) ==
                  graded_bracket(graded_bracket(P, Q), S) + s * graded_bracket(Q, graded_bracket(P, S)),
              "Jacobi triple #" + str(t));
  }
  if (o.ok)
    o.detail = str(cases) + " tensors (27 exhaustive dim-3, 200 random dim-4 with " + str(fi) +
               " FI), antisymmetry, 100 Jacobi triples";
  return o;
}

Representation random_rep(std::mt19937& g, const ThreeLieAlgebra& A, int dim) {
  Representation r = zero_representation(A, dim);
  std::uniform_int_distribution<int> keep(0, 2);
  for (auto& m : r.rho)
    if (keep(g) == 0) m = fx::random_matrix(g, dim, dim, -1, 1);
  return r;
}

RelativeMRBDatum random_datum(std::mt19937& g, int t) {
  const ThreeLieAlgebra G = t % 2 ? fx::trilie3() : fx::abelian(3);
  const ThreeLieAlgebra H = t % 3 ? fx::abelian(2) : fx::random_tensor(g, 2, {-1, 0, 1});
  const bool quiet = t % 4 == 0;
  RelativeMRBDatum d{H, G, quiet ? zero_representation(G, 2) : random_rep(g, G, 2),
                     quiet ? zero_representation(H, 3) : random_rep(g, H, 3), fx::random_matrix(g, 3, 2, -1, 1),
                     Scalar(t % 2 + 1)};
  if (t % 5 == 0) d.T = Matrix(3, 2);
  return d;
}

//! Direct check: the structure on g (+) h is a 3-Lie algebra and the relative identity holds.
bool relative_direct(const RelativeMRBDatum& d, bool drop_zeta) {
  RelativeMRBDatum e = d;
  if (drop_zeta) e.zeta = zero_representation(d.h, d.g.dim());
  const auto sum = cochain_bracket(assemble_delta({e.g, e.rho, e.h, e.zeta}, e.lambda));
  return sum && fi_oracle(*sum) && static_cast<bool>(check_mrb_relative(e));
}

//! 8. Maurer-Cartan characterizations.
Outcome criterion8() {
  Outcome o;
  int n_mod = 0, n_abs = 0, n_rb = 0, closed = 0;
  auto record = [&](const MCReport& m) {
    o.require(m.closed_forms_agree, "closed forms disagree with the generic evaluation");
    ++closed;
  };
  std::vector<RelativeMRBDatum> data;
  data.push_back(fold_absolute(WeightedOperator(fx::heisenberg4(), fx::diag({1, 1, -1, -1}), Scalar(1))));
  for (const Matrix& R : fx::all_diagonals(3, {-1, 0, 1}))
    data.push_back(fold_absolute(WeightedOperator(fx::trilie3(), R, Scalar(1))));
  std::mt19937 g(8);
  for (int t = 0; t < 30; ++t) data.push_back(random_datum(g, t));

  for (const auto& d : data) {
    const MCReport m = mc_check_relative_modified(d);
    o.require(m.ok == relative_direct(d, false), "relative-modified instance #" + str(n_mod));
    record(m);
    ++n_mod;
    const MCReport r = mc_check_relative_rb(d);
    o.require(r.ok == relative_direct(d, true), "relative-rb instance #" + str(n_rb));
    record(r);
    ++n_rb;
  }

  std::vector<WeightedOperator> ops;
  for (const auto& R : {fx::diag({1, 1, -1, -1}), fx::diag({1, -1, 1, -1}), fx::diag({1, 0, 1, -1})})
    ops.emplace_back(fx::heisenberg4(), R, Scalar(1));
  for (const Matrix& R : fx::all_diagonals(3, {-1, 0, 1})) ops.emplace_back(fx::trilie3(), R, Scalar(1));
  for (int t = 0; t < 25; ++t) {
    const ThreeLieAlgebra A = t % 2 ? fx::random_tensor(g, 3, {-1, 0, 1}) : fx::trilie3();
    ops.emplace_back(A, t % 3 ? fx::random_matrix(g, 3, 3, -1, 1) : Matrix::identity(3), Scalar(1));
  }
  for (const auto& w : ops) {
    const MCReport m = mc_check_absolute(w);
    o.require(m.ok == (fi_oracle(w.algebra) && check_mrb_absolute(w).ok), "absolute instance #" + str(n_abs));
    ++n_abs;
  }
  if (o.ok)
    o.detail = str(n_mod) + " relative-modified, " + str(n_abs) + " absolute, " + str(n_rb) + " relative-rb; " +
               str(closed) + " closed-form comparisons";
  return o;
}

//! 9. Twisting by the absolute element of heisenberg4.
Outcome criterion9() {
  Outcome o;
  const WeightedOperator w(fx::heisenberg4(), fx::diag({1, 1, -1, -1}), Scalar(1));
  const TwistedLinf T(DerivedLinf(SumSpace{4, 4}), absolute_mc_element(w));
  const OperatorComplex C(w);
  const Matrix t0 = T.differential_matrix(0), t1 = T.differential_matrix(1);
  const bool square_zero = (t1 * t0).is_zero();
  bool all_equal = true;
  std::string rel;
  for (int s = 0; s <= 1; ++s) {
    const Matrix& M = s == 0 ? t0 : t1;
    const Matrix D = C.differential(s + 2);
    const char* r = M == D ? "equal" : M == -D ? "negated" : "different";
    rel += (s ? ", " : "") + std::string("degree ") + str(s + 2) + " " + r;
    all_equal = all_equal && M == D;
  }
  o.ok = square_zero && all_equal;
  o.detail = std::string(square_zero ? "l1 o l1 = 0" : "l1 o l1 != 0") + "; restricted l1 vs D_R: " + rel;
  return o;
}

//! 10. Diagonal {-1,1} search equals the solution set of the polynomial conditions.
Outcome criterion10() {
  Outcome o;
  std::string counts;
  for (const auto& A : {fx::trilie3(), fx::heisenberg4()}) {
    const std::vector<Scalar> values{Scalar(-1), Scalar(1)};
    const auto found = search_mrb(A, Scalar(1), values, SearchShape::diagonal);
    const auto again = search_mrb(A, Scalar(1), values, SearchShape::diagonal, 100000, Exec::serial);
    o.require(found == again, A.label() + ": parallel and serial order differ");
    const auto conds = mrb_polynomial_conditions(A, Scalar(1));
    std::vector<Matrix> expect;
    for (const Matrix& R : fx::all_diagonals(A.dim(), {-1, 1})) {
      bool all = true;
      for (const auto& pc : conds) all = all && pc.poly.evaluate(matrix_assignment(R)).is_zero();
      if (all) expect.push_back(R);
    }
    o.require(found == expect, A.label() + ": search differs from the polynomial solution set");
    counts += (counts.empty() ? "" : ", ") + A.label() + " " + str(found.size());
  }
  if (o.ok) o.detail = "solutions: " + counts;
  return o;
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                               criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (int i = 0; i < 10; ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d: %s  %s (%.1fs)\n", i + 1, o.ok ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d/10 criteria pass\n", 10 - failed);
  return failed ? 1 : 0;
}
