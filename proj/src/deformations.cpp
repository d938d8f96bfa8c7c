#include "mrb/deformations.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "mrb/cohomology.hpp"
#include "mrb/error.hpp"

namespace mrb {

namespace {

struct Triple {
  int i, j, k;
};

std::vector<Triple> increasing_triples(int d) {
  std::vector<Triple> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) out.push_back({i, j, k});
  return out;
}

void require_valid(const LinearDeformation& d, const char* which = "deformation") {
  if (auto v = check_linear_deformation(d); !v)
    throw PreconditionError("linear deformation", std::string(which) + " is not valid: " + describe(v));
}

bool same_base(const WeightedOperator& a, const WeightedOperator& b) {
  return a.algebra == b.algebra && a.R == b.R && a.lambda == b.lambda;
}

Tensor3 tensor_of(int d, const std::function<Vec(const Vec&, const Vec&, const Vec&)>& f) {
  Tensor3 t(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec v = f(unit(d, i), unit(d, j), unit(d, k));
        for (int c = 0; c < d; ++c) t.at(i, j, k, c) = v[c];
      }
  return t;
}

}  // namespace

std::array<Vec, 4> deformation_coefficients(const LinearDeformation& d, const Vec& x, const Vec& y, const Vec& z) {
  const auto& A = d.base.algebra;
  const Scalar& lambda = d.base.lambda;
  const Matrix* M[2] = {&d.base.R, &d.direction};
  const Vec X[2] = {M[0]->apply(x), M[1]->apply(x)};
  const Vec Y[2] = {M[0]->apply(y), M[1]->apply(y)};
  const Vec Z[2] = {M[0]->apply(z), M[1]->apply(z)};
  const int n = A.dim();
  std::array<Vec, 4> c;
  c.fill(zeros(n));

  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int e = 0; e < 2; ++e) c[a + b + e] = c[a + b + e] + bracket(A, X[a], Y[b], Z[e]);

  // Inner sum of the right-hand side, split by how many R^ factors it carries.
  std::array<Vec, 3> inner;
  inner.fill(zeros(n));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      inner[a + b] = inner[a + b] + bracket(A, X[a], Y[b], z) + bracket(A, x, Y[a], Z[b]) + bracket(A, X[a], y, Z[b]);
  axpy(inner[0], lambda, bracket(A, x, y, z));
  for (int o = 0; o < 2; ++o)
    for (int p = 0; p < 3; ++p) c[o + p] = c[o + p] - M[o]->apply(inner[p]);

  for (int a = 0; a < 2; ++a) axpy(c[a], lambda, bracket(A, X[a], y, z) + bracket(A, x, Y[a], z) + bracket(A, x, y, Z[a]));
  return c;
}

Verdict check_linear_deformation(const LinearDeformation& d, Exec exec) {
  const int n = d.base.algebra.dim();
  if (d.direction.rows() != n || d.direction.cols() != n) throw InputError("direction must match the algebra");
  if (auto v = check_mrb_absolute(d.base); !v)
    throw PreconditionError("modified Rota-Baxter", "base operator: " + describe(v));
  const auto ts = increasing_triples(n);
  auto hit = first_hit<Verdict>(ts.size(), exec, [&](size_t idx) -> std::optional<Verdict> {
    const auto [i, j, k] = ts[idx];
    auto c = deformation_coefficients(d, unit(n, i), unit(n, j), unit(n, k));
    for (int p = 1; p <= 3; ++p)
      if (!is_zero(c[p])) return Verdict::fail("t^" + std::to_string(p), {i, j, k}, c[p]);
    return std::nullopt;
  });
  return hit ? *hit : Verdict::pass();
}

Verdict check_linear_deformation_by_specialization(const LinearDeformation& d) {
  if (auto v = check_mrb_absolute(d.base); !v)
    throw PreconditionError("modified Rota-Baxter", "base operator: " + describe(v));
  for (int t = 1; t <= 3; ++t) {
    if (auto v = check_mrb_absolute(d.base.algebra, d.at(Scalar(t)), d.base.lambda); !v) {
      v.where = "t=" + std::to_string(t);
      return v;
    }
  }
  return Verdict::pass();
}

bool deformation_is_cocycle(const LinearDeformation& d) {
  require_valid(d);
  const auto& w = d.base;
  const int n = w.algebra.dim();
  std::optional<Cochain> pf;
  if (derived_in_center(w.algebra)) pf = partial_R(w, Cochain::from_matrix(d.direction));
  WedgeBasis wb(n);
  for (int p = 0; p < wb.size(); ++p) {
    auto [a, b] = wb.pair(p);
    for (int z = 0; z < n; ++z) {
      Vec display = closedness_display(w, d.direction, unit(n, a), unit(n, b), unit(n, z));
      Vec c1 = deformation_coefficients(d, unit(n, a), unit(n, b), unit(n, z))[1];
      if (c1 != display || !is_zero(display)) return false;
      if (pf) {
        const int pairs[1] = {p};
        if (pf->eval_basis(pairs, z) != display) return false;
      }
    }
  }
  return true;
}

Verdict check_equivalence(const LinearDeformation& d1, const LinearDeformation& d2, const Vec& X) {
  if (!same_base(d1.base, d2.base)) throw InputError("deformations must share the base operator");
  require_valid(d1, "first deformation");
  require_valid(d2, "second deformation");
  const auto& A = d1.base.algebra;
  const int n = A.dim();
  const Matrix ad = ad_wedge(A, X);

  for (const auto& [i, j, k] : increasing_triples(n)) {
    const Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
    const Vec ax = ad.apply(x), ay = ad.apply(y), az = ad.apply(z);
    // phi_t[x,y,z] - [phi_t x, phi_t y, phi_t z]; the t^0 part cancels.
    const Vec c[3] = {
        ad.apply(bracket(A, x, y, z)) - bracket(A, ax, y, z) - bracket(A, x, ay, z) - bracket(A, x, y, az),
        -(bracket(A, ax, ay, z) + bracket(A, ax, y, az) + bracket(A, x, ay, az)),
        -bracket(A, ax, ay, az)};
    for (int p = 0; p < 3; ++p)
      if (!is_zero(c[p])) return Verdict::fail("multiplicativity t^" + std::to_string(p + 1), {i, j, k}, c[p]);
  }

  const Matrix& R = d1.base.R;
  // (R + tR2)(id + t ad) - (id + t ad)(R + tR1)
  const Matrix m[2] = {d2.direction - d1.direction + R * ad - ad * R, d2.direction * ad - ad * d1.direction};
  for (int p = 0; p < 2; ++p) {
    if (m[p].is_zero()) continue;
    for (int col = 0; col < n; ++col) {
      Vec v = m[p].column(col);
      if (!is_zero(v)) return Verdict::fail("intertwining t^" + std::to_string(p + 1), {col}, v);
    }
  }
  return Verdict::pass();
}

Verdict check_nijenhuis_element(const WeightedOperator& w, const Vec& X) {
  const auto& A = w.algebra;
  const int n = A.dim();
  const Matrix ad = ad_wedge(A, X);
  const auto ts = increasing_triples(n);
  for (const auto& [i, j, k] : ts) {
    Vec r = bracket(A, ad.column(i), ad.column(j), ad.column(k));
    if (!is_zero(r)) return Verdict::fail("triple", {i, j, k}, r);
  }
  for (const auto& [i, j, k] : ts) {
    const Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
    const Vec ax = ad.column(i), ay = ad.column(j), az = ad.column(k);
    Vec r = bracket(A, x, ay, az) + bracket(A, ax, ay, z) + bracket(A, ax, y, az);
    if (!is_zero(r)) return Verdict::fail("mixed", {i, j, k}, r);
  }
  const Matrix m = ad * w.R * ad - ad * ad * w.R;
  for (int col = 0; col < n; ++col) {
    Vec v = m.column(col);
    if (!is_zero(v)) return Verdict::fail("operator", {col}, v);
  }
  return Verdict::pass();
}

NijenhuisElement::NijenhuisElement(WeightedOperator base, Vec X) : base_(std::move(base)), X_(std::move(X)) {
  const int n = base_.algebra.dim();
  if (static_cast<int>(X_.size()) != n * (n - 1) / 2) throw InputError("wedge vector has the wrong length");
  if (auto v = check_nijenhuis_element(base_, X_); !v) throw PreconditionError("Nijenhuis element", describe(v));
}

LinearDeformation trivial_deformation_from_nijenhuis(const NijenhuisElement& e) {
  return {e.base(), d_R(e.base(), e.X())};
}

Tensor3 omega_tensor(const LinearDeformation& d) {
  const auto& A = d.base.algebra;
  const Matrix& R = d.base.R;
  const Matrix& H = d.direction;
  return tensor_of(A.dim(), [&](const Vec& x, const Vec& y, const Vec& z) {
    Vec rx = R.apply(x), ry = R.apply(y), rz = R.apply(z);
    Vec hx = H.apply(x), hy = H.apply(y), hz = H.apply(z);
    return bracket(A, rx, hy, z) + bracket(A, hx, ry, z) + bracket(A, rx, y, hz) + bracket(A, hx, y, rz) +
           bracket(A, x, hy, rz) + bracket(A, x, ry, hz);
  });
}

OmegaReport omega_from_direction(const LinearDeformation& d) {
  require_valid(d);
  const auto& w = d.base;
  const auto& A = w.algebra;
  if (!derived_in_center(A)) throw PreconditionError("derived algebra central", "some bracket is not central");
  const int n = A.dim();
  const Matrix& H = d.direction;
  OmegaReport rep;
  rep.omega = omega_tensor(d);
  rep.quadratic = tensor_of(n, [&](const Vec& x, const Vec& y, const Vec& z) {
    Vec hx = H.apply(x), hy = H.apply(y), hz = H.apply(z);
    return bracket(A, hx, hy, z) + bracket(A, x, hy, hz) + bracket(A, hx, y, hz);
  });
  rep.matches_expansion = std::all_of(rep.quadratic.v.begin(), rep.quadratic.v.end(),
                                      [](const Scalar& s) { return s.is_zero(); });

  // The identity is quadratic in t, so three specializations decide it coefficientwise.
  const Tensor3 base = induced_bracket(w).tensor();
  for (int t = 0; t <= 2; ++t) {
    Tensor3 mt = base;
    for (size_t i = 0; i < mt.v.size(); ++i) mt.v[i] += Scalar(t) * rep.omega.v[i];
    if (auto v = check_fundamental_identity(ThreeLieAlgebra::from_tensor(mt), Exec::serial); !v) {
      v.where = "t=" + std::to_string(t) + ": " + v.where;
      rep.fundamental_identity = v;
      break;
    }
  }
  return rep;
}

Verdict check_adX_nijenhuis_on_induced(const NijenhuisElement& e) {
  return check_nijenhuis_operator(induced_bracket(e.base()), ad_wedge(e.base().algebra, e.X()));
}

std::vector<Vec> nijenhuis_sweep(const WeightedOperator& w, const std::vector<Scalar>& values, long budget,
                                 Exec exec) {
  const int n = w.algebra.dim();
  const int P = n * (n - 1) / 2;
  const long base = static_cast<long>(values.size());
  if (base == 0) return {};
  long total = 1;
  for (int i = 0; i < P; ++i) {
    total *= base;
    if (total > budget)
      throw BudgetError("Nijenhuis sweep needs more than " + std::to_string(budget) + " candidates");
  }
  auto decode = [&](long idx) {
    Vec X(P);
    for (int p = P - 1; p >= 0; --p) {
      X[p] = values[idx % base];
      idx /= base;
    }
    return X;
  };
  std::vector<char> hit(total, 0);
  for_each_index(static_cast<size_t>(total), exec, [&](size_t idx) {
    Vec X = decode(static_cast<long>(idx));
    if (!is_zero(X) && check_nijenhuis_element(w, X)) hit[idx] = 1;
  });
  std::vector<Vec> out;
  for (long i = 0; i < total; ++i)
    if (hit[i]) out.push_back(decode(i));
  return out;
}

std::vector<Vec> nijenhuis_basis_sweep(const WeightedOperator& w) {
  const int P = WedgeBasis(w.algebra.dim()).size();
  std::vector<Vec> out;
  for (int p = 0; p < P; ++p)
    if (check_nijenhuis_element(w, unit(P, p))) out.push_back(unit(P, p));
  return out;
}

}  // namespace mrb
