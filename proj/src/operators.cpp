#include "mrb/operators.hpp"

#include "mrb/error.hpp"

namespace mrb {

WeightedOperator::WeightedOperator(ThreeLieAlgebra A, Matrix R_, Scalar lambda_)
    : algebra(std::move(A)), R(std::move(R_)), lambda(std::move(lambda_)) {
  if (R.rows() != algebra.dim() || R.cols() != algebra.dim())
    throw InputError("operator must be square of the algebra's dimension");
  if (lambda.is_zero()) throw PreconditionError("nonzero weight", "lambda must be nonzero");
}

Vec rb_residual(const ThreeLieAlgebra& A, const Matrix& R, const Scalar& lambda, const Vec& x, const Vec& y,
                const Vec& z) {
  Vec rx = R.apply(x), ry = R.apply(y), rz = R.apply(z);
  Vec inner = bracket(A, rx, ry, z) + bracket(A, x, ry, rz) + bracket(A, rx, y, rz);
  axpy(inner, lambda, bracket(A, rx, y, z) + bracket(A, x, ry, z) + bracket(A, x, y, rz));
  axpy(inner, lambda * lambda, bracket(A, x, y, z));
  return bracket(A, rx, ry, rz) - R.apply(inner);
}

Vec mrb_residual(const ThreeLieAlgebra& A, const Matrix& R, const Scalar& lambda, const Vec& x, const Vec& y,
                 const Vec& z) {
  Vec rx = R.apply(x), ry = R.apply(y), rz = R.apply(z);
  Vec inner = bracket(A, rx, ry, z) + bracket(A, x, ry, rz) + bracket(A, rx, y, rz);
  axpy(inner, lambda, bracket(A, x, y, z));
  Vec r = bracket(A, rx, ry, rz) - R.apply(inner);
  axpy(r, lambda, bracket(A, rx, y, z) + bracket(A, x, ry, z) + bracket(A, x, y, rz));
  return r;
}

namespace {

template <class F>
Verdict triples(int d, const char* label, F&& res) {
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec r = res(unit(d, i), unit(d, j), unit(d, k));
        if (!is_zero(r)) return Verdict::fail(label, {i, j, k}, std::move(r));
      }
  return Verdict::pass();
}

}  // namespace

Verdict check_rb(const WeightedOperator& w) {
  return triples(w.algebra.dim(), "Rota-Baxter", [&](const Vec& x, const Vec& y, const Vec& z) {
    return rb_residual(w.algebra, w.R, w.lambda, x, y, z);
  });
}

Verdict check_mrb_absolute(const ThreeLieAlgebra& A, const Matrix& R, const Scalar& lambda) {
  return triples(A.dim(), "modified Rota-Baxter",
                 [&](const Vec& x, const Vec& y, const Vec& z) { return mrb_residual(A, R, lambda, x, y, z); });
}

Verdict check_mrb_absolute(const WeightedOperator& w) { return check_mrb_absolute(w.algebra, w.R, w.lambda); }

Verdict check_relative_actions(const RelativeMRBDatum& d) {
  if (auto v = check_action({d.g, d.h, d.rho}); !v) {
    v.where = "rho: " + v.where;
    return v;
  }
  if (auto v = check_action({d.h, d.g, d.zeta}); !v) {
    v.where = "zeta: " + v.where;
    return v;
  }
  return Verdict::pass();
}

Vec mrb_relative_residual(const RelativeMRBDatum& d, const Vec& u, const Vec& v, const Vec& w) {
  Vec tu = d.T.apply(u), tv = d.T.apply(v), tw = d.T.apply(w);
  Vec inner = d.rho.act(tu, tv, w) + d.rho.act(tv, tw, u) + d.rho.act(tw, tu, v);
  axpy(inner, d.lambda, bracket(d.h, u, v, w));
  Vec r = bracket(d.g, tu, tv, tw) - d.T.apply(inner);
  axpy(r, d.lambda, d.zeta.act(u, v, tw) + d.zeta.act(v, w, tu) + d.zeta.act(w, u, tv));
  return r;
}

Verdict check_mrb_relative(const RelativeMRBDatum& d) {
  if (d.T.rows() != d.g.dim() || d.T.cols() != d.h.dim()) throw InputError("T must map h to g");
  if (d.rho.dim != d.h.dim() || d.zeta.dim != d.g.dim()) throw InputError("action dimensions do not match");
  return triples(d.h.dim(), "relative modified Rota-Baxter", [&](const Vec& u, const Vec& v, const Vec& w) {
    return mrb_relative_residual(d, u, v, w);
  });
}

RelativeMRBDatum fold_absolute(const WeightedOperator& w) {
  Representation ad = adjoint(w.algebra);
  return {w.algebra, w.algebra, ad, ad, w.R, w.lambda};
}

bool mrb_negation_closure(const WeightedOperator& w) {
  return check_mrb_absolute(w).ok == check_mrb_absolute(w.algebra, -w.R, w.lambda).ok;
}

WeightedOperator mrb_conjugation(const WeightedOperator& w, const Matrix& psi) {
  auto inv = inverse(psi);
  if (!inv) throw PreconditionError("invertible", "psi is not invertible");
  if (!is_automorphism(w.algebra, psi)) throw PreconditionError("automorphism", "psi does not preserve the bracket");
  return {w.algebra, *inv * w.R * psi, w.lambda};
}

WeightedOperator rb_to_mrb(const WeightedOperator& w) {
  const int d = w.algebra.dim();
  return {w.algebra, Scalar(2) * w.R + w.lambda * Matrix::identity(d), w.lambda * w.lambda};
}

Vec induced_bracket_value(const WeightedOperator& w, const Vec& x, const Vec& y, const Vec& z) {
  const auto& A = w.algebra;
  Vec rx = w.R.apply(x), ry = w.R.apply(y), rz = w.R.apply(z);
  Vec r = bracket(A, rx, ry, z) + bracket(A, x, ry, rz) + bracket(A, rx, y, rz);
  axpy(r, w.lambda, bracket(A, x, y, z));
  return r;
}

Vec rho_R_value(const WeightedOperator& w, const Vec& x, const Vec& y, const Vec& z) {
  const auto& A = w.algebra;
  Vec rx = w.R.apply(x), ry = w.R.apply(y);
  Vec r = bracket(A, rx, ry, z) - w.R.apply(bracket(A, rx, y, z) + bracket(A, x, ry, z));
  axpy(r, w.lambda, bracket(A, x, y, z));
  return r;
}

void require_induced_preconditions(const WeightedOperator& w) {
  if (!derived_in_center(w.algebra))
    throw PreconditionError("derived algebra central", "the derived algebra is not contained in the center");
  if (auto v = check_mrb_absolute(w); !v) throw PreconditionError("modified Rota-Baxter", describe(v));
}

ThreeLieAlgebra induced_bracket(const WeightedOperator& w) {
  require_induced_preconditions(w);
  const int d = w.algebra.dim();
  ThreeLieAlgebra B(d, w.algebra.label() + "_R");
  B.set_basis_names(w.algebra.basis_names());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) B.set(i, j, k, induced_bracket_value(w, unit(d, i), unit(d, j), unit(d, k)));
  return B;
}

Representation rho_R(const WeightedOperator& w) {
  ThreeLieAlgebra B = induced_bracket(w);
  const int d = w.algebra.dim();
  Representation r = zero_representation(B, d);
  WedgeBasis wb(d);
  for (int p = 0; p < wb.size(); ++p) {
    auto [a, b] = wb.pair(p);
    for (int z = 0; z < d; ++z) {
      Vec col = rho_R_value(w, unit(d, a), unit(d, b), unit(d, z));
      for (int c = 0; c < d; ++c) r.rho[p](c, z) = col[c];
    }
  }
  return r;
}

std::vector<Matrix> search_mrb(const ThreeLieAlgebra& A, const Scalar& lambda, const std::vector<Scalar>& values,
                               SearchShape shape, long budget, Exec exec) {
  if (lambda.is_zero()) throw PreconditionError("nonzero weight", "lambda must be nonzero");
  if (values.empty()) throw InputError("empty value set");
  const int d = A.dim();
  std::vector<std::pair<int, int>> free;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (shape == SearchShape::full || (shape == SearchShape::diagonal && i == j) ||
          (shape == SearchShape::upper_triangular && i <= j))
        free.emplace_back(i, j);
  const long base = static_cast<long>(values.size());
  long total = 1;
  for (size_t f = 0; f < free.size(); ++f) {
    if (total > budget / base) throw BudgetError("search space exceeds the budget of " + std::to_string(budget));
    total *= base;
  }
  if (total > budget) throw BudgetError("search space exceeds the budget of " + std::to_string(budget));

  auto candidate = [&](long n) {
    Matrix R(d, d);
    for (size_t f = free.size(); f-- > 0;) {
      R(free[f].first, free[f].second) = values[n % base];
      n /= base;
    }
    return R;
  };
  std::vector<char> hit(static_cast<size_t>(total), 0);
  for_each_index(static_cast<size_t>(total), exec,
                 [&](size_t n) { hit[n] = check_mrb_absolute(A, candidate(static_cast<long>(n)), lambda).ok; });
  std::vector<Matrix> out;
  for (long n = 0; n < total; ++n)
    if (hit[n]) out.push_back(candidate(n));
  return out;
}

std::vector<PolyCondition> mrb_polynomial_conditions(const ThreeLieAlgebra& A, const Scalar& lambda) {
  const int d = A.dim(), nv = d * d;
  using PV = std::vector<Poly>;
  auto apply = [&](const PV& v) {
    PV out(d, Poly(nv));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!v[j].is_zero()) out[i] = out[i] + Poly::variable(nv, i * d + j) * v[j];
    return out;
  };
  auto basis = [&](int i) {
    PV v(d, Poly(nv));
    v[i] = Poly::constant(nv, 1);
    return v;
  };
  auto add = [](PV a, const PV& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
    return a;
  };
  auto scale = [](PV a, const Scalar& s) {
    for (auto& p : a) p = p * s;
    return a;
  };
  std::vector<PolyCondition> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        PV x = basis(i), y = basis(j), z = basis(k);
        PV rx = apply(x), ry = apply(y), rz = apply(z);
        PV inner = add(add(bracket_t(A, rx, ry, z), bracket_t(A, x, ry, rz)), bracket_t(A, rx, y, rz));
        inner = add(inner, scale(bracket_t(A, x, y, z), lambda));
        PV lin = add(add(bracket_t(A, rx, y, z), bracket_t(A, x, ry, z)), bracket_t(A, x, y, rz));
        PV res = add(add(bracket_t(A, rx, ry, rz), scale(apply(inner), -1)), scale(lin, lambda));
        for (int c = 0; c < d; ++c)
          if (!res[c].is_zero()) out.push_back({{i, j, k}, c, res[c].monic()});
      }
  return out;
}

Vec matrix_assignment(const Matrix& R) {
  Vec v;
  for (int i = 0; i < R.rows(); ++i)
    for (int j = 0; j < R.cols(); ++j) v.push_back(R(i, j));
  return v;
}

}  // namespace mrb
