#include "mrb/constructions.hpp"

#include "mrb/error.hpp"

namespace mrb {

void BilinearTable::set(int i, int j, const Vec& v) {
  if (static_cast<int>(v.size()) != dim) throw InputError("product value has wrong length");
  if (i < 0 || j < 0 || i >= dim || j >= dim) throw InputError("basis index out of range");
  table[static_cast<size_t>(i) * dim + j] = v;
}

Vec BilinearTable::operator()(const Vec& x, const Vec& y) const {
  Vec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j)
      if (!y[j].is_zero()) axpy(out, x[i] * y[j], at(i, j));
  }
  return out;
}

void LieAlgebra::set_bracket(int i, int j, const Vec& v) {
  if (i == j) {
    if (!is_zero(v)) throw PreconditionError("antisymmetric", "[e_i,e_i] must vanish");
    return;
  }
  set(i, j, v);
  set(j, i, Scalar(-1) * v);
}

Scalar TraceFunctional::operator()(const Vec& x) const {
  Scalar s;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !f[i].is_zero()) s += f[i] * x[i];
  return s;
}

Verdict check_jacobi(const LieAlgebra& L) {
  const int d = L.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec s = L.at(i, j) + L.at(j, i);
      if (!is_zero(s)) return Verdict::fail("antisymmetry", {i, j}, s);
    }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec x = unit(d, i), y = unit(d, j), z = unit(d, k);
        Vec r = L(x, L(y, z)) + L(y, L(z, x)) + L(z, L(x, y));
        if (!is_zero(r)) return Verdict::fail("Jacobi", {i, j, k}, r);
      }
  return Verdict::pass();
}

Verdict check_left_symmetry(const PreLieAlgebra& P) {
  const int d = P.dim;
  auto assoc = [&](const Vec& x, const Vec& y, const Vec& z) { return P(P(x, y), z) - P(x, P(y, z)); };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec x = unit(d, i), y = unit(d, j), z = unit(d, k);
        Vec r = assoc(x, y, z) - assoc(y, x, z);
        if (!is_zero(r)) return Verdict::fail("left symmetry", {i, j, k}, r);
      }
  return Verdict::pass();
}

Verdict check_commassoc_derivation(const CommAssocWithDerivation& C) {
  const auto& m = C.product;
  const int d = m.dim;
  if (C.D.rows() != d || C.D.cols() != d) throw InputError("derivation must be square of the algebra's dimension");
  if (static_cast<int>(C.f.size()) != d) throw InputError("functional has wrong length");
  TraceFunctional f{C.f};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec x = unit(d, i), y = unit(d, j);
      if (Vec r = m(x, y) - m(y, x); !is_zero(r)) return Verdict::fail("commutative", {i, j}, r);
      if (Vec r = C.D.apply(m(x, y)) - m(C.D.apply(x), y) - m(x, C.D.apply(y)); !is_zero(r))
        return Verdict::fail("Leibniz rule", {i, j}, r);
      if (Scalar s = f(m(C.D.apply(x), y)) - f(m(x, C.D.apply(y))); !s.is_zero())
        return Verdict::fail("f(Dx.y) = f(x.Dy)", {i, j}, {s});
      for (int k = 0; k < d; ++k) {
        Vec z = unit(d, k);
        if (Vec r = m(m(x, y), z) - m(x, m(y, z)); !is_zero(r)) return Verdict::fail("associative", {i, j, k}, r);
      }
    }
  return Verdict::pass();
}

ThreeLieAlgebra three_bracket_from(const BinaryOp& br, const TraceFunctional& f, int dim) {
  ThreeLieAlgebra A(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        Vec x = unit(dim, i), y = unit(dim, j), z = unit(dim, k);
        Vec v = f(x) * br(y, z) + f(y) * br(z, x) + f(z) * br(x, y);
        A.set(i, j, k, v);
      }
  return A;
}

namespace {

void require_kills(const BinaryOp& br, const TraceFunctional& f, int d, const char* what) {
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (!f(br(unit(d, i), unit(d, j))).is_zero())
        throw PreconditionError(what, "f does not vanish on [e" + std::to_string(i + 1) + ",e" +
                                          std::to_string(j + 1) + "]");
}

BinaryOp as_op(const BilinearTable& t) {
  return [&t](const Vec& x, const Vec& y) { return t(x, y); };
}

BinaryOp commutator(const BilinearTable& t) {
  return [&t](const Vec& x, const Vec& y) { return t(x, y) - t(y, x); };
}

}  // namespace

ThreeLieAlgebra lie_to_3lie(const LieAlgebra& L, const TraceFunctional& f) {
  if (static_cast<int>(f.f.size()) != L.dim) throw InputError("functional has wrong length");
  if (auto v = check_jacobi(L); !v) throw PreconditionError("Jacobi", describe(v));
  require_kills(as_op(L), f, L.dim, "trace functional");
  return three_bracket_from(as_op(L), f, L.dim);
}

Verdict check_mrb_binary(const BinaryOp& mul, int d, const Matrix& R, const Scalar& lambda, const std::string& label) {
  if (R.rows() != d || R.cols() != d) throw InputError("operator must be square of the algebra's dimension");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec x = unit(d, i), y = unit(d, j);
      Vec rx = R.apply(x), ry = R.apply(y);
      Vec r = mul(rx, ry) - R.apply(mul(rx, y) + mul(x, ry));
      axpy(r, -lambda, mul(x, y));
      if (!is_zero(r)) return Verdict::fail(label, {i, j}, r);
    }
  return Verdict::pass();
}

Verdict check_mrb_on_lie(const LieAlgebra& L, const Matrix& R, const Scalar& lambda) {
  return check_mrb_binary(as_op(L), L.dim, R, lambda, "modified Rota-Baxter (Lie)");
}

Verdict check_mrb_on_prelie(const PreLieAlgebra& P, const Matrix& R, const Scalar& lambda) {
  return check_mrb_binary(as_op(P), P.dim, R, lambda, "modified Rota-Baxter (pre-Lie)");
}

Verdict check_mrb_on_commassoc(const CommAssocWithDerivation& C, const Matrix& R, const Scalar& lambda) {
  return check_mrb_binary(as_op(C.product), C.product.dim, R, lambda, "modified Rota-Baxter (commutative)");
}

Vec compatibility_residual(const BinaryOp& br, const TraceFunctional& f, const Matrix& R, const Scalar& lambda,
                           const Vec& x, const Vec& y, const Vec& z, ResidualForm form) {
  Vec rx = R.apply(x), ry = R.apply(y), rz = R.apply(z);
  Vec inner = f(x) * br(ry, rz) + f(y) * br(rz, rx) + f(z) * br(rx, ry);
  axpy(inner, lambda, f(x) * br(y, z) + f(y) * br(z, x) + f(z) * br(x, y));
  Vec r = R.apply(inner);
  Vec lin = f(x) * br(ry, z) + f(x) * br(y, rz) + f(y) * br(rz, x) + f(y) * br(z, rx) + f(z) * br(rx, y) +
            f(z) * br(x, ry);
  axpy(r, -lambda, lin);
  Scalar two_l = Scalar(2) * lambda;
  if (form == ResidualForm::corrected) {
    axpy(r, -two_l * f(ry), br(z, x));
    axpy(r, -two_l * f(rx), br(y, z));
  } else {
    axpy(r, -two_l * f(ry), br(z, x));
    axpy(r, -two_l * f(ry), br(z, x));
  }
  axpy(r, -two_l * f(rz), br(x, y));
  return r;
}

namespace {

Verdict residual_sweep(const BinaryOp& br, const TraceFunctional& f, int d, const Matrix& R, const Scalar& lambda,
                       ResidualForm form) {
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec r = compatibility_residual(br, f, R, lambda, unit(d, i), unit(d, j), unit(d, k), form);
        if (!is_zero(r)) return Verdict::fail("compatibility residual", {i, j, k}, r);
      }
  return Verdict::pass();
}

}  // namespace

Verdict lie_compatibility_residual(const LieAlgebra& L, const TraceFunctional& f, const Matrix& R,
                                   const Scalar& lambda, ResidualForm form) {
  if (auto v = check_jacobi(L); !v) throw PreconditionError("Jacobi", describe(v));
  require_kills(as_op(L), f, L.dim, "trace functional");
  if (auto v = check_mrb_on_lie(L, R, lambda); !v) throw PreconditionError("modified Rota-Baxter on the Lie algebra", describe(v));
  return residual_sweep(as_op(L), f, L.dim, R, lambda, form);
}

Verdict prelie_compatibility_residual(const PreLieAlgebra& P, const TraceFunctional& f, const Matrix& R,
                                      const Scalar& lambda, ResidualForm form) {
  if (auto v = check_left_symmetry(P); !v) throw PreconditionError("left symmetry", describe(v));
  require_kills(commutator(P), f, P.dim, "f kills commutators");
  if (auto v = check_mrb_on_prelie(P, R, lambda); !v)
    throw PreconditionError("modified Rota-Baxter on the pre-Lie algebra", describe(v));
  return residual_sweep(commutator(P), f, P.dim, R, lambda, form);
}

Verdict derivation_compatibility_residual(const CommAssocWithDerivation& C, const Matrix& R, const Scalar& lambda,
                                          ResidualForm form) {
  if (auto v = check_commassoc_derivation(C); !v) throw PreconditionError(v.where, describe(v));
  if (C.D * R != R * C.D) throw PreconditionError("DR = RD", "the derivation does not commute with R");
  if (auto v = check_mrb_on_commassoc(C, R, lambda); !v)
    throw PreconditionError("modified Rota-Baxter on the commutative algebra", describe(v));
  const Matrix& D = C.D;
  const BilinearTable& m = C.product;
  BinaryOp br = [&](const Vec& a, const Vec& b) { return m(D.apply(a), b) - m(D.apply(b), a); };
  return residual_sweep(br, TraceFunctional{C.f}, m.dim, R, lambda, form);
}

LieAlgebra prelie_to_lie(const PreLieAlgebra& P) {
  if (auto v = check_left_symmetry(P); !v) throw PreconditionError("left symmetry", describe(v));
  LieAlgebra L(P.dim);
  for (int i = 0; i < P.dim; ++i)
    for (int j = 0; j < P.dim; ++j) L.set(i, j, P.at(i, j) - P.at(j, i));
  return L;
}

PreLieAlgebra commassoc_deriv_to_prelie(const CommAssocWithDerivation& C, const std::optional<Matrix>& R) {
  if (auto v = check_commassoc_derivation(C); !v) throw PreconditionError(v.where, describe(v));
  if (R && C.D * *R != *R * C.D) throw PreconditionError("DR = RD", "the derivation does not commute with R");
  const int d = C.product.dim;
  PreLieAlgebra P(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) P.set(i, j, C.product(unit(d, i), C.D.column(j)));
  return P;
}

LieAlgebra derivation_commutator(const CommAssocWithDerivation& C) {
  if (auto v = check_commassoc_derivation(C); !v) throw PreconditionError(v.where, describe(v));
  const int d = C.product.dim;
  LieAlgebra L(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      L.set(i, j, C.product(C.D.column(i), unit(d, j)) - C.product(C.D.column(j), unit(d, i)));
  return L;
}

ThreeLieAlgebra commassoc_deriv_to_3lie(const CommAssocWithDerivation& C) {
  if (auto v = check_commassoc_derivation(C); !v) throw PreconditionError(v.where, describe(v));
  const auto& m = C.product;
  const Matrix& D = C.D;
  TraceFunctional f{C.f};
  const int d = m.dim;
  ThreeLieAlgebra A(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec x = unit(d, i), y = unit(d, j), z = unit(d, k);
        Vec dx = D.apply(x), dy = D.apply(y), dz = D.apply(z);
        Vec v = f(x) * (m(dy, z) - m(dz, y)) - f(y) * (m(dx, z) - m(dz, x)) + f(z) * (m(dx, y) - m(dy, x));
        A.set(i, j, k, v);
      }
  return A;
}

}  // namespace mrb
