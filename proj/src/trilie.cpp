#include "mrb/trilie.hpp"

#include <array>

#include "mrb/error.hpp"

namespace mrb {

std::string describe(const Verdict& v) {
  if (v.ok) return "pass";
  std::string s = "fail [" + v.where + "] at (";
  for (size_t i = 0; i < v.tuple.size(); ++i) s += (i ? "," : "") + std::to_string(v.tuple[i] + 1);
  return s + ") residual " + to_string(v.residual);
}

ThreeLieAlgebra::ThreeLieAlgebra(int dim, std::string label)
    : d_(dim), label_(std::move(label)), c_(static_cast<size_t>(dim) * dim * dim, Vec(dim)) {
  if (dim < 0) throw InputError("negative dimension");
  for (int i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
}

ThreeLieAlgebra ThreeLieAlgebra::from_tensor(const Tensor3& t, std::string label) {
  if (t.m != t.n) throw InputError("structure tensor must have output dimension equal to dim");
  if (!t.is_alternating()) throw PreconditionError("alternating", "structure constants do not alternate");
  ThreeLieAlgebra A(t.n, std::move(label));
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j)
      for (int k = j + 1; k < t.n; ++k) {
        Vec v(t.n);
        for (int c = 0; c < t.n; ++c) v[c] = t.at(i, j, k, c);
        A.set(i, j, k, v);
      }
  return A;
}

void ThreeLieAlgebra::set_basis_names(std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != d_) throw InputError("basis name count differs from dimension");
  names_ = std::move(names);
}

void ThreeLieAlgebra::set(int i, int j, int k, const Vec& value) {
  if (static_cast<int>(value.size()) != d_) throw InputError("bracket value has wrong length");
  if (i < 0 || j < 0 || k < 0 || i >= d_ || j >= d_ || k >= d_) throw InputError("basis index out of range");
  if (i == j || j == k || i == k) {
    if (!is_zero(value)) throw PreconditionError("alternating", "bracket with a repeated entry must vanish");
    return;
  }
  std::array<int, 3> idx{i, j, k};
  static constexpr int P[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  Vec neg = Scalar(-1) * value;
  for (int s = 0; s < 6; ++s) {
    int a = idx[P[s][0]], b = idx[P[s][1]], c = idx[P[s][2]];
    c_[(static_cast<size_t>(a) * d_ + b) * d_ + c] = s < 3 ? value : neg;
  }
  rebuild_terms();
}

void ThreeLieAlgebra::rebuild_terms() {
  terms_.clear();
  for (int i = 0; i < d_; ++i)
    for (int j = i + 1; j < d_; ++j)
      for (int k = j + 1; k < d_; ++k) {
        const Vec& v = on_basis(i, j, k);
        if (!is_zero(v)) terms_.push_back({i, j, k, v});
      }
}

Tensor3 ThreeLieAlgebra::tensor() const {
  Tensor3 t(d_, d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      for (int k = 0; k < d_; ++k)
        for (int c = 0; c < d_; ++c) t.at(i, j, k, c) = on_basis(i, j, k)[c];
  return t;
}

Vec bracket(const ThreeLieAlgebra& A, const Vec& x, const Vec& y, const Vec& z) {
  const size_t d = static_cast<size_t>(A.dim());
  if (x.size() != d || y.size() != d || z.size() != d) throw InputError("bracket argument dimension mismatch");
  return bracket_t(A, x, y, z);
}

Verdict check_fundamental_identity(const ThreeLieAlgebra& A, Exec exec) {
  const int d = A.dim();
  std::vector<std::array<int, 5>> tuples;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v)
          for (int w = v + 1; w < d; ++w) tuples.push_back({a, b, u, v, w});
  auto hit = first_hit<Verdict>(tuples.size(), exec, [&](size_t n) -> std::optional<Verdict> {
    auto [a, b, u, v, w] = tuples[n];
    Vec x = unit(d, a), y = unit(d, b), eu = unit(d, u), ev = unit(d, v), ew = unit(d, w);
    Vec r = bracket(A, x, y, A.on_basis(u, v, w));
    r = r - bracket(A, A.on_basis(a, b, u), ev, ew);
    r = r - bracket(A, eu, A.on_basis(a, b, v), ew);
    r = r - bracket(A, eu, ev, A.on_basis(a, b, w));
    if (is_zero(r)) return std::nullopt;
    return Verdict::fail("fundamental identity", {a, b, u, v, w}, r);
  });
  return hit ? *hit : Verdict::pass();
}

Matrix Representation::on_basis(int a, int b) const {
  if (a == b) return Matrix(dim, dim);
  WedgeBasis wb(algebra.dim());
  return a < b ? rho[wb.index(a, b)] : -rho[wb.index(b, a)];
}

Matrix Representation::of(const Vec& x, const Vec& y) const {
  WedgeBasis wb(algebra.dim());
  Vec w = wedge(wb, x, y);
  Matrix m(dim, dim);
  for (int p = 0; p < wb.size(); ++p)
    if (!w[p].is_zero()) m = m + w[p] * rho[p];
  return m;
}

Vec Representation::act(const Vec& x, const Vec& y, const Vec& v) const { return of(x, y).apply(v); }

Representation zero_representation(const ThreeLieAlgebra& A, int dim) {
  Representation r{A, dim, {}};
  r.rho.assign(WedgeBasis(A.dim()).size(), Matrix(dim, dim));
  return r;
}

Representation adjoint(const ThreeLieAlgebra& A) {
  const int d = A.dim();
  Representation r = zero_representation(A, d);
  WedgeBasis wb(d);
  for (int p = 0; p < wb.size(); ++p) {
    auto [a, b] = wb.pair(p);
    for (int z = 0; z < d; ++z) {
      const Vec& col = A.on_basis(a, b, z);
      for (int c = 0; c < d; ++c) r.rho[p](c, z) = col[c];
    }
  }
  return r;
}

namespace {

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

Verdict check_representation(const Representation& r) {
  const ThreeLieAlgebra& A = r.algebra;
  const int d = A.dim();
  WedgeBasis wb(d);
  if (static_cast<int>(r.rho.size()) != wb.size()) throw InputError("representation needs one matrix per wedge pair");
  for (const auto& m : r.rho)
    if (m.rows() != r.dim || m.cols() != r.dim) throw InputError("representation matrix has wrong size");

  for (int p = 0; p < wb.size(); ++p)
    for (int q = 0; q < wb.size(); ++q) {
      auto [x1, x2] = wb.pair(p);
      auto [x3, x4] = wb.pair(q);
      Matrix lhs = r.rho[p] * r.rho[q] - r.rho[q] * r.rho[p];
      Matrix rhs = r.of(A.on_basis(x1, x2, x3), unit(d, x4)) + r.of(unit(d, x3), A.on_basis(x1, x2, x4));
      Matrix res = lhs - rhs;
      if (!res.is_zero()) return Verdict::fail("representation (commutator)", {x1, x2, x3, x4}, flatten(res));
    }
  for (int x1 = 0; x1 < d; ++x1)
    for (int x2 = 0; x2 < d; ++x2)
      for (int x3 = x2 + 1; x3 < d; ++x3)
        for (int x4 = x3 + 1; x4 < d; ++x4) {
          Matrix lhs = r.of(unit(d, x1), A.on_basis(x2, x3, x4));
          Matrix rhs = r.on_basis(x3, x4) * r.on_basis(x1, x2) - r.on_basis(x2, x4) * r.on_basis(x1, x3) +
                       r.on_basis(x2, x3) * r.on_basis(x1, x4);
          Matrix res = lhs - rhs;
          if (!res.is_zero()) return Verdict::fail("representation (bracket)", {x1, x2, x3, x4}, flatten(res));
        }
  return Verdict::pass();
}

Verdict check_action(const ActionPair& p) {
  const int dg = p.acting.dim(), dh = p.acted.dim();
  if (p.rho.dim != dh) throw InputError("action must act on the acted algebra's space");
  WedgeBasis wg(dg);
  for (int a = 0; a < wg.size(); ++a) {
    auto [x, y] = wg.pair(a);
    for (int u = 0; u < dh; ++u) {
      Vec img = p.rho.rho[a].column(u);
      for (int s = 0; s < dh; ++s)
        for (int t = s + 1; t < dh; ++t) {
          Vec r = bracket(p.acted, img, unit(dh, s), unit(dh, t));
          if (!is_zero(r)) return Verdict::fail("action lands in the center", {x, y, u, s, t}, r);
        }
    }
    for (int s = 0; s < dh; ++s)
      for (int t = s + 1; t < dh; ++t)
        for (int w = t + 1; w < dh; ++w) {
          Vec r = p.rho.rho[a].apply(p.acted.on_basis(s, t, w));
          if (!is_zero(r)) return Verdict::fail("action kills brackets", {x, y, s, t, w}, r);
        }
  }
  return Verdict::pass();
}

DerivedAndCenter derived_and_center(const ThreeLieAlgebra& A) {
  const int d = A.dim();
  std::vector<Vec> images;
  for (const auto& t : A.terms()) images.push_back(t.value);
  DerivedAndCenter out;
  out.derived = span_basis(images, d);
  WedgeBasis wb(d);
  Matrix stack(wb.size() * d, d);
  for (int p = 0; p < wb.size(); ++p) {
    auto [a, b] = wb.pair(p);
    for (int x = 0; x < d; ++x) {
      const Vec& v = A.on_basis(a, b, x);
      for (int c = 0; c < d; ++c) stack(p * d + c, x) = v[c];
    }
  }
  out.center = rank_kernel(stack).kernel;
  return out;
}

bool derived_in_center(const ThreeLieAlgebra& A) {
  const int d = A.dim();
  for (const auto& t : A.terms())
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        if (!is_zero(bracket(A, unit(d, a), unit(d, b), t.value))) return false;
  return true;
}

namespace {

template <class Residual>
Verdict sweep_triples(int d, const std::string& label, Residual&& res) {
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec r = res(unit(d, i), unit(d, j), unit(d, k));
        if (!is_zero(r)) return Verdict::fail(label, {i, j, k}, r);
      }
  return Verdict::pass();
}

void require_square(const ThreeLieAlgebra& A, const Matrix& M) {
  if (M.rows() != A.dim() || M.cols() != A.dim()) throw InputError("operator must be square of the algebra's dimension");
}

}  // namespace

Verdict check_nijenhuis_operator(const ThreeLieAlgebra& A, const Matrix& N) {
  require_square(A, N);
  return sweep_triples(A.dim(), "Nijenhuis", [&](const Vec& x, const Vec& y, const Vec& z) {
    Vec nx = N.apply(x), ny = N.apply(y), nz = N.apply(z);
    Vec two = bracket(A, nx, ny, z) + bracket(A, x, ny, nz) + bracket(A, nx, y, nz);
    Vec one = bracket(A, nx, y, z) + bracket(A, x, ny, z) + bracket(A, x, y, nz);
    Vec r = bracket(A, nx, ny, nz) - N.apply(two - N.apply(one - N.apply(bracket(A, x, y, z))));
    return r;
  });
}

ProductStructureReport check_product_structure(const ThreeLieAlgebra& A, const Matrix& E) {
  require_square(A, E);
  const int d = A.dim();
  ProductStructureReport rep;
  Matrix I = Matrix::identity(d);
  rep.involutive = (E * E == I);
  rep.not_plus_minus_identity = !(E == I) && !(E == -I);
  rep.integrability = sweep_triples(d, "integrability", [&](const Vec& x, const Vec& y, const Vec& z) {
    Vec ex = E.apply(x), ey = E.apply(y), ez = E.apply(z);
    Vec rhs = bracket(A, ex, ey, ez) + bracket(A, ex, y, z) + bracket(A, x, ey, z) + bracket(A, x, y, ez) -
              E.apply(bracket(A, ex, ey, z) + bracket(A, x, ey, ez) + bracket(A, ex, y, ez));
    return E.apply(bracket(A, x, y, z)) - rhs;
  });
  if (rep.involutive) {
    rep.plus = rank_kernel(E - I).kernel;
    rep.minus = rank_kernel(E + I).kernel;
    auto closed = [&](const std::vector<Vec>& B, int sign) {
      for (size_t p = 0; p < B.size(); ++p)
        for (size_t q = p + 1; q < B.size(); ++q)
          for (size_t r = q + 1; r < B.size(); ++r) {
            Vec v = bracket(A, B[p], B[q], B[r]);
            // component along the other eigenspace is (v - sign*Ev)/2
            if (!is_zero(v - Scalar(sign) * E.apply(v))) return false;
          }
      return true;
    };
    rep.plus_subalgebra = closed(rep.plus, 1);
    rep.minus_subalgebra = closed(rep.minus, -1);
  }
  if (!rep.involutive) rep.verdict = Verdict::fail("E^2 = id", {}, {});
  else if (!rep.not_plus_minus_identity) rep.verdict = Verdict::fail("E != +-id", {}, {});
  else rep.verdict = rep.integrability;
  return rep;
}

bool is_automorphism(const ThreeLieAlgebra& A, const Matrix& psi) {
  require_square(A, psi);
  if (!inverse(psi)) return false;
  return sweep_triples(A.dim(), "automorphism", [&](const Vec& x, const Vec& y, const Vec& z) {
           return psi.apply(bracket(A, x, y, z)) - bracket(A, psi.apply(x), psi.apply(y), psi.apply(z));
         }).ok;
}

}  // namespace mrb
