#include "mrb/cohomology.hpp"

#include "mrb/error.hpp"

namespace mrb {
namespace {

// rho(e_a, e_b) for all ordered pairs.
struct RepTable {
  int d;
  std::vector<Matrix> m;
  explicit RepTable(const Representation& r) : d(r.algebra.dim()), m(static_cast<size_t>(d) * d) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) m[static_cast<size_t>(a) * d + b] = r.on_basis(a, b);
  }
  const Matrix& operator()(int a, int b) const { return m[static_cast<size_t>(a) * d + b]; }
};

struct CoboundaryKernel {
  const Representation& r;
  const ThreeLieAlgebra& A;
  RepTable rho;
  WedgeBasis wb;
  std::vector<SparseVec> br;  // [e_a, e_b, e_c] sparse

  explicit CoboundaryKernel(const Representation& rep)
      : r(rep), A(rep.algebra), rho(rep), wb(rep.algebra.dim()) {
    const int d = A.dim();
    br.resize(static_cast<size_t>(d) * d * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) br[(static_cast<size_t>(a) * d + b) * d + c] = sparse(A.on_basis(a, b, c));
  }
  const SparseVec& bracket(int a, int b, int c) const {
    const int d = A.dim();
    return br[(static_cast<size_t>(a) * d + b) * d + c];
  }

  // Value of the coboundary of f at basis arguments (pairs, x).
  Vec value(const Cochain& f, const std::vector<int>& pairs, int x) const {
    const int n = static_cast<int>(pairs.size());
    const int m = f.out_dim();
    Vec out(m);
    std::vector<SparseVec> args;
    auto without = [&](int j) {
      args.clear();
      for (int i = 0; i < n; ++i)
        if (i != j) args.push_back(sparse_unit(pairs[i]));
    };
    auto ab = [&](int i) { return wb.pair(pairs[i]); };
    const Scalar sn = (n + 1) % 2 ? Scalar(-1) : Scalar(1);

    auto [an, bn] = ab(n - 1);
    without(n - 1);
    {
      Vec v = f.eval(args, sparse_unit(an));
      axpy(out, sn, rho(bn, x).apply(v));
      Vec u = f.eval(args, sparse_unit(bn));
      axpy(out, sn, rho(x, an).apply(u));
    }
    for (int j = 0; j < n; ++j) {
      auto [aj, bj] = ab(j);
      without(j);
      // 1-based index j+1: (-1)^{j+2} = (-1)^j and (-1)^{j+1}
      Scalar plus = j % 2 ? Scalar(-1) : Scalar(1);
      axpy(out, plus, rho.m[static_cast<size_t>(aj) * rho.d + bj].apply(f.eval(args, sparse_unit(x))));
      const SparseVec& bx = bracket(aj, bj, x);
      if (!bx.empty()) f.accumulate(args, bx, -plus, out);
      for (int k = j + 1; k < n; ++k) {
        auto [ak, bk] = ab(k);
        SparseVec w1 = sparse_wedge(wb, bracket(aj, bj, ak), sparse_unit(bk));
        SparseVec w2 = sparse_wedge(wb, sparse_unit(ak), bracket(aj, bj, bk));
        SparseVec w;
        {
          Vec dense(wb.size());
          for (auto& [p, c] : w1) dense[p] += c;
          for (auto& [p, c] : w2) dense[p] += c;
          w = sparse(dense);
        }
        if (w.empty()) continue;
        args.clear();
        for (int i = 0; i < n; ++i) {
          if (i == j) continue;
          args.push_back(i == k ? w : sparse_unit(pairs[i]));
        }
        f.accumulate(args, sparse_unit(x), -plus, out);
      }
    }
    return out;
  }

  Cochain apply(const Cochain& f) const {
    if (f.in_dim() != A.dim() || f.out_dim() != r.dim) throw InputError("cochain does not match the representation");
    Cochain out(f.in_dim(), f.out_dim(), f.slots() + 1);
    std::vector<int> pairs;
    for (long t = 0; t < out.tuple_count(); ++t) {
      int x = out.decode(t, pairs);
      out.set_value(t, value(f, pairs, x));
    }
    return out;
  }
};

}  // namespace

Cochain coboundary_3lie(const Representation& r, const Cochain& f) { return CoboundaryKernel(r).apply(f); }

Matrix coboundary_matrix(const Representation& r, int slots, Exec exec) {
  CoboundaryKernel K(r);
  const int d = r.algebra.dim();
  Cochain proto(d, r.dim, slots);
  Cochain target(d, r.dim, slots + 1);
  const long cols = proto.size();
  std::vector<Vec> columns(static_cast<size_t>(cols));
  for_each_index(static_cast<size_t>(cols), exec, [&](size_t j) {
    Cochain e(d, r.dim, slots);
    e.flat()[j] = 1;
    columns[j] = K.apply(e).flat();
  });
  return Matrix::from_columns(columns, static_cast<int>(target.size()));
}

Cochain partial_R(const WeightedOperator& w, const Cochain& f) { return coboundary_3lie(rho_R(w), f); }

Matrix ad_wedge(const ThreeLieAlgebra& A, const Vec& X) {
  const int d = A.dim();
  WedgeBasis wb(d);
  if (static_cast<int>(X.size()) != wb.size()) throw InputError("wedge vector has wrong length");
  Matrix m(d, d);
  for (int p = 0; p < wb.size(); ++p) {
    if (X[p].is_zero()) continue;
    auto [a, b] = wb.pair(p);
    for (int x = 0; x < d; ++x) {
      const Vec& v = A.on_basis(a, b, x);
      for (int c = 0; c < d; ++c)
        if (!v[c].is_zero()) m(c, x) += X[p] * v[c];
    }
  }
  return m;
}

Matrix d_R(const WeightedOperator& w, const Vec& X) {
  Matrix ad = ad_wedge(w.algebra, X);
  return w.R * ad - ad * w.R;
}

Vec closedness_display(const WeightedOperator& w, const Matrix& F, const Vec& x, const Vec& y, const Vec& z) {
  const auto& A = w.algebra;
  const Matrix& R = w.R;
  Vec fx = F.apply(x), fy = F.apply(y), fz = F.apply(z);
  Vec rx = R.apply(x), ry = R.apply(y), rz = R.apply(z);
  Vec lhs = bracket(A, fx, ry, rz) + bracket(A, rx, fy, rz) + bracket(A, rx, ry, fz);
  Vec six = bracket(A, fx, ry, z) + bracket(A, rx, fy, z) + bracket(A, x, fy, rz) + bracket(A, x, ry, fz) +
            bracket(A, rx, y, fz) + bracket(A, fx, y, rz);
  Vec inner = bracket(A, rx, ry, z) + bracket(A, x, ry, rz) + bracket(A, rx, y, rz);
  axpy(inner, w.lambda, bracket(A, x, y, z));
  Vec rhs = R.apply(six) + F.apply(inner);
  axpy(rhs, -w.lambda, bracket(A, fx, y, z) + bracket(A, x, fy, z) + bracket(A, x, y, fz));
  return lhs - rhs;
}

OperatorComplex::OperatorComplex(const WeightedOperator& w, long budget) : w_(w), rho_(rho_R(w)), budget_(budget) {}

long OperatorComplex::dim(int n) const {
  if (n < 1) throw InputError("operator complex starts in degree 1");
  const long d = w_.algebra.dim();
  const long P = d * (d - 1) / 2;
  if (n == 1) return P;
  long v = d * d;
  for (int i = 0; i < n - 2; ++i) {
    v *= P;
    if (v > budget_) return v;
  }
  return v;
}

Matrix OperatorComplex::differential(int n, Exec exec) const {
  if (dim(n) > budget_ || dim(n + 1) > budget_)
    throw BudgetError("cochain space in degree " + std::to_string(n + 1) + " exceeds the budget of " +
                      std::to_string(budget_));
  const int d = w_.algebra.dim();
  if (n == 1) {
    WedgeBasis wb(d);
    std::vector<Vec> cols;
    for (int p = 0; p < wb.size(); ++p) cols.push_back(Cochain::from_matrix(d_R(w_, unit(wb.size(), p))).flat());
    return Matrix::from_columns(cols, d * d);
  }
  return coboundary_matrix(rho_, n - 2, exec);
}

std::vector<CohomologyRow> cohomology_dims(const WeightedOperator& w, int max_degree, long budget, Exec exec) {
  if (max_degree < 1) throw InputError("max degree must be at least 1");
  OperatorComplex C(w, budget);
  for (int n = 1; n <= max_degree + 1; ++n)
    if (C.dim(n) > budget)
      throw BudgetError("cochain space in degree " + std::to_string(n) + " has dimension " +
                        std::to_string(C.dim(n)) + ", over the budget of " + std::to_string(budget));
  std::vector<CohomologyRow> rows;
  long prev_rank = 0;
  for (int n = 1; n <= max_degree; ++n) {
    long r = rank(C.differential(n, exec));
    long dc = C.dim(n);
    rows.push_back({n, dc, dc - r, prev_rank, dc - r - prev_rank});
    prev_rank = r;
  }
  return rows;
}

}  // namespace mrb
