#include "mrb/linfinity.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "mrb/error.hpp"

namespace mrb {

namespace {

void require_endo(const Cochain& c) {
  if (c.in_dim() != c.out_dim()) throw InputError("graded cochains must map a space to itself");
}

//! Value of P o Q at one basis tuple.
class CircleKernel {
 public:
  CircleKernel(const Cochain& P, const Cochain& Q) : P_(P), Q_(Q), p_(P.slots()), q_(Q.slots()) {
    for (int k = 1; k <= p_; ++k) inner_.push_back(shuffles(k - 1, q_));
    outer_ = shuffles(p_, q_);
  }

  Vec operator()(const std::vector<int>& pairs, int last) const {
    const int n = P_.out_dim();
    const WedgeBasis& wb = P_.wedges();
    Vec out(n);
    std::vector<SparseVec> pargs(p_);
    std::vector<int> qpairs(q_);
    const SparseVec xlast = sparse_unit(last);

    for (int k = 1; k <= p_; ++k) {
      const int split = k + q_ - 1;  // 0-based index of the wedge that gets split
      const auto [xa, ya] = wb.pair(pairs[split]);
      const Scalar base_sign = ((k - 1) * q_) % 2 ? Scalar(-1) : Scalar(1);
      for (const auto& s : inner_[k - 1]) {
        for (int t = 0; t < k - 1; ++t) pargs[t] = sparse_unit(pairs[s.perm[t]]);
        for (int t = 0; t < q_; ++t) qpairs[t] = pairs[s.perm[k - 1 + t]];
        for (int t = split + 1; t < p_ + q_; ++t) pargs[t - q_] = sparse_unit(pairs[t]);
        const Scalar sign = s.sign < 0 ? -base_sign : base_sign;
        const SparseVec qx = sparse(Q_.eval_basis(qpairs, xa));
        const SparseVec qy = sparse(Q_.eval_basis(qpairs, ya));
        pargs[k - 1] = sparse_wedge(wb, qx, sparse_unit(ya));
        P_.accumulate(pargs, xlast, sign, out);
        pargs[k - 1] = sparse_wedge(wb, sparse_unit(xa), qy);
        P_.accumulate(pargs, xlast, sign, out);
      }
    }

    const Scalar base_sign = (p_ * q_) % 2 ? Scalar(-1) : Scalar(1);
    for (const auto& s : outer_) {
      for (int t = 0; t < p_; ++t) pargs[t] = sparse_unit(pairs[s.perm[t]]);
      for (int t = 0; t < q_; ++t) qpairs[t] = pairs[s.perm[p_ + t]];
      const Scalar sign = s.sign < 0 ? -base_sign : base_sign;
      P_.accumulate(pargs, sparse(Q_.eval_basis(qpairs, last)), sign, out);
    }
    return out;
  }

 private:
  const Cochain& P_;
  const Cochain& Q_;
  int p_, q_;
  std::vector<std::vector<Shuffle>> inner_;
  std::vector<Shuffle> outer_;
};

//! out(tuple) += coef * (P o Q)(tuple) for every tuple with keep(tuple).
void circle_into(const Cochain& P, const Cochain& Q, const Scalar& coef, Cochain& out, Exec exec,
                 const std::function<bool(const std::vector<int>&, int)>& keep) {
  CircleKernel kernel(P, Q);
  const int n = out.out_dim();
  for_each_index(static_cast<size_t>(out.tuple_count()), exec, [&](size_t t) {
    std::vector<int> pairs;
    const int last = out.decode(static_cast<long>(t), pairs);
    if (keep && !keep(pairs, last)) return;
    Vec v = kernel(pairs, last);
    for (int c = 0; c < n; ++c)
      if (!v[c].is_zero()) out.at(static_cast<long>(t), c) += coef * v[c];
  });
}

Cochain bracket_filtered(const Cochain& P, const Cochain& Q, Exec exec,
                         const std::function<bool(const std::vector<int>&, int)>& keep) {
  require_endo(P);
  require_endo(Q);
  if (P.in_dim() != Q.in_dim()) throw InputError("graded cochains live on different spaces");
  Cochain out(P.in_dim(), P.in_dim(), P.slots() + Q.slots());
  circle_into(P, Q, Scalar(1), out, exec, keep);
  circle_into(Q, P, (P.slots() * Q.slots()) % 2 ? Scalar(1) : Scalar(-1), out, exec, keep);
  return out;
}

std::function<bool(const std::vector<int>&, int)> abelian_filter(const SumSpace& sp, const WedgeBasis& wb) {
  return [&sp, &wb](const std::vector<int>& pairs, int last) {
    if (!sp.in_h(last)) return false;
    for (int p : pairs)
      if (!sp.in_h(wb.pair(p).first)) return false;  // pairs are increasing, so first in h covers both
    return true;
  };
}

void keep_g_outputs(const SumSpace& sp, Cochain& c) {
  for (long t = 0; t < c.tuple_count(); ++t)
    for (int k = sp.g; k < sp.dim(); ++k) c.at(t, k) = Scalar();
}

Scalar power(const Scalar& s, int e) {
  Scalar r(1);
  for (int i = 0; i < e; ++i) r *= s;
  return r;
}

Scalar factorial(int n) {
  Scalar r(1);
  for (int i = 2; i <= n; ++i) r *= Scalar(i);
  return r;
}

}  // namespace

Cochain circle_product(const Cochain& P, const Cochain& Q, Exec exec) {
  require_endo(P);
  require_endo(Q);
  if (P.in_dim() != Q.in_dim()) throw InputError("graded cochains live on different spaces");
  Cochain out(P.in_dim(), P.in_dim(), P.slots() + Q.slots());
  circle_into(P, Q, Scalar(1), out, exec, nullptr);
  return out;
}

Cochain graded_bracket(const Cochain& P, const Cochain& Q, Exec exec) { return bracket_filtered(P, Q, exec, nullptr); }

Cochain projected_bracket(const SumSpace& sp, const Cochain& P, const Cochain& Q, Exec exec) {
  if (P.in_dim() != sp.dim()) throw InputError("cochain does not live on g + h");
  WedgeBasis wb(sp.dim());
  Cochain out = bracket_filtered(P, Q, exec, abelian_filter(sp, wb));
  keep_g_outputs(sp, out);
  return out;
}

Cochain bracket_cochain(const ThreeLieAlgebra& A) {
  const int d = A.dim();
  Cochain c(d, d, 1);
  WedgeBasis wb(d);
  for (int p = 0; p < wb.size(); ++p) {
    auto [a, b] = wb.pair(p);
    const int pairs[1] = {p};
    for (int z = 0; z < d; ++z) c.set_value(c.tuple_index(pairs, z), A.on_basis(a, b, z));
  }
  return c;
}

std::optional<ThreeLieAlgebra> cochain_bracket(const Cochain& c) {
  if (c.slots() != 1 || c.in_dim() != c.out_dim()) return std::nullopt;
  const int d = c.in_dim();
  ThreeLieAlgebra A(d);
  WedgeBasis wb(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        const int pairs[1] = {wb.index(i, j)};
        A.set(i, j, k, c.eval_basis(pairs, k));
      }
  if (!(bracket_cochain(A) == c)) return std::nullopt;
  return A;
}

Cochain abelian_part(const SumSpace& sp, const Cochain& c) {
  if (c.in_dim() != sp.dim() || c.out_dim() != sp.dim()) throw InputError("cochain does not live on g + h");
  Cochain out(sp.h, sp.g, c.slots());
  WedgeBasis we(sp.dim());
  std::vector<int> pairs, epairs(c.slots());
  for (long t = 0; t < out.tuple_count(); ++t) {
    const int last = out.decode(t, pairs);
    for (int s = 0; s < c.slots(); ++s) {
      auto [a, b] = out.wedges().pair(pairs[s]);
      epairs[s] = we.index(sp.g + a, sp.g + b);
    }
    const long et = c.tuple_index(epairs, sp.g + last);
    for (int k = 0; k < sp.g; ++k) out.at(t, k) = c.at(et, k);
  }
  return out;
}

Cochain embed_abelian(const SumSpace& sp, const Cochain& theta) {
  if (theta.in_dim() != sp.h || theta.out_dim() != sp.g) throw InputError("abelian elements map h-cochains to g");
  Cochain out(sp.dim(), sp.dim(), theta.slots());
  WedgeBasis we(sp.dim());
  std::vector<int> pairs, epairs(theta.slots());
  for (long t = 0; t < theta.tuple_count(); ++t) {
    const int last = theta.decode(t, pairs);
    for (int s = 0; s < theta.slots(); ++s) {
      auto [a, b] = theta.wedges().pair(pairs[s]);
      epairs[s] = we.index(sp.g + a, sp.g + b);
    }
    const long et = out.tuple_index(epairs, sp.g + last);
    for (int k = 0; k < sp.g; ++k) out.at(et, k) = theta.at(t, k);
  }
  return out;
}

Cochain project_abelian(const SumSpace& sp, const Cochain& c) { return embed_abelian(sp, abelian_part(sp, c)); }

Cochain embed_operator(const SumSpace& sp, const Matrix& T) {
  if (T.rows() != sp.g || T.cols() != sp.h) throw InputError("operator must map h to g");
  return embed_abelian(sp, Cochain::from_matrix(T));
}

Cochain assemble_delta(const DeltaParts& parts, const Scalar& w) {
  const int g = parts.pi.dim(), h = parts.mu.dim();
  if (parts.rho.algebra.dim() != g || parts.rho.dim != h) throw InputError("rho must be an action of g on h");
  if (parts.zeta.algebra.dim() != h || parts.zeta.dim != g) throw InputError("zeta must be an action of h on g");
  const int n = g + h;
  Cochain c(n, n, 1);
  WedgeBasis wb(n);
  for (int p = 0; p < wb.size(); ++p) {
    auto [a, b] = wb.pair(p);
    const int pairs[1] = {p};
    for (int z = 0; z < n; ++z) {
      if (z == a || z == b) continue;
      int idx[3] = {a, b, z};
      int sign = 1;
      // sort the three indices, tracking the permutation sign
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j + 1 < 3 - i; ++j)
          if (idx[j] > idx[j + 1]) {
            std::swap(idx[j], idx[j + 1]);
            sign = -sign;
          }
      const int nh = (idx[0] >= g) + (idx[1] >= g) + (idx[2] >= g);
      Vec v(n);
      if (nh == 0) {
        const Vec& r = parts.pi.on_basis(idx[0], idx[1], idx[2]);
        for (int k = 0; k < g; ++k) v[k] = r[k];
      } else if (nh == 1) {
        Vec r = parts.rho.on_basis(idx[0], idx[1]).column(idx[2] - g);
        for (int k = 0; k < h; ++k) v[g + k] = r[k];
      } else if (nh == 2) {
        // [x, u, v] = [u, v, x] = zeta(u, v) x
        Vec r = parts.zeta.on_basis(idx[1] - g, idx[2] - g).column(idx[0]);
        for (int k = 0; k < g; ++k) v[k] = w * r[k];
      } else {
        const Vec& r = parts.mu.on_basis(idx[0] - g, idx[1] - g, idx[2] - g);
        for (int k = 0; k < h; ++k) v[g + k] = w * r[k];
      }
      c.set_value(c.tuple_index(pairs, z), sign > 0 ? v : -v);
    }
  }
  return c;
}

DeltaParts decompose_delta(const SumSpace& sp, const Cochain& delta) {
  if (delta.slots() != 1) throw InputError("degree-one elements have exactly one slot");
  if (delta.in_dim() != sp.dim() || delta.out_dim() != sp.dim()) throw InputError("cochain does not live on g + h");
  const int g = sp.g, h = sp.h;
  WedgeBasis wb(sp.dim());
  auto at = [&](int a, int b, int z) {
    const int pairs[1] = {wb.index(a, b)};
    return delta.eval_basis(pairs, z);
  };
  DeltaParts parts{ThreeLieAlgebra(g), {}, ThreeLieAlgebra(h), {}};
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j)
      for (int k = j + 1; k < g; ++k) {
        Vec r = at(i, j, k);
        parts.pi.set(i, j, k, Vec(r.begin(), r.begin() + g));
      }
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
      for (int k = j + 1; k < h; ++k) {
        Vec r = at(g + i, g + j, g + k);
        parts.mu.set(i, j, k, Vec(r.begin() + g, r.end()));
      }
  parts.rho = zero_representation(parts.pi, h);
  WedgeBasis wg(g), wh(h);
  for (int p = 0; p < wg.size(); ++p) {
    auto [a, b] = wg.pair(p);
    for (int u = 0; u < h; ++u) {
      Vec r = at(a, b, g + u);
      for (int k = 0; k < h; ++k) parts.rho.rho[p](k, u) = r[g + k];
    }
  }
  parts.zeta = zero_representation(parts.mu, g);
  for (int p = 0; p < wh.size(); ++p) {
    auto [u, v] = wh.pair(p);
    for (int x = 0; x < g; ++x) {
      Vec r = at(g + u, g + v, x);
      for (int k = 0; k < g; ++k) parts.zeta.rho[p](k, x) = r[k];
    }
  }
  if (!(assemble_delta(parts) == delta))
    throw InputError("element is not an alternating, component-preserving degree-one element on g + h");
  return parts;
}

PairReport relative_pair_report(const DeltaParts& parts, Exec exec) {
  PairReport r;
  const Cochain delta = assemble_delta(parts);
  r.bracket_vanishes = graded_bracket(delta, delta, exec).is_zero();
  r.sum_identity = check_fundamental_identity(*cochain_bracket(delta), exec);
  r.pi_identity = check_fundamental_identity(parts.pi, exec);
  r.mu_identity = check_fundamental_identity(parts.mu, exec);
  r.rho_action = check_action({parts.pi, parts.mu, parts.rho});
  r.zeta_action = check_action({parts.mu, parts.pi, parts.zeta});
  return r;
}

Cochain nu(const Cochain& f, const Scalar& s2) {
  require_endo(f);
  const int m = f.in_dim(), n = 2 * m;
  Cochain out(n, n, f.slots());
  WedgeBasis we(n);
  const WedgeBasis& wg = f.wedges();
  std::vector<int> pairs, fpairs(f.slots());
  for (long t = 0; t < out.tuple_count(); ++t) {
    const int last = out.decode(t, pairs);
    int primes = last >= m;
    int sign = 1;
    bool zero = false;
    for (int s = 0; s < f.slots() && !zero; ++s) {
      auto [a, b] = we.pair(pairs[s]);
      primes += (a >= m) + (b >= m);
      const int a0 = a % m, b0 = b % m;
      if (a0 == b0) zero = true;
      else if (a0 < b0) fpairs[s] = wg.index(a0, b0);
      else {
        fpairs[s] = wg.index(b0, a0);
        sign = -sign;
      }
    }
    if (zero) continue;
    const Scalar coef = Scalar(sign) * power(s2, primes / 2);
    const long ft = f.tuple_index(fpairs, last % m);
    const int offset = primes % 2 ? m : 0;
    for (int k = 0; k < m; ++k)
      if (!f.at(ft, k).is_zero()) out.at(t, offset + k) = coef * f.at(ft, k);
  }
  return out;
}

std::optional<Cochain> nu_inverse(const Cochain& c, const Scalar& s2) {
  require_endo(c);
  if (c.in_dim() % 2) return std::nullopt;
  const int m = c.in_dim() / 2;
  Cochain f(m, m, c.slots());
  WedgeBasis we(c.in_dim());
  std::vector<int> pairs, epairs(c.slots());
  for (long t = 0; t < f.tuple_count(); ++t) {
    const int last = f.decode(t, pairs);
    for (int s = 0; s < c.slots(); ++s) {
      auto [a, b] = f.wedges().pair(pairs[s]);
      epairs[s] = we.index(a, b);
    }
    const long et = c.tuple_index(epairs, last);
    for (int k = 0; k < m; ++k) f.at(t, k) = c.at(et, k);
  }
  if (!(nu(f, s2) == c)) return std::nullopt;
  return f;
}

bool in_h_subspace(const SumSpace& sp, const Cochain& c) {
  if (c.in_dim() != sp.dim() || c.out_dim() != sp.dim()) throw InputError("cochain does not live on g + h");
  WedgeBasis wb(sp.dim());
  std::vector<int> pairs;
  for (long t = 0; t < c.tuple_count(); ++t) {
    const int last = c.decode(t, pairs);
    bool touches_h = sp.in_h(last);
    for (int p : pairs) touches_h = touches_h || sp.in_h(wb.pair(p).second);
    if (!touches_h) continue;
    for (int k = 0; k < sp.g; ++k)
      if (!c.at(t, k).is_zero()) return false;
  }
  return true;
}

Cochain iota(const SumSpace& sp, const Cochain& c) {
  if (!in_h_subspace(sp, c)) throw InputError("cochain has a g-valued part on inputs from h");
  return c;
}

bool LValue::is_zero() const {
  auto z = [](const Cochain& c) { return c.is_zero(); };
  return std::all_of(shifted.begin(), shifted.end(), z) && std::all_of(abelian.begin(), abelian.end(), z);
}

namespace {

void add_into(std::vector<Cochain>& dst, const Cochain& c, const Scalar& coef) {
  if (c.is_zero() || coef.is_zero()) return;
  for (auto& d : dst)
    if (d.slots() == c.slots()) {
      d += coef * c;
      return;
    }
  dst.push_back(coef * c);
}

Cochain part(const std::vector<Cochain>& v, int slots, int dim) {
  for (const auto& c : v)
    if (c.slots() == slots) return c;
  return Cochain(dim, dim, slots);
}

}  // namespace

void LValue::add(const LValue& o, const Scalar& coef) {
  for (const auto& c : o.shifted) add_into(shifted, c, coef);
  for (const auto& c : o.abelian) add_into(abelian, c, coef);
}

Cochain LValue::shifted_part(int slots, int dim) const { return part(shifted, slots, dim); }
Cochain LValue::abelian_part(int slots, int dim) const { return part(abelian, slots, dim); }

DerivedLinf::DerivedLinf(SumSpace sp, std::optional<Cochain> Delta, Exec exec)
    : sp_(sp), Delta_(std::move(Delta)), exec_(exec) {
  if (Delta_) {
    if (Delta_->in_dim() != sp_.dim() || Delta_->out_dim() != sp_.dim() || Delta_->slots() != 1)
      throw InputError("Delta must be a degree-one cochain on g + h");
    if (!project_abelian(sp_, *Delta_).is_zero()) throw InputError("Delta must lie in the kernel of the projection");
    if (Delta_->is_zero()) Delta_.reset();
  }
}

LValue DerivedLinf::l(std::span<const LTerm> xs) const {
  LValue out;
  const int k = static_cast<int>(xs.size());
  std::vector<int> vpos;
  for (int i = 0; i < k; ++i)
    if (xs[i].kind == LTerm::shifted) vpos.push_back(i);

  if (vpos.empty()) {
    if (!Delta_ || k == 0) return out;
    Cochain c = *Delta_;
    for (int i = 0; i + 1 < k; ++i) c = graded_bracket(c, xs[i].c, exec_);
    out.abelian.push_back(projected_bracket(sp_, c, xs[k - 1].c, exec_));
    return out;
  }
  if (vpos.size() == 1) {
    const int i = vpos[0];
    const LTerm& x = xs[i];
    int passed = 0;
    for (int j = 0; j < i; ++j) passed += xs[j].degree();
    const Scalar sign = (x.degree() * passed) % 2 ? Scalar(-1) : Scalar(1);
    if (k == 1) {
      if (Delta_) out.shifted.push_back(Scalar(-1) * graded_bracket(*Delta_, x.c, exec_));
      out.abelian.push_back(project_abelian(sp_, x.c));
      return out;
    }
    std::vector<const Cochain*> rest;
    for (int j = 0; j < k; ++j)
      if (j != i) rest.push_back(&xs[j].c);
    Cochain c = x.c;
    for (size_t j = 0; j + 1 < rest.size(); ++j) c = graded_bracket(c, *rest[j], exec_);
    out.abelian.push_back(sign * projected_bracket(sp_, c, *rest.back(), exec_));
    return out;
  }
  if (vpos.size() == 2 && k == 2) {
    const Scalar sign = xs[0].c.slots() % 2 ? Scalar(-1) : Scalar(1);
    out.shifted.push_back(sign * graded_bracket(xs[0].c, xs[1].c, exec_));
  }
  return out;
}

LValue DerivedLinf::l_expanded(std::span<const std::vector<LTerm>> xs) const {
  LValue out;
  std::vector<LTerm> word;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == xs.size()) {
      out.add(l(word));
      return;
    }
    for (const auto& t : xs[i]) {
      word.push_back(t);
      rec(i + 1);
      word.pop_back();
    }
  };
  rec(0);
  return out;
}

int DerivedLinf::arity_bound(std::span<const LTerm> alpha) const {
  // Abelian elements attach only to a leg or the output of the single shifted (or Delta)
  // factor, each at most once, so l_k vanishes once k - 1 exceeds 2 * slots + 2.
  int slots = Delta_ ? Delta_->slots() : -1;
  for (const auto& t : alpha)
    if (t.kind == LTerm::shifted) slots = std::max(slots, t.c.slots());
  return slots < 0 ? 2 : std::max(2, 2 * slots + 3);
}

std::vector<LValue> mc_terms(const DerivedLinf& L, std::span<const LTerm> alpha) {
  std::vector<LTerm> a(alpha.begin(), alpha.end());
  for (const auto& t : a)
    if (t.degree() != 0) throw InputError("Maurer-Cartan candidates have degree zero");
  const int K = L.arity_bound(a);
  std::vector<LValue> terms;
  for (int k = 1; k <= K; ++k) {
    std::vector<std::vector<LTerm>> xs(k, a);
    LValue v;
    v.add(L.l_expanded(xs), Scalar(1) / factorial(k));
    terms.push_back(std::move(v));
  }
  return terms;
}

namespace {

DeltaParts parts_of(const RelativeMRBDatum& d) { return {d.g, d.rho, d.h, d.zeta}; }

//! The two closed-form displays for delta = pi + rho + w (mu + zeta) and T: h -> g.
std::pair<Cochain, Cochain> closed_forms(const DeltaParts& parts, const Scalar& w, const Matrix& T) {
  const int g = parts.pi.dim(), h = parts.mu.dim();
  Cochain lin(h, g, 1), cub(h, g, 1);
  WedgeBasis wh(h);
  for (int p = 0; p < wh.size(); ++p) {
    auto [a, b] = wh.pair(p);
    const int pairs[1] = {p};
    for (int c = 0; c < h; ++c) {
      const Vec u = unit(h, a), v = unit(h, b), x = unit(h, c);
      const Vec tu = T.apply(u), tv = T.apply(v), tx = T.apply(x);
      Vec l = parts.zeta.act(u, v, tx) + parts.zeta.act(v, x, tu) + parts.zeta.act(x, u, tv) -
              T.apply(bracket(parts.mu, u, v, x));
      lin.set_value(lin.tuple_index(pairs, c), w * l);
      Vec inner = parts.rho.act(tu, tv, x) + parts.rho.act(tv, tx, u) + parts.rho.act(tx, tu, v);
      cub.set_value(cub.tuple_index(pairs, c), bracket(parts.pi, tu, tv, tx) - T.apply(inner));
    }
  }
  return {lin, cub};
}

MCReport run_mc(const SumSpace& sp, const Cochain& delta, const Matrix& T, const DeltaParts& parts,
                const Scalar& w, const Matrix& T_closed, Exec exec) {
  DerivedLinf L(sp, std::nullopt, exec);
  const Cochain t = embed_operator(sp, T);
  const std::vector<LTerm> alpha = {LTerm::V(delta), LTerm::A(t)};
  MCReport r;
  r.terms = mc_terms(L, alpha);
  for (const auto& v : r.terms) r.total.add(v);
  r.ok = r.total.is_zero();
  r.linear = abelian_part(sp, projected_bracket(sp, delta, t, exec));
  const Cochain d1 = graded_bracket(delta, t, exec);
  const Cochain d2 = graded_bracket(d1, t, exec);
  r.cubic = abelian_part(sp, projected_bracket(sp, d2, t, exec));
  std::tie(r.linear_closed, r.cubic_closed) = closed_forms(parts, w, T_closed);
  r.closed_forms_agree = r.linear == r.linear_closed && r.cubic == Scalar(6) * r.cubic_closed;
  return r;
}

}  // namespace

MCReport mc_check_relative_modified(const RelativeMRBDatum& d, Exec exec) {
  if (d.lambda.is_zero()) throw PreconditionError("nonzero weight", "lambda must be nonzero");
  const SumSpace sp{d.g.dim(), d.h.dim()};
  const DeltaParts parts = parts_of(d);
  return run_mc(sp, assemble_delta(parts, d.lambda), d.T, parts, d.lambda, d.T, exec);
}

std::vector<LTerm> absolute_mc_element(const WeightedOperator& w) {
  auto root = w.lambda.sqrt();
  if (!root)
    throw PreconditionError("square weight", "lambda = " + w.lambda.str() +
                                                 " has no square root here; open a quadratic session for it");
  const int m = w.algebra.dim();
  const SumSpace sp{m, m};
  return {LTerm::V(nu(bracket_cochain(w.algebra))), LTerm::A(embed_operator(sp, root->inverse() * w.R))};
}

MCReport mc_check_absolute(const WeightedOperator& w, Exec exec) {
  auto alpha = absolute_mc_element(w);
  const int m = w.algebra.dim();
  const SumSpace sp{m, m};
  const DeltaParts parts{w.algebra, adjoint(w.algebra), w.algebra, adjoint(w.algebra)};
  const Matrix T = alpha[1].c.as_matrix();
  Matrix Tc(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) Tc(i, j) = T(i, m + j);
  return run_mc(sp, alpha[0].c, Tc, parts, Scalar(1), Tc, exec);
}

MCReport mc_check_relative_rb(const RelativeMRBDatum& d, Exec exec) {
  if (d.lambda.is_zero()) throw PreconditionError("nonzero weight", "lambda must be nonzero");
  const SumSpace sp{d.g.dim(), d.h.dim()};
  DeltaParts parts = parts_of(d);
  parts.zeta = zero_representation(d.h, d.g.dim());
  return run_mc(sp, iota(sp, assemble_delta(parts, d.lambda)), d.T, parts, d.lambda, d.T, exec);
}

TwistedLinf::TwistedLinf(DerivedLinf L, std::vector<LTerm> alpha) : L_(std::move(L)), alpha_(std::move(alpha)) {
  LValue total;
  for (const auto& v : mc_terms(L_, alpha_)) total.add(v);
  if (!total.is_zero()) throw PreconditionError("Maurer-Cartan", "alpha does not solve the Maurer-Cartan equation");
  const Cochain* x = nullptr;
  for (const auto& t : alpha_)
    if (t.kind == LTerm::shifted) {
      if (x) throw InputError("alpha must have a single shifted component");
      x = &t.c;
    }
  if (!x) return;
  const int bound = L_.arity_bound(alpha_);
  Cochain cur = *x;
  for (int j = 0; j < bound && !cur.is_zero(); ++j) {
    chain_.push_back(cur);
    Cochain next(cur.in_dim(), cur.out_dim(), cur.slots());
    for (const auto& t : alpha_)
      if (t.kind == LTerm::abelian) next += graded_bracket(cur, t.c, Exec::serial);
    cur = Scalar(1) / Scalar(j + 1) * next;
  }
}

LValue TwistedLinf::l(std::span<const LTerm> xs) const {
  std::vector<LTerm> all(alpha_);
  all.insert(all.end(), xs.begin(), xs.end());
  const int K = L_.arity_bound(all);
  LValue out;
  for (int i = 0; i + static_cast<int>(xs.size()) <= K; ++i) {
    std::vector<std::vector<LTerm>> words(i, alpha_);
    for (const auto& x : xs) words.push_back({x});
    out.add(L_.l_expanded(words), Scalar(1) / factorial(i));
  }
  return out;
}

Cochain TwistedLinf::differential_abelian(const Cochain& theta) const {
  const SumSpace& sp = L_.space();
  const Cochain e = embed_abelian(sp, theta);
  if (L_.has_delta()) {
    const LTerm x[1] = {LTerm::A(e)};
    return abelian_part(sp, l(x).abelian_part(theta.slots() + 1, sp.dim()));
  }
  Cochain acc(sp.dim(), sp.dim(), theta.slots() + 1);
  for (const auto& c : chain_) acc += projected_bracket(sp, c, e, Exec::serial);
  return abelian_part(sp, acc);
}

Matrix TwistedLinf::differential_matrix(int slots) const {
  const SumSpace& sp = L_.space();
  const Cochain proto(sp.h, sp.g, slots);
  const long n = proto.size();
  std::vector<Vec> cols(n);
  for_each_index(static_cast<size_t>(n), Exec::parallel, [&](size_t i) {
    Cochain theta = proto;
    theta.flat()[i] = Scalar(1);
    cols[i] = differential_abelian(theta).flat();
  });
  return Matrix::from_columns(cols, static_cast<int>(Cochain(sp.h, sp.g, slots + 1).size()));
}

}  // namespace mrb
