#include "mrb/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "mrb/error.hpp"

namespace mrb {

bool GrLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

Poly Poly::constant(int nvars, const Scalar& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.t_[Monomial(nvars, 0)] = c;
  return p;
}

Poly Poly::variable(int nvars, int v) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[v] = 1;
  p.t_[m] = 1;
  return p;
}

int Poly::degree() const {
  if (t_.empty()) return -1;
  const auto& m = t_.begin()->first;
  return std::accumulate(m.begin(), m.end(), 0);
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly Poly::monic() const {
  if (t_.empty()) return *this;
  Scalar inv = t_.begin()->second.inverse();
  return *this * inv;
}

Scalar Poly::evaluate(const Vec& values) const {
  if (static_cast<int>(values.size()) != n_) throw InputError("polynomial evaluation needs one value per variable");
  Scalar total;
  for (const auto& [m, c] : t_) {
    Scalar term = c;
    for (int v = 0; v < n_; ++v)
      for (int e = 0; e < m[v]; ++e) term *= values[v];
    total += term;
  }
  return total;
}

std::string Poly::str(const std::function<std::string(int)>& name) const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : t_) {
    bool constant_term = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    std::string coef = c.str();
    bool negative = !coef.empty() && coef[0] == '-' && c.is_rational();
    if (negative) coef.erase(0, 1);
    if (!c.is_rational()) coef = "(" + coef + ")";
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string mono;
    for (int v = 0; v < n_; ++v)
      for (int e = 0; e < m[v]; ++e) mono += (mono.empty() ? "" : "*") + name(v);
    if (constant_term) out += coef;
    else if (coef == "1") out += mono;
    else out += coef + "*" + mono;
  }
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  if (r.n_ == 0) r.n_ = o.n_;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(std::max(n_, o.n_));
  for (const auto& [ma, ca] : t_)
    for (const auto& [mb, cb] : o.t_) {
      Monomial m(ma.size());
      for (size_t v = 0; v < m.size(); ++v) m[v] = static_cast<std::uint8_t>(ma[v] + mb[v]);
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Scalar& s) const {
  Poly r(n_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : t_) r.t_.emplace_hint(r.t_.end(), m, c * s);
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  auto ia = a.t_.begin(), ib = b.t_.begin();
  GrLexGreater g;
  for (; ia != a.t_.end() && ib != b.t_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return g(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second.str() < ib->second.str();
  }
  return ia == a.t_.end() && ib != b.t_.end();
}

std::string matrix_entry_name(int n, int v) { return "a" + std::to_string(v / n + 1) + std::to_string(v % n + 1); }

}  // namespace mrb
