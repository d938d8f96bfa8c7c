#include "mrb/cochain.hpp"

#include <map>

#include "mrb/error.hpp"

namespace mrb {

SparseVec sparse(const Vec& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

SparseVec sparse_unit(int i) { return {{i, Scalar(1)}}; }

Cochain::Cochain(int in_dim, int out_dim, int slots) : d_(in_dim), m_(out_dim), s_(slots), wb_(in_dim) {
  if (in_dim < 0 || out_dim < 0 || slots < 0) throw InputError("negative cochain shape");
  tuples_ = d_;
  for (int i = 0; i < s_; ++i) tuples_ *= wb_.size();
  data_.resize(static_cast<size_t>(tuples_) * m_);
}

Cochain Cochain::from_matrix(const Matrix& m) {
  Cochain f(m.cols(), m.rows(), 0);
  for (int k = 0; k < m.cols(); ++k)
    for (int c = 0; c < m.rows(); ++c) f.at(k, c) = m(c, k);
  return f;
}

Matrix Cochain::as_matrix() const {
  if (s_ != 0) throw InputError("only zero-slot cochains are matrices");
  Matrix m(m_, d_);
  for (int k = 0; k < d_; ++k)
    for (int c = 0; c < m_; ++c) m(c, k) = at(k, c);
  return m;
}

long Cochain::tuple_index(std::span<const int> pairs, int last) const {
  long idx = 0;
  for (int p : pairs) idx = idx * wb_.size() + p;
  return idx * d_ + last;
}

int Cochain::decode(long tuple, std::vector<int>& pairs) const {
  pairs.assign(s_, 0);
  int last = static_cast<int>(tuple % d_);
  tuple /= d_;
  for (int i = s_ - 1; i >= 0; --i) {
    pairs[i] = static_cast<int>(tuple % wb_.size());
    tuple /= wb_.size();
  }
  return last;
}

Vec Cochain::value(long tuple) const {
  return Vec(data_.begin() + tuple * m_, data_.begin() + (tuple + 1) * m_);
}

void Cochain::set_value(long tuple, const Vec& v) {
  if (static_cast<int>(v.size()) != m_) throw InputError("cochain value has wrong length");
  std::copy(v.begin(), v.end(), data_.begin() + tuple * m_);
}

void Cochain::accumulate(std::span<const SparseVec> wedge_args, const SparseVec& last, const Scalar& coef,
                         Vec& out) const {
  if (static_cast<int>(wedge_args.size()) != s_) throw InputError("wrong number of wedge arguments");
  if (coef.is_zero()) return;
  const long P = wb_.size();
  // depth-first over the nonzero coordinates of each argument
  std::vector<size_t> pos(s_ + 1, 0);
  std::vector<long> base(s_ + 1, 0);
  std::vector<Scalar> scale(s_ + 1);
  scale[0] = coef;
  int level = 0;
  while (level >= 0) {
    if (level == s_) {
      for (const auto& [k, a] : last) {
        Scalar w = scale[s_] * a;
        const Scalar* row = &data_[static_cast<size_t>(base[s_] * d_ + k) * m_];
        for (int c = 0; c < m_; ++c)
          if (!row[c].is_zero()) out[c] += w * row[c];
      }
      --level;
      continue;
    }
    const SparseVec& arg = wedge_args[level];
    if (pos[level] >= arg.size()) {
      pos[level] = 0;
      --level;
      continue;
    }
    const auto& [p, a] = arg[pos[level]++];
    base[level + 1] = base[level] * P + p;
    scale[level + 1] = scale[level] * a;
    ++level;
  }
}

Vec Cochain::eval(std::span<const SparseVec> wedge_args, const SparseVec& last) const {
  Vec out(m_);
  accumulate(wedge_args, last, Scalar(1), out);
  return out;
}

Vec Cochain::eval_basis(std::span<const int> pairs, int last) const { return value(tuple_index(pairs, last)); }

bool Cochain::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (d_ != o.d_ || m_ != o.m_ || s_ != o.s_) throw InputError("cochain shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (d_ != o.d_ || m_ != o.m_ || s_ != o.s_) throw InputError("cochain shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Cochain operator*(const Scalar& s, Cochain a) {
  for (auto& x : a.data_)
    if (!x.is_zero()) x *= s;
  return a;
}

SparseVec sparse_wedge(const WedgeBasis& wb, const SparseVec& x, const SparseVec& y) {
  std::map<int, Scalar> acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      if (i == j) continue;
      if (i < j) acc[wb.index(i, j)] += a * b;
      else acc[wb.index(j, i)] -= a * b;
    }
  SparseVec out;
  for (auto& [p, c] : acc)
    if (!c.is_zero()) out.emplace_back(p, c);
  return out;
}

}  // namespace mrb
