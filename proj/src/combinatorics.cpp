#include "mrb/combinatorics.hpp"

#include "mrb/error.hpp"

namespace mrb {

int permutation_sign(std::span<const int> perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Shuffle> shuffles(int p, int q) {
  if (p < 0 || q < 0) throw InputError("shuffle block sizes must be nonnegative");
  int n = p + q;
  std::vector<Shuffle> out;
  std::vector<int> first(p);
  for (int i = 0; i < p; ++i) first[i] = i;
  while (true) {
    std::vector<int> perm;
    perm.reserve(n);
    std::vector<char> used(n, 0);
    for (int x : first) {
      perm.push_back(x);
      used[x] = 1;
    }
    for (int x = 0; x < n; ++x)
      if (!used[x]) perm.push_back(x);
    int s = permutation_sign(perm);
    out.push_back({std::move(perm), s});
    // next p-subset in lexicographic order
    int i = p - 1;
    while (i >= 0 && first[i] == n - p + i) --i;
    if (i < 0) break;
    ++first[i];
    for (int j = i + 1; j < p; ++j) first[j] = first[j - 1] + 1;
  }
  return out;
}

WedgeBasis::WedgeBasis(int n) : n_(n), idx_(static_cast<size_t>(n) * n, -1) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      idx_[static_cast<size_t>(i) * n + j] = static_cast<int>(pairs_.size());
      pairs_.emplace_back(i, j);
    }
}

Vec wedge(const WedgeBasis& wb, const Vec& a, const Vec& b) {
  Vec w(wb.size());
  for (int p = 0; p < wb.size(); ++p) {
    auto [i, j] = wb.pair(p);
    w[p] = a[i] * b[j] - a[j] * b[i];
  }
  return w;
}

bool Tensor3::is_alternating() const { return antisymmetrize3(*this) == *this; }

namespace {
constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
constexpr int kSigns[6] = {1, -1, -1, 1, 1, -1};
}  // namespace

Tensor3 antisymmetrize3(const Tensor3& t) {
  Tensor3 out(t.n, t.m);
  Scalar sixth = Scalar(mpq_class(1, 6));
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      for (int k = 0; k < t.n; ++k) {
        int idx[3] = {i, j, k};
        for (int c = 0; c < t.m; ++c) {
          Scalar acc;
          for (int s = 0; s < 6; ++s) {
            const Scalar& x = t.at(idx[kPerms[s][0]], idx[kPerms[s][1]], idx[kPerms[s][2]], c);
            if (kSigns[s] > 0) acc += x;
            else acc -= x;
          }
          out.at(i, j, k, c) = acc * sixth;
        }
      }
  return out;
}

Tensor3 extend_alternating(const Tensor3& t) {
  Tensor3 out(t.n, t.m);
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j)
      for (int k = j + 1; k < t.n; ++k) {
        int idx[3] = {i, j, k};
        for (int s = 0; s < 6; ++s)
          for (int c = 0; c < t.m; ++c) {
            const Scalar& x = t.at(i, j, k, c);
            out.at(idx[kPerms[s][0]], idx[kPerms[s][1]], idx[kPerms[s][2]], c) = kSigns[s] > 0 ? x : -x;
          }
      }
  return out;
}

}  // namespace mrb
