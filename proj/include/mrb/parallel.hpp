#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace mrb {

enum class Exec { serial, parallel };

//! Runs body(i) for i in [0, n). Bodies must write only to disjoint slots.
template <class F>
void for_each_index(std::size_t n, Exec exec, F&& body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const long total = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i) body(static_cast<std::size_t>(i));
}

//! Evaluates probe(i) for every i and returns the lowest-index non-empty result,
//! so parallel and serial runs report the same first failure.
template <class T, class F>
std::optional<T> first_hit(std::size_t n, Exec exec, F&& probe) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i)
      if (auto r = probe(i)) return r;
    return std::nullopt;
  }
  std::vector<std::optional<T>> hits(n);
  for_each_index(n, exec, [&](std::size_t i) { hits[i] = probe(i); });
  for (auto& h : hits)
    if (h) return std::move(h);
  return std::nullopt;
}

}  // namespace mrb
