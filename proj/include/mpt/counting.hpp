#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mpt/numeric.hpp"
#include "mpt/tournament.hpp"

namespace mpt {

// Coefficients of prod_i (g_i z + (r - g_i)). coeffs[k] is the weighted number
// of 0/1 vectors with k ones, where a one at position i weighs g_i and a zero
// weighs r - g_i. Coordinates with g_i == r (resp. 0) are forced to one (resp.
// zero) automatically because the other factor term vanishes.
template <typename T>
struct CoefficientSequence {
  int r = 0;
  std::vector<T> g;
  std::vector<T> coeffs;

  T total() const {
    T sum = 0;
    for (const T& v : coeffs) sum += v;
    return sum;
  }
};

template <typename T>
CoefficientSequence<T> m_coefficients(std::span<const T> g, int r) {
  if (g.empty()) throw Error("m_coefficients: empty weight sequence");
  if (r < 1) throw Error("m_coefficients: r must be positive");
  for (const T& gi : g)
    if (gi < 0 || gi > r) throw Error("m_coefficients: weight outside [0, r]");

  CoefficientSequence<T> out;
  out.r = r;
  out.g.assign(g.begin(), g.end());
  out.coeffs.assign(g.size() + 1, T(0));
  out.coeffs[0] = 1;
  // Multiply in one linear factor at a time; descending k keeps it in place.
  for (std::size_t i = 0; i < g.size(); ++i) {
    const T& hit = g[i];
    const T miss = T(r) - hit;
    for (std::size_t k = i + 1; k > 0; --k) out.coeffs[k] = out.coeffs[k] * miss + out.coeffs[k - 1] * hit;
    out.coeffs[0] *= miss;
  }
  return out;
}

template <typename T>
CoefficientSequence<T> m_coefficients(const std::vector<T>& g, int r) {
  return m_coefficients<T>(std::span<const T>(g), r);
}

struct CountVector {
  Vertex vertex = 0;
  Direction direction = Direction::out;
  // counts[k]: maximal subtournaments through vertex with (out/in-)degree k.
  std::vector<BigInt> counts;
};

// Per-part (out- or in-) degrees of x toward the other c-1 parts, in part order.
inline std::vector<BigInt> partwise_degrees(const Tournament& t, Vertex x, Direction dir) {
  std::vector<BigInt> g;
  g.reserve(t.parts() - 1);
  for (int i = 0; i < t.parts(); ++i) {
    if (i == t.part_of(x)) continue;
    g.emplace_back(dir == Direction::out ? t.out_degree_into(x, i) : t.in_degree_from(x, i));
  }
  return g;
}

inline CountVector count_by_degree(const Tournament& t, Vertex x, Direction dir) {
  if (!t.contains(x)) throw Error("vertex " + std::to_string(x) + " out of range");
  auto seq = m_coefficients(partwise_degrees(t, x, dir), t.part_size());
  return {x, dir, std::move(seq.coeffs)};
}

inline CountVector count_by_out_degree(const Tournament& t, Vertex x) {
  return count_by_degree(t, x, Direction::out);
}

// T_q(x): maximal subtournaments in which x has (out/in-)degree at most q.
// q is clamped to c-1; negative q counts nothing.
inline BigInt t_q(const Tournament& t, Vertex x, int q, Direction dir) {
  const CountVector cv = count_by_degree(t, x, dir);
  BigInt sum = 0;
  const int top = std::min(q, t.parts() - 1);
  for (int k = 0; k <= top; ++k) sum += cv.counts[k];
  return sum;
}

// Brute-force T_q(x): walks every transversal through x and reads the degree
// of x straight from the arc relation. Independent of the polynomial route.
inline BigInt oracle_count(const Tournament& t, Vertex x, int q, Direction dir,
                           std::uint64_t cap = kDefaultEnumerationCap) {
  if (!t.contains(x)) throw Error("vertex " + std::to_string(x) + " out of range");
  const int c = t.parts();
  const int r = t.part_size();
  const std::uint64_t total = saturating_pow(static_cast<std::uint64_t>(r), c - 1);
  if (total > cap) throw CapExceeded(total, cap);

  std::vector<int> others;
  for (int i = 0; i < c; ++i)
    if (i != t.part_of(x)) others.push_back(i);

  std::vector<int> pick(others.size(), 0);
  std::uint64_t hits = 0;
  for (;;) {
    int deg = 0;
    for (std::size_t j = 0; j < others.size(); ++j) {
      const Vertex w = t.first_in_part(others[j]) + pick[j];
      deg += dir == Direction::out ? t.has_arc(x, w) : t.has_arc(w, x);
    }
    if (deg <= q) ++hits;

    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == r) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  return hits;
}

}  // namespace mpt
