#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <cstdint>
#include <vector>

#include "mpt/mpt.hpp"

namespace mpt::testing {

inline Tournament cyclic_triangle() {
  const Arc arcs[] = {{0, 1}, {1, 2}, {2, 0}};
  return Tournament(3, 1, arcs);
}

inline Tournament transitive_triangle() {
  const Arc arcs[] = {{0, 1}, {0, 2}, {1, 2}};
  return Tournament(3, 1, arcs);
}

// c=3, r=2. Vertex 4 (part 2) beats 0 in part 0 and both 2, 3 in part 1.
inline Tournament small_counting_instance() {
  const Arc arcs[] = {{0, 2}, {0, 3}, {2, 1}, {3, 1},   // parts 0-1
                      {4, 0}, {1, 4}, {5, 0}, {1, 5},   // parts 0-2
                      {4, 2}, {4, 3}, {2, 5}, {5, 3}};  // parts 1-2
  return Tournament(3, 2, arcs);
}

// Every arc points from the lower part to the higher one.
inline Tournament layered(int c, int r) {
  return Tournament::from_predicate(c, r, [](Vertex, Vertex) { return true; });
}

// M(g; k) by walking every 0/1 vector h with the forced coordinates of the
// constrained family (h_i = 1 when g_i = r, h_i = 0 when g_i = 0).
template <typename T>
std::vector<T> brute_force_m(const std::vector<T>& g, int r) {
  const std::size_t s = g.size();
  std::vector<T> coeffs(s + 1, T(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    bool admissible = true;
    T weight = 1;
    int ones = 0;
    for (std::size_t i = 0; i < s; ++i) {
      const bool h = (mask >> i) & 1U;
      if ((g[i] == r && !h) || (g[i] == 0 && h)) {
        admissible = false;
        break;
      }
      weight *= h ? g[i] : T(r) - g[i];
      ones += h;
    }
    if (admissible) coeffs[ones] += weight;
  }
  return coeffs;
}

// Minimum degree of the tournament induced by sel, from arc membership alone.
inline int induced_min_degree(const Tournament& g, const std::vector<Vertex>& sel) {
  int best = static_cast<int>(sel.size());
  for (std::size_t i = 0; i < sel.size(); ++i) {
    int out = 0;
    int in = 0;
    for (std::size_t j = 0; j < sel.size(); ++j) {
      if (i == j) continue;
      if (g.has_arc(sel[i], sel[j])) ++out;
      if (g.has_arc(sel[j], sel[i])) ++in;
    }
    best = std::min({best, out, in});
  }
  return best;
}

// Unpruned lexicographic enumeration; returns the first qualifying selection.
inline std::optional<std::vector<Vertex>> brute_force_witness(const Tournament& g, int d) {
  const int c = g.parts();
  const int r = g.part_size();
  std::vector<int> idx(c, 0);
  for (;;) {
    std::vector<Vertex> sel(c);
    for (int i = 0; i < c; ++i) sel[i] = g.first_in_part(i) + idx[i];
    if (induced_min_degree(g, sel) >= d) return sel;
    int j = c - 1;
    while (j >= 0 && ++idx[j] == r) idx[j--] = 0;
    if (j < 0) return std::nullopt;
  }
}

// Transitive-closure strongness test, O(n^3).
inline bool strong_by_closure(const SmallTournament& t) {
  const int n = t.order();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) reach[i][j] = i == j || t.has_arc(i, j);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!reach[i][j]) return false;
  return true;
}

// Rational in [0, r] with denominator up to max_den.
inline Rational random_weight(Rng& rng, int r, int max_den) {
  const auto den = static_cast<std::int64_t>(1 + rng.below(max_den));
  const auto num = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(r) * den + 1));
  return Rational(num, den);
}

}  // namespace mpt::testing
