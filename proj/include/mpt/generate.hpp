#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "mpt/numeric.hpp"
#include "mpt/random.hpp"
#include "mpt/tournament.hpp"

namespace mpt {

// Regular balanced c-partite tournament (every d+ = d- = r(c-1)/2).
//
// r even: for every pair of parts, the vertex with in-part index a in the
// lower part beats indices a, a+1, ..., a+r/2-1 (mod r) of the higher part.
// Each vertex then has exactly r/2 out-neighbours in every other part (mu = 0).
//
// r odd, c odd: part i dominates parts i+1, ..., i+(c-1)/2 (mod c); index a of
// the dominating part beats indices a, ..., a+(r-1)/2 (mod r) of the dominated
// part, so d_i+ alternates between (r+1)/2 and (r-1)/2 (mu = 1).
//
// r odd, c even: r(c-1) is odd and no regular instance exists.
inline Tournament generate_regular(int c, int r) {
  if (c < 2 || r < 1) throw Error("generate_regular: need c >= 2 and r >= 1");
  if ((r * (c - 1)) % 2 != 0)
    throw Error("no regular instance exists: r(c-1) = " + std::to_string(r * (c - 1)) + " is odd");

  if (r % 2 == 0) {
    const int half = r / 2;
    return Tournament::from_predicate(c, r, [=](Vertex u, Vertex v) {
      const int a = u % r;
      const int b = v % r;
      return ((b - a) % r + r) % r < half;
    });
  }

  const int reach = (c - 1) / 2;
  const int majority = (r + 1) / 2;
  return Tournament::from_predicate(c, r, [=](Vertex u, Vertex v) {
    const int pu = u / r;
    const int pv = v / r;
    const int a = u % r;
    const int b = v % r;
    const bool u_dominates = ((pv - pu) % c + c) % c <= reach;
    if (u_dominates) return ((b - a) % r + r) % r < majority;
    return !(((a - b) % r + r) % r < majority);
  });
}

// Every cross-part pair {u, v}, u < v, visited in lexicographic order and
// oriented u->v iff the top bit of the next mt19937_64(seed) output is 0.
inline Tournament generate_random(int c, int r, std::uint64_t seed) {
  Rng rng(seed);
  return Tournament::from_predicate(c, r, [&](Vertex, Vertex) { return !rng.coin(); });
}

struct RepairResult {
  Tournament tournament;
  int initial_ig = 0;
  int achieved_ig = 0;
  std::uint64_t moves = 0;
  bool reached_target = false;
};

// Hill-climbing arc reversal toward global irregularity <= target_ig.
//
// With excess e(x) = d+(x) - d-(x), a balanced tournament has
// i_g = max |e(x)|. Reversing u->v lowers e(u) by 2 and raises e(v) by 2; it is
// accepted only when e(u) - e(v) > 2, which strictly lowers sum e(x)^2 and
// never raises i_g. Each round gathers the arcs leaving a vertex of maximum
// excess or entering a vertex of minimum excess, shuffles them with the seeded
// stream and applies the first acceptable one. budget caps the number of moves.
inline RepairResult repair_to_irregularity(const Tournament& g, int target_ig, std::uint64_t budget,
                                           std::uint64_t seed) {
  if (target_ig < 0) throw Error("repair_to_irregularity: target_ig must be >= 0");
  const int n = g.order();
  const int r = g.part_size();
  std::vector<char> beats(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> excess(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) beats[static_cast<std::size_t>(u) * n + v] = g.has_arc(u, v);
    excess[u] = g.out_degree(u) - g.in_degree(u);
  }
  auto irregularity = [&] {
    int ig = 0;
    for (int e : excess) ig = std::max(ig, std::abs(e));
    return ig;
  };

  RepairResult result{g, irregularity(), 0, 0, false};
  Rng rng(seed);
  int ig = result.initial_ig;

  while (ig > target_ig && result.moves < budget) {
    const int hi = *std::max_element(excess.begin(), excess.end());
    const int lo = *std::min_element(excess.begin(), excess.end());
    std::vector<Arc> candidates;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        if (!beats[static_cast<std::size_t>(u) * n + v]) continue;
        if (excess[u] != hi && excess[v] != lo) continue;
        if (excess[u] - excess[v] > 2) candidates.push_back({u, v});
      }
    if (candidates.empty()) break;
    rng.shuffle(std::span<Arc>(candidates));
    const Arc a = candidates.front();
    beats[static_cast<std::size_t>(a.from) * n + a.to] = 0;
    beats[static_cast<std::size_t>(a.to) * n + a.from] = 1;
    excess[a.from] -= 2;
    excess[a.to] += 2;
    ++result.moves;
    ig = irregularity();
  }

  if (result.moves > 0)
    result.tournament = Tournament::from_predicate(
        g.parts(), r, [&](Vertex u, Vertex v) { return beats[static_cast<std::size_t>(u) * n + v] != 0; });
  result.achieved_ig = ig;
  result.reached_target = ig <= target_ig;
  return result;
}

}  // namespace mpt
