#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mpt/numeric.hpp"
#include "mpt/random.hpp"
#include "mpt/tournament.hpp"

namespace mpt {

// floor((c-2)/4) + 1: a tournament of order c whose minimum degree reaches
// this value is strongly connected.
inline int moon_threshold(int c) {
  if (c < 3) throw Error("moon_threshold: c must be >= 3");
  return (c - 2) / 4 + 1;
}

// A complete tournament on vertices 0..n-1.
class SmallTournament {
 public:
  SmallTournament() = default;
  explicit SmallTournament(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}

  // Decodes the pairs (i, j), i < j, in row-major order: bit k set means i->j.
  static SmallTournament from_code(int n, std::uint64_t code) {
    SmallTournament t(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k) {
        if ((code >> k) & 1U)
          t.set_arc(i, j);
        else
          t.set_arc(j, i);
      }
    return t;
  }

  int order() const noexcept { return n_; }
  bool has_arc(int u, int v) const noexcept { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }

  void set_arc(int u, int v) noexcept {
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 0;
  }

  int out_degree(int v) const noexcept {
    int d = 0;
    for (int w = 0; w < n_; ++w) d += has_arc(v, w);
    return d;
  }
  int in_degree(int v) const noexcept { return n_ - 1 - out_degree(v); }

  // min over vertices of min(out, in).
  int min_degree() const noexcept {
    int best = std::numeric_limits<int>::max();
    for (int v = 0; v < n_; ++v) best = std::min({best, out_degree(v), in_degree(v)});
    return n_ == 0 ? 0 : best;
  }

  std::int64_t arc_count() const noexcept {
    std::int64_t a = 0;
    for (int v = 0; v < n_; ++v) a += out_degree(v);
    return a;
  }

 private:
  int n_ = 0;
  std::vector<unsigned char> adj_;
};

// Every vertex reaches vertex 0 and vertex 0 reaches every vertex.
inline bool is_strong(const SmallTournament& t) {
  const int n = t.order();
  if (n <= 1) return true;
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (seen[w]) continue;
        if (pass == 0 ? t.has_arc(u, w) : t.has_arc(w, u)) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != n) return false;
  }
  return true;
}

// One vertex per part; selection[i] lies in part i.
struct Transversal {
  std::vector<Vertex> selection;

  friend bool operator==(const Transversal&, const Transversal&) = default;
};

inline void validate(const Tournament& g, const Transversal& t) {
  if (static_cast<int>(t.selection.size()) != g.parts())
    throw Error("transversal must select exactly one vertex per part");
  for (int i = 0; i < g.parts(); ++i) {
    const Vertex v = t.selection[i];
    if (!g.contains(v) || g.part_of(v) != i)
      throw Error("transversal position " + std::to_string(i) + " holds vertex " +
                  std::to_string(v) + " outside part " + std::to_string(i));
  }
}

// Orientation of g restricted to t; vertex i of the result is t.selection[i].
inline SmallTournament induced_subtournament(const Tournament& g, const Transversal& t) {
  validate(g, t);
  const int c = g.parts();
  SmallTournament out(c);
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) {
      if (g.has_arc(t.selection[i], t.selection[j]))
        out.set_arc(i, j);
      else
        out.set_arc(j, i);
    }
  return out;
}

enum class SearchMode { exhaustive, heuristic };

inline std::string_view to_string(SearchMode m) {
  return m == SearchMode::exhaustive ? "exhaustive" : "heuristic";
}

struct SearchOutcome {
  bool found = false;
  std::optional<Transversal> witness;
  std::optional<int> witness_min_degree;
  std::optional<bool> is_strong;
  std::uint64_t nodes_explored = 0;
  SearchMode mode = SearchMode::exhaustive;
};

struct ExhaustiveOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  bool prune = true;
  int workers = 1;
};

namespace detail {

inline void attach_witness(const Tournament& g, SearchOutcome& out, Transversal witness) {
  const SmallTournament sub = induced_subtournament(g, witness);
  out.found = true;
  out.witness_min_degree = sub.min_degree();
  out.is_strong = mpt::is_strong(sub);
  out.witness = std::move(witness);
}

// Depth-first scan over parts first..c-1 with parts < first already fixed.
class TransversalScanner {
 public:
  TransversalScanner(const Tournament& g, int d, bool prune, const std::atomic<bool>* cancel)
      : g_(g), d_(d), prune_(prune), cancel_(cancel), sel_(g.parts()), out_(g.parts()), in_(g.parts()) {}

  // Fixes part 0 to `root` (or scans it too when root < 0) and searches.
  std::optional<Transversal> run(Vertex root) {
    if (root < 0) {
      if (descend(0)) return Transversal{sel_};
      return std::nullopt;
    }
    ++nodes_;
    place(0, root);
    if (feasible(0) && descend(1)) return Transversal{sel_};
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void place(int depth, Vertex v) {
    sel_[depth] = v;
    out_[depth] = in_[depth] = 0;
    for (int j = 0; j < depth; ++j) {
      if (g_.has_arc(sel_[j], v)) {
        ++out_[j];
        ++in_[depth];
      } else {
        ++in_[j];
        ++out_[depth];
      }
    }
  }

  void unplace(int depth) {
    const Vertex v = sel_[depth];
    for (int j = 0; j < depth; ++j) {
      if (g_.has_arc(sel_[j], v))
        --out_[j];
      else
        --in_[j];
    }
  }

  // Every fixed vertex can still gain at most one arc per unfixed part.
  bool feasible(int depth) const {
    const int c = g_.parts();
    const int remaining = c - 1 - depth;
    if (!prune_ && depth + 1 < c) return true;
    for (int j = 0; j <= depth; ++j)
      if (out_[j] + remaining < d_ || in_[j] + remaining < d_) return false;
    return true;
  }

  bool descend(int depth) {
    const int c = g_.parts();
    if (depth == c) return true;
    if (cancel_ != nullptr && cancel_->load(std::memory_order_relaxed)) return false;
    const Vertex first = g_.first_in_part(depth);
    for (Vertex v = first; v < first + g_.part_size(); ++v) {
      ++nodes_;
      place(depth, v);
      if (feasible(depth) && descend(depth + 1)) return true;
      unplace(depth);
    }
    return false;
  }

  const Tournament& g_;
  int d_;
  bool prune_;
  const std::atomic<bool>* cancel_;
  std::vector<Vertex> sel_;
  std::vector<int> out_;
  std::vector<int> in_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Lexicographic scan for a transversal whose induced tournament has minimum
// degree >= d. With workers > 1 the choices in part 0 are distributed as
// blocks; the witness from the lowest successful block is returned, so the
// witness matches the single-worker result while nodes_explored may differ.
inline SearchOutcome exhaustive_search(const Tournament& g, int d, const ExhaustiveOptions& opts = {}) {
  const std::uint64_t space = saturating_pow(static_cast<std::uint64_t>(g.part_size()), g.parts());
  if (space > opts.cap) throw CapExceeded(space, opts.cap);

  SearchOutcome out;
  out.mode = SearchMode::exhaustive;

  if (opts.workers <= 1 || g.part_size() == 1) {
    detail::TransversalScanner scanner(g, d, opts.prune, nullptr);
    auto witness = scanner.run(-1);
    out.nodes_explored = scanner.nodes();
    if (witness) detail::attach_witness(g, out, std::move(*witness));
    return out;
  }

  const int blocks = g.part_size();
  std::atomic<int> next_block{0};
  std::atomic<int> best_block{blocks};
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::optional<Transversal>> found(blocks);
  std::vector<std::atomic<bool>> cancel(blocks);
  for (auto& flag : cancel) flag = false;

  auto worker = [&] {
    for (;;) {
      const int b = next_block.fetch_add(1);
      if (b >= blocks) return;
      if (b > best_block.load()) continue;
      detail::TransversalScanner scanner(g, d, opts.prune, &cancel[b]);
      auto witness = scanner.run(g.first_in_part(0) + b);
      nodes += scanner.nodes();
      if (!witness) continue;
      found[b] = std::move(witness);
      int current = best_block.load();
      while (b < current && !best_block.compare_exchange_weak(current, b)) {
      }
      for (int later = b + 1; later < blocks; ++later) cancel[later] = true;
    }
  };
  {
    std::vector<std::jthread> pool;
    const int n = std::min(opts.workers, blocks);
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  out.nodes_explored = nodes.load();
  if (const int b = best_block.load(); b < blocks) detail::attach_witness(g, out, std::move(*found[b]));
  return out;
}

namespace detail {

// (min degree, -number of vertices attaining it), compared lexicographically.
struct SelectionScore {
  int min_degree = 0;
  int at_min = 0;

  bool better_than(const SelectionScore& o) const {
    if (min_degree != o.min_degree) return min_degree > o.min_degree;
    return at_min < o.at_min;
  }
};

inline SelectionScore score_selection(const Tournament& g, const std::vector<Vertex>& sel) {
  const int c = static_cast<int>(sel.size());
  SelectionScore s{std::numeric_limits<int>::max(), 0};
  for (int i = 0; i < c; ++i) {
    int out = 0;
    for (int j = 0; j < c; ++j)
      if (j != i && g.has_arc(sel[i], sel[j])) ++out;
    const int m = std::min(out, c - 1 - out);
    if (m < s.min_degree) {
      s.min_degree = m;
      s.at_min = 1;
    } else if (m == s.min_degree) {
      ++s.at_min;
    }
  }
  return s;
}

}  // namespace detail

// Seeded random restarts, each followed by steepest-ascent single-vertex swaps
// within a part. budget is the number of restarts. found == false is
// inconclusive.
inline SearchOutcome heuristic_search(const Tournament& g, int d, std::uint64_t budget, std::uint64_t seed) {
  if (budget < 1) throw Error("heuristic_search: budget must be >= 1");
  SearchOutcome out;
  out.mode = SearchMode::heuristic;
  Rng rng(seed);
  const int c = g.parts();
  const int r = g.part_size();
  std::vector<Vertex> sel(c);

  for (std::uint64_t restart = 0; restart < budget; ++restart) {
    for (int i = 0; i < c; ++i) sel[i] = g.first_in_part(i) + static_cast<Vertex>(rng.below(r));
    auto score = detail::score_selection(g, sel);
    ++out.nodes_explored;

    while (score.min_degree < d) {
      std::optional<std::pair<int, Vertex>> best_move;
      auto best_score = score;
      for (int i = 0; i < c; ++i) {
        const Vertex keep = sel[i];
        for (Vertex w = g.first_in_part(i); w < g.first_in_part(i) + r; ++w) {
          if (w == keep) continue;
          sel[i] = w;
          auto s = detail::score_selection(g, sel);
          ++out.nodes_explored;
          if (s.better_than(best_score)) {
            best_score = s;
            best_move = {i, w};
          }
        }
        sel[i] = keep;
      }
      if (!best_move) break;
      sel[best_move->first] = best_move->second;
      score = best_score;
    }

    if (score.min_degree >= d) {
      detail::attach_witness(g, out, Transversal{sel});
      return out;
    }
  }
  return out;
}

}  // namespace mpt
