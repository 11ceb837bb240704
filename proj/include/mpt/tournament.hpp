#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mpt/numeric.hpp"

namespace mpt {

using Vertex = int;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Malformed MPT input. line() is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct DegreeProfile {
  Vertex vertex = 0;
  std::vector<int> out_by_part;
  std::vector<int> in_by_part;
  int out_total = 0;
  int in_total = 0;
};

enum class Direction { out, in };

inline std::string_view to_string(Direction d) { return d == Direction::out ? "out" : "in"; }

// A balanced c-partite tournament with parts of size r. Part i holds the
// vertices i*r .. i*r+r-1. Immutable once constructed.
class Tournament {
 public:
  // Builds from an explicit arc list; throws Error if the list is not an
  // orientation of the complete balanced c-partite graph.
  Tournament(int c, int r, std::span<const Arc> arcs);

  // Builds from a predicate beats(u, v), consulted once for every cross-part
  // pair with u < v; true orients u->v, false v->u.
  template <typename Beats>
  static Tournament from_predicate(int c, int r, Beats&& beats) {
    Tournament t(c, r);
    for (Vertex u = 0; u < t.n_; ++u)
      for (Vertex v = u + 1; v < t.n_; ++v) {
        if (t.part_of(u) == t.part_of(v)) continue;
        if (beats(u, v))
          t.set_arc(u, v);
        else
          t.set_arc(v, u);
      }
    t.finalize();
    return t;
  }

  int parts() const noexcept { return c_; }
  int part_size() const noexcept { return r_; }
  int order() const noexcept { return n_; }
  int part_of(Vertex v) const noexcept { return v / r_; }
  Vertex first_in_part(int part) const noexcept { return part * r_; }

  // Number of arcs of any balanced orientation: r^2 c(c-1)/2.
  std::int64_t arc_count() const noexcept {
    return static_cast<std::int64_t>(r_) * r_ * c_ * (c_ - 1) / 2;
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    auto idx = static_cast<std::size_t>(u) * n_ + v;
    return (bits_[idx >> 6] >> (idx & 63U)) & 1U;
  }

  int out_degree_into(Vertex v, int part) const noexcept { return out_by_part_[v * c_ + part]; }
  int in_degree_from(Vertex v, int part) const noexcept {
    return part == part_of(v) ? 0 : r_ - out_degree_into(v, part);
  }
  int out_degree(Vertex v) const noexcept { return out_total_[v]; }
  int in_degree(Vertex v) const noexcept { return r_ * (c_ - 1) - out_total_[v]; }
  int degree(Vertex v, Direction d) const noexcept {
    return d == Direction::out ? out_degree(v) : in_degree(v);
  }

  // All arcs sorted by (from, to).
  std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    result.reserve(static_cast<std::size_t>(arc_count()));
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (has_arc(u, v)) result.push_back({u, v});
    return result;
  }

  Tournament reversed() const {
    return from_predicate(c_, r_, [this](Vertex u, Vertex v) { return has_arc(v, u); });
  }

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.c_ == b.c_ && a.r_ == b.r_ && a.bits_ == b.bits_;
  }

 private:
  Tournament(int c, int r) : c_(c), r_(r), n_(c * r) {
    if (c < 2) throw Error("a multipartite tournament needs c >= 2 parts");
    if (r < 1) throw Error("part size r must be >= 1");
    if (static_cast<std::int64_t>(c) * r > 1 << 15) throw Error("tournament too large");
    bits_.assign((static_cast<std::size_t>(n_) * n_ + 63) / 64, 0);
  }

  void set_arc(Vertex u, Vertex v) noexcept {
    auto idx = static_cast<std::size_t>(u) * n_ + v;
    bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63U);
  }

  void finalize() {
    out_by_part_.assign(static_cast<std::size_t>(n_) * c_, 0);
    out_total_.assign(n_, 0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v)
        if (has_arc(u, v)) {
          ++out_by_part_[u * c_ + part_of(v)];
          ++out_total_[u];
        }
#ifndef NDEBUG
    for (Vertex v = 0; v < n_; ++v) assert(out_degree(v) + in_degree(v) == r_ * (c_ - 1));
#endif
  }

  friend class ArcSetBuilder;

  int c_;
  int r_;
  int n_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> out_by_part_;
  std::vector<int> out_total_;
};

// Incremental validating construction shared by the arc-list constructor and
// the MPT reader. Errors are raised as ParseError carrying the given line.
class ArcSetBuilder {
 public:
  ArcSetBuilder(int c, int r) : t_(c, r) {}

  void add(Arc a, std::size_t line = 0) {
    const int n = t_.order();
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
      throw ParseError(line, "vertex id out of range in arc " + describe(a) + " (order " +
                                 std::to_string(n) + ")");
    if (a.from == a.to) throw ParseError(line, "self-loop " + describe(a));
    if (t_.part_of(a.from) == t_.part_of(a.to))
      throw ParseError(line, "arc " + describe(a) + " lies within part " +
                                 std::to_string(t_.part_of(a.from)));
    if (t_.has_arc(a.from, a.to)) throw ParseError(line, "duplicate arc " + describe(a));
    if (t_.has_arc(a.to, a.from)) throw ParseError(line, "antiparallel arc " + describe(a));
    t_.set_arc(a.from, a.to);
    ++added_;
  }

  Tournament finish(std::size_t line = 0) && {
    if (added_ != t_.arc_count()) {
      for (Vertex u = 0; u < t_.order(); ++u)
        for (Vertex v = u + 1; v < t_.order(); ++v)
          if (t_.part_of(u) != t_.part_of(v) && !t_.has_arc(u, v) && !t_.has_arc(v, u))
            throw ParseError(line, "missing cross-part pair {" + std::to_string(u) + ", " +
                                       std::to_string(v) + "}");
    }
    t_.finalize();
    return std::move(t_);
  }

 private:
  static std::string describe(Arc a) {
    return std::to_string(a.from) + "->" + std::to_string(a.to);
  }

  Tournament t_;
  std::int64_t added_ = 0;
};

inline Tournament::Tournament(int c, int r, std::span<const Arc> arcs) : Tournament(c, r) {
  ArcSetBuilder builder(c, r);
  for (const Arc& a : arcs) builder.add(a);
  *this = std::move(builder).finish();
}

// ---------------------------------------------------------------------------
// MPT text format

namespace detail {

inline bool parse_int(std::string_view token, int& out) {
  if (token.empty() || token.size() > 9) return false;
  int v = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') return false;
    v = v * 10 + (ch - '0');
  }
  out = v;
  return true;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace detail

inline Tournament load(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  int stage = 0;
  int c = 0;
  int r = 0;
  std::optional<ArcSetBuilder> builder;

  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    if (stage == 0) {
      if (tokens.size() != 2 || tokens[0] != "mpt")
        throw ParseError(line_no, "malformed header: expected 'mpt 1'");
      if (tokens[1] != "1")
        throw ParseError(line_no, "unsupported format version '" + std::string(tokens[1]) + "'");
      stage = 1;
    } else if (stage == 1) {
      if (tokens.size() != 2 || !detail::parse_int(tokens[0], c) ||
          !detail::parse_int(tokens[1], r))
        throw ParseError(line_no, "malformed header: expected '<c> <r>'");
      if (c < 2) throw ParseError(line_no, "c must be >= 2");
      if (r < 1) throw ParseError(line_no, "r must be >= 1");
      if (static_cast<std::int64_t>(c) * r > 1 << 15)
        throw ParseError(line_no, "tournament too large");
      builder.emplace(c, r);
      stage = 2;
    } else {
      Arc a;
      if (tokens.size() != 2 || !detail::parse_int(tokens[0], a.from) ||
          !detail::parse_int(tokens[1], a.to))
        throw ParseError(line_no, "malformed arc line, expected '<u> <v>'");
      builder->add(a, line_no);
    }
  }
  if (stage == 0) throw ParseError(line_no, "malformed header: missing 'mpt 1'");
  if (stage == 1) throw ParseError(line_no, "malformed header: missing '<c> <r>' line");
  return std::move(*builder).finish(line_no);
}

// Canonical serialization: arcs sorted by (from, to), no comments.
inline std::string save(const Tournament& t) {
  std::string out = "mpt 1\n" + std::to_string(t.parts()) + " " + std::to_string(t.part_size()) + "\n";
  for (const Arc& a : t.arcs()) {
    out += std::to_string(a.from);
    out += ' ';
    out += std::to_string(a.to);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degrees and irregularity

inline DegreeProfile degree_profile(const Tournament& t, Vertex x) {
  if (!t.contains(x)) throw Error("vertex " + std::to_string(x) + " out of range");
  DegreeProfile p;
  p.vertex = x;
  p.out_by_part.resize(t.parts());
  p.in_by_part.resize(t.parts());
  for (int i = 0; i < t.parts(); ++i) {
    p.out_by_part[i] = t.out_degree_into(x, i);
    p.in_by_part[i] = t.in_degree_from(x, i);
    p.out_total += p.out_by_part[i];
    p.in_total += p.in_by_part[i];
  }
  return p;
}

// delta(G): min over vertices of min(d+, d-).
inline int min_degree(const Tournament& t) {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < t.order(); ++v) best = std::min({best, t.out_degree(v), t.in_degree(v)});
  return best;
}

// Delta(G): max over vertices of max(d+, d-).
inline int max_degree(const Tournament& t) {
  int best = 0;
  for (Vertex v = 0; v < t.order(); ++v) best = std::max({best, t.out_degree(v), t.in_degree(v)});
  return best;
}

// Balanced shortcut: i_g = r(c-1) - 2 delta.
inline int global_irregularity_balanced(const Tournament& t) {
  return t.part_size() * (t.parts() - 1) - 2 * min_degree(t);
}

// max_{x,y} max(d+(x), d-(x)) - min(d+(y), d-(y)), by direct scan.
inline int global_irregularity(const Tournament& t) {
  int hi = std::numeric_limits<int>::min();
  int lo = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < t.order(); ++v) {
    hi = std::max(hi, std::max(t.out_degree(v), t.in_degree(v)));
    lo = std::min(lo, std::min(t.out_degree(v), t.in_degree(v)));
  }
  const int ig = hi - lo;
  assert(ig == global_irregularity_balanced(t));
  return ig;
}

// mu: max over x and parts i != part(x) of |d_i+(x) - d_i-(x)|.
inline int local_partite_irregularity(const Tournament& t) {
  int mu = 0;
  for (Vertex v = 0; v < t.order(); ++v)
    for (int i = 0; i < t.parts(); ++i) {
      if (i == t.part_of(v)) continue;
      mu = std::max(mu, std::abs(t.out_degree_into(v, i) - t.in_degree_from(v, i)));
    }
  return mu;
}

struct Metrics {
  int c = 0;
  int r = 0;
  int order = 0;
  std::int64_t arcs = 0;
  int min_degree = 0;
  int max_degree = 0;
  int global_irregularity = 0;
  int local_partite_irregularity = 0;
};

inline Metrics metrics(const Tournament& t) {
  return {t.parts(),          t.part_size(),         t.order(),
          t.arc_count(),      min_degree(t),         max_degree(t),
          global_irregularity(t), local_partite_irregularity(t)};
}

}  // namespace mpt
