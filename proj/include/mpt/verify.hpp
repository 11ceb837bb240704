#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpt/bounds.hpp"
#include "mpt/counting.hpp"
#include "mpt/search.hpp"
#include "mpt/tournament.hpp"

namespace mpt {

enum class CheckStatus { pass, fail, skipped };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::uint64_t cases = 0;  // individual comparisons performed
  std::string detail;       // first failure, or why the check was skipped
};

namespace detail {

class CheckRecorder {
 public:
  explicit CheckRecorder(std::string name) { result_.name = std::move(name); }

  // Records one comparison; keeps the first failure message.
  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.status != CheckStatus::fail) {
      result_.status = CheckStatus::fail;
      result_.detail = what;
    }
  }

  void skip(std::string why) {
    result_.status = CheckStatus::skipped;
    result_.detail = std::move(why);
  }

  CheckResult done() {
    if (result_.status == CheckStatus::pass && result_.cases == 0) {
      result_.status = CheckStatus::skipped;
      if (result_.detail.empty()) result_.detail = "no applicable cases";
    }
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

inline std::string at(Vertex x, int q, Direction d) {
  return "vertex " + std::to_string(x) + ", q=" + std::to_string(q) + ", " + std::string(to_string(d));
}

}  // namespace detail

// Runs every invariant suite that applies to t. Enumeration-based suites are
// skipped when their search space exceeds max_enum.
inline std::vector<CheckResult> verify_all(const Tournament& t, std::uint64_t max_enum = kDefaultEnumerationCap) {
  using detail::CheckRecorder;
  std::vector<CheckResult> out;
  const int c = t.parts();
  const int r = t.part_size();
  const int n = t.order();
  constexpr Direction kDirs[] = {Direction::out, Direction::in};

  {
    CheckRecorder chk("core-invariants");
    std::int64_t out_sum = 0;
    std::int64_t in_sum = 0;
    for (Vertex x = 0; x < n; ++x) {
      const DegreeProfile p = degree_profile(t, x);
      chk.expect(p.out_total + p.in_total == r * (c - 1), "degree sum at vertex " + std::to_string(x));
      for (int i = 0; i < c; ++i)
        if (i != t.part_of(x))
          chk.expect(p.out_by_part[i] + p.in_by_part[i] == r, "part split at vertex " + std::to_string(x));
      out_sum += p.out_total;
      in_sum += p.in_total;
    }
    chk.expect(out_sum == t.arc_count() && in_sum == t.arc_count(), "handshake");
    const int ig = global_irregularity(t);
    chk.expect(ig == global_irregularity_balanced(t), "i_g scan vs balanced shortcut");
    chk.expect(2 * max_degree(t) == r * (c - 1) + ig, "Delta = (r(c-1) + i_g)/2");
    chk.expect(2 * min_degree(t) == r * (c - 1) - ig, "delta = (r(c-1) - i_g)/2");
    chk.expect(local_partite_irregularity(t) * (c - 1) >= ig, "mu (c-1) >= i_g");
    chk.expect(load(save(t)) == t, "save/load round trip");
    out.push_back(chk.done());
  }

  {
    CheckRecorder chk("counting-completeness");
    const BigInt expected = ipow(BigInt(r), static_cast<unsigned>(c - 1));
    for (Vertex x = 0; x < n; ++x)
      for (Direction d : kDirs) {
        BigInt sum = 0;
        for (const BigInt& v : count_by_degree(t, x, d).counts) sum += v;
        chk.expect(sum == expected, "sum of counts != r^(c-1) at vertex " + std::to_string(x));
      }
    out.push_back(chk.done());
  }

  {
    CheckRecorder chk("reversal-duality");
    const Tournament rev = t.reversed();
    for (Vertex x = 0; x < n; ++x)
      for (int q = 0; q < c; ++q)
        chk.expect(t_q(t, x, q, Direction::out) == t_q(rev, x, q, Direction::in), detail::at(x, q, Direction::out));
    out.push_back(chk.done());
  }

  {
    CheckRecorder chk("oracle-equivalence");
    const std::uint64_t space = saturating_pow(static_cast<std::uint64_t>(r), c - 1);
    if (space > max_enum) {
      chk.skip("r^(c-1) = " + std::to_string(space) + " exceeds --max-enum");
    } else {
      for (Vertex x = 0; x < n; ++x)
        for (Direction d : kDirs)
          for (int q = 0; q < c; ++q)
            chk.expect(t_q(t, x, q, d) == oracle_count(t, x, q, d, max_enum), detail::at(x, q, d));
    }
    out.push_back(chk.done());
  }

  {
    CheckRecorder chk("corollary-monotonicity");
    for (int q = 1; q < c; ++q) {
      const HypothesisVerdict h = corollary_hypothesis(t, q);
      if (!h.holds || h.out_of_range) continue;
      for (Vertex x = 0; x < n; ++x)
        for (Direction d : kDirs) {
          const CountVector cv = count_by_degree(t, x, d);
          chk.expect(cv.counts[q] >= cv.counts[q - 1], detail::at(x, q, d));
        }
    }
    out.push_back(chk.done());
  }

  {
    CheckRecorder chk("thm3-soundness");
    CheckRecorder chk4("thm4-soundness");
    for (int q = 0; q < c; ++q) {
      const HypothesisVerdict h = thm3_hypothesis(t, q);
      if (!h.holds || h.out_of_range) continue;
      const Thm4Result t4 = thm4_bound(t, q);
      const bool thm4_applies = t4.beta_condition.holds && t4.bound.has_value();
      for (Vertex x = 0; x < n; ++x)
        for (Direction d : kDirs) {
          const BigInt exact = t_q(t, x, q, d);
          chk.expect(thm3_bound_holds(t, x, q, d, exact), detail::at(x, q, d));
          if (thm4_applies) chk4.expect(Rational(exact) <= *t4.bound, detail::at(x, q, d));
        }
    }
    out.push_back(chk.done());
    out.push_back(chk4.done());
  }

  {
    CheckRecorder chk("search-and-pigeonhole");
    const std::uint64_t space = saturating_pow(static_cast<std::uint64_t>(r), c);
    if (c < 3) {
      chk.skip("c < 3");
    } else if (space > max_enum) {
      chk.skip("r^c = " + std::to_string(space) + " exceeds --max-enum");
    } else {
      const int d = moon_threshold(c);
      const SearchOutcome s = exhaustive_search(t, d, {.cap = max_enum});
      if (s.found) {
        chk.expect(*s.witness_min_degree >= d, "witness min degree below target");
        chk.expect(*s.is_strong, "witness not strong");
      } else {
        const int q = threshold_q(c);
        chk.expect(pigeonhole_sum(t, q) >= transversal_count(t), "pigeonhole sum < r^c");
        const Thm5Report rep = thm5_applicable(t);
        chk.expect(!rep.guarantees_witness, "existence guaranteed but no witness found");
      }
    }
    out.push_back(chk.done());
  }

  return out;
}

}  // namespace mpt
