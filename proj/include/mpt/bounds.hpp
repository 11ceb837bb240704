#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpt/counting.hpp"
#include "mpt/numeric.hpp"
#include "mpt/tournament.hpp"

namespace mpt {

struct HypothesisVerdict {
  std::string name;
  bool holds = false;
  Rational lhs;
  Rational rhs;
  Rational margin;
  // holds <=> lhs > rhs when strict, lhs >= rhs otherwise.
  bool strict = false;
  // Inputs fall outside the range the statement is made for.
  bool out_of_range = false;
};

inline HypothesisVerdict make_verdict(std::string name, Rational lhs, Rational rhs, bool strict,
                                      bool out_of_range = false) {
  HypothesisVerdict v;
  v.name = std::move(name);
  v.holds = strict ? lhs > rhs : lhs >= rhs;
  v.margin = lhs - rhs;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.strict = strict;
  v.out_of_range = out_of_range;
  return v;
}

// sum g_i >= q(r + Gamma - gamma) - Gamma, Gamma/gamma the max/min weight.
// When it holds, M(g; q) >= M(g; q-1).
inline HypothesisVerdict lemma2_hypothesis(std::span<const Rational> g, int r, int q) {
  if (q < 1) throw Error("lemma2_hypothesis: q must be >= 1");
  if (g.empty()) throw Error("lemma2_hypothesis: empty weight sequence");
  Rational sum = 0;
  for (const Rational& gi : g) {
    if (gi < 0 || gi > r) throw Error("lemma2_hypothesis: weight outside [0, r]");
    sum += gi;
  }
  const auto [lo, hi] = std::minmax_element(g.begin(), g.end());
  Rational rhs = Rational(q) * (Rational(r) + *hi - *lo) - *hi;
  return make_verdict("lemma2", sum, rhs, false, r < 2);
}

// delta(G) >= q(r + mu(G)): every vertex then has counts[q] >= counts[q-1].
inline HypothesisVerdict corollary_hypothesis(const Tournament& t, int q) {
  if (q < 1) throw Error("corollary_hypothesis: q must be >= 1");
  const int mu = local_partite_irregularity(t);
  return make_verdict("corollary", min_degree(t), Rational(q) * (t.part_size() + mu), false,
                      t.parts() < 3 || t.part_size() < 2);
}

// delta(G) >= q(r + mu(G))(c-1)/(c-2), decided as
// (c-2) delta >= q (r + mu)(c-1) over the integers.
inline HypothesisVerdict thm3_hypothesis(const Tournament& t, int q) {
  const int c = t.parts();
  const int r = t.part_size();
  const bool out_of_range = c < 5 || r < 2;
  const BigInt delta = min_degree(t);
  const BigInt mu = local_partite_irregularity(t);
  const BigInt lhs_int = BigInt(c - 2) * delta;
  const BigInt rhs_int = BigInt(q) * (r + mu) * (c - 1);
  HypothesisVerdict v;
  v.name = "thm3";
  v.strict = false;
  v.out_of_range = out_of_range;
  v.holds = lhs_int >= rhs_int;
  v.lhs = Rational(delta);
  v.rhs = c > 2 ? Rational(rhs_int, BigInt(c - 2)) : Rational(rhs_int);
  v.margin = v.lhs - v.rhs;
  return v;
}

// Numerator of the binomial bound over the common denominator (c-1)^(c-1):
// sum_{k<=q} C(c-1,k) a^k b^(c-1-k) with (a, b) = (d+, d-) for out, swapped
// for in.
inline BigInt thm3_bound_numerator(const Tournament& t, Vertex x, int q, Direction dir) {
  if (!t.contains(x)) throw Error("vertex " + std::to_string(x) + " out of range");
  const int s = t.parts() - 1;
  const BigInt a = t.degree(x, dir);
  const BigInt b = t.degree(x, dir == Direction::out ? Direction::in : Direction::out);
  BigInt sum = 0;
  for (int k = 0; k <= std::min(q, s); ++k)
    sum += binomial(s, k) * ipow(a, static_cast<unsigned>(k)) * ipow(b, static_cast<unsigned>(s - k));
  return sum;
}

inline BigInt thm3_bound_denominator(const Tournament& t) {
  return ipow(BigInt(t.parts() - 1), static_cast<unsigned>(t.parts() - 1));
}

inline Rational thm3_bound(const Tournament& t, Vertex x, int q, Direction dir = Direction::out) {
  return Rational(thm3_bound_numerator(t, x, q, dir), thm3_bound_denominator(t));
}

// (c-1)^(c-1) * exact <= numerator, all integers.
inline bool thm3_bound_holds(const Tournament& t, Vertex x, int q, Direction dir, const BigInt& exact) {
  return thm3_bound_denominator(t) * exact <= thm3_bound_numerator(t, x, q, dir);
}

struct Thm4Result {
  Rational beta;
  std::optional<Rational> bound;
  HypothesisVerdict beta_condition;
  HypothesisVerdict thm3;
  // The exponent c-2-2q went negative (q beyond (c-2)/2).
  bool negative_exponent = false;
};

// beta = i_g / (r(c-1)); with beta < (c-2q-2)/c the uniform bound
// C(c-1,q+1) (r/2)^(c-1) (1+beta)^(c-2-2q) (q+1) / (c(1-beta)-2q-2).
// The bound is absent exactly when that denominator is <= 0.
inline Thm4Result thm4_bound(const Tournament& t, int q) {
  const int c = t.parts();
  const int r = t.part_size();
  Thm4Result out;
  out.beta = Rational(global_irregularity(t), r * (c - 1));
  out.beta_condition = make_verdict("thm4-beta", Rational(c - 2 * q - 2, c), out.beta, true, c < 5 || r < 2);
  out.thm3 = thm3_hypothesis(t, q);

  const Rational denom = Rational(c) * (1 - out.beta) - 2 * q - 2;
  if (denom <= 0) return out;
  const int exponent = c - 2 - 2 * q;
  out.negative_exponent = exponent < 0;
  out.bound = Rational(binomial(c - 1, q + 1)) * ipow(Rational(r, 2), static_cast<unsigned>(c - 1)) *
              rpow(1 + out.beta, exponent) * (q + 1) / denom;
  return out;
}

struct BoundReport {
  Vertex vertex = 0;
  Direction direction = Direction::out;
  int q = 0;
  BigInt exact;
  Rational thm3_bound;
  std::optional<Rational> thm4_bound;
  bool thm3_satisfied = false;
  std::optional<bool> thm4_satisfied;
  std::vector<HypothesisVerdict> hypotheses;
};

inline BoundReport bound_report(const Tournament& t, Vertex x, int q, Direction dir) {
  BoundReport rep;
  rep.vertex = x;
  rep.direction = dir;
  rep.q = q;
  rep.exact = t_q(t, x, q, dir);
  rep.thm3_bound = thm3_bound(t, x, q, dir);
  rep.thm3_satisfied = thm3_bound_holds(t, x, q, dir, rep.exact);
  Thm4Result t4 = thm4_bound(t, q);
  if (t4.bound) {
    rep.thm4_satisfied = Rational(rep.exact) <= *t4.bound;
    rep.thm4_bound = std::move(t4.bound);
  }
  rep.hypotheses.push_back(std::move(t4.thm3));
  rep.hypotheses.push_back(std::move(t4.beta_condition));
  return rep;
}

// ---------------------------------------------------------------------------
// Existence thresholds

inline int threshold_q(int c) { return (c - 2) / 4; }

// f_alpha(c) = C(c-1, q+1) ((2c-2+alpha)/(2c-2))^(c-2-2q) (q+1) c
//              / (c (2c-2-alpha)/(2c-2) - 2q - 2),   q = floor((c-2)/4).
// Throws when the denominator is not positive.
inline Rational f_alpha(const Rational& alpha, int c) {
  if (alpha < 0) throw Error("f_alpha: alpha must be >= 0");
  if (c < 5) throw Error("f_alpha: c must be >= 5");
  const int q = threshold_q(c);
  const Rational denom = Rational(c) * Rational(2 * c - 2 - alpha) / (2 * c - 2) - 2 * q - 2;
  if (denom <= 0)
    throw Error("f_alpha: non-positive denominator at alpha=" + to_string(alpha) + ", c=" + std::to_string(c));
  const Rational growth = Rational(2 * c - 2 + alpha) / (2 * c - 2);
  return Rational(binomial(c - 1, q + 1)) * ipow(growth, static_cast<unsigned>(c - 2 - 2 * q)) * (q + 1) * c /
         denom;
}

inline BigInt g_threshold(int c) { return ipow(BigInt(2), static_cast<unsigned>(c - 2)); }

struct ThresholdRow {
  Rational alpha;
  int c = 0;
  int q = 0;
  std::optional<Rational> f_alpha;  // absent: inapplicable at (alpha, c)
  BigInt g;
  bool passes = false;  // f_alpha < g, strict
};

inline ThresholdRow threshold_row(const Rational& alpha, int c) {
  ThresholdRow row;
  row.alpha = alpha;
  row.c = c;
  row.q = threshold_q(c);
  row.g = g_threshold(c);
  try {
    row.f_alpha = f_alpha(alpha, c);
  } catch (const Error&) {
    return row;
  }
  // p/q < g  <=>  p < g q  (q > 0)
  row.passes = boost::multiprecision::numerator(*row.f_alpha) <
               row.g * boost::multiprecision::denominator(*row.f_alpha);
  return row;
}

inline std::vector<ThresholdRow> threshold_table(const Rational& alpha, int c_from, int c_to) {
  if (c_from < 5 || c_from > c_to) throw Error("threshold_table: need 5 <= from <= to");
  std::vector<ThresholdRow> rows;
  for (int c = c_from; c <= c_to; ++c) rows.push_back(threshold_row(alpha, c));
  return rows;
}

struct RatioCheck {
  int c = 0;
  Rational ratio;  // f_alpha(c+4) / f_alpha(c)
  bool ok = false; // ratio < 16 = g(c+4)/g(c)
};

inline RatioCheck ratio_check(const Rational& alpha, int c) {
  if (c < 13) throw Error("ratio_check: c must be >= 13");
  RatioCheck rc;
  rc.c = c;
  rc.ratio = f_alpha(alpha, c + 4) / f_alpha(alpha, c);
  rc.ok = rc.ratio < 16;
  return rc;
}

// Existence regimes: irregularity at most alpha*r/2, c >= min_c, with the
// listed exceptions.
struct ExistenceCase {
  std::string label;
  int alpha;
  int min_c;
  std::array<int, 3> exceptions;
};

inline const std::array<ExistenceCase, 3>& existence_cases() {
  static const std::array<ExistenceCase, 3> cases{{
      {"i", 1, 13, {14, 15, 18}},
      {"ii", 2, 17, {18, 19, 22}},
      {"iii", 3, 21, {22, 23, 26}},
  }};
  return cases;
}

struct CaseVerdict {
  std::string label;
  int alpha = 0;
  bool irregularity_ok = false;  // 2 i_g <= alpha r
  bool order_ok = false;         // c >= min_c and c not excepted
  bool applies = false;
};

struct Thm5Report {
  int c = 0;
  int r = 0;
  int q = 0;
  int global_irregularity = 0;
  HypothesisVerdict delta_hypothesis;
  std::vector<CaseVerdict> cases;
  // Smallest usable alpha, 2 i_g / r, and the strict test f_alpha(c) < 2^(c-2).
  Rational min_alpha;
  std::optional<Rational> min_alpha_f;
  bool min_alpha_passes = false;
  // delta-hypothesis holds, r >= 2, and some case or the minimal-alpha test passes.
  bool guarantees_witness = false;
};

inline Thm5Report thm5_applicable(const Tournament& t) {
  Thm5Report rep;
  rep.c = t.parts();
  rep.r = t.part_size();
  rep.q = threshold_q(rep.c);
  rep.global_irregularity = global_irregularity(t);
  rep.delta_hypothesis = thm3_hypothesis(t, rep.q);
  rep.delta_hypothesis.name = "thm5-delta";

  bool any_case = false;
  for (const ExistenceCase& ec : existence_cases()) {
    CaseVerdict cv;
    cv.label = ec.label;
    cv.alpha = ec.alpha;
    cv.irregularity_ok = 2 * rep.global_irregularity <= ec.alpha * rep.r;
    cv.order_ok = rep.c >= ec.min_c &&
                  std::find(ec.exceptions.begin(), ec.exceptions.end(), rep.c) == ec.exceptions.end();
    cv.applies = cv.irregularity_ok && cv.order_ok && rep.r >= 2;
    any_case = any_case || cv.applies;
    rep.cases.push_back(cv);
  }

  rep.min_alpha = Rational(2 * rep.global_irregularity, rep.r);
  if (rep.c >= 5) {
    ThresholdRow row = threshold_row(rep.min_alpha, rep.c);
    rep.min_alpha_f = row.f_alpha;
    rep.min_alpha_passes = row.passes && rep.r >= 2;
  }
  rep.guarantees_witness = rep.delta_hypothesis.holds && !rep.delta_hypothesis.out_of_range &&
                           (any_case || rep.min_alpha_passes);
  return rep;
}

// sum over x of T_q^+(x) + T_q^-(x). When no transversal has minimum degree
// > q, every one of the r^c transversals is counted at least once here.
inline BigInt pigeonhole_sum(const Tournament& t, int q) {
  BigInt sum = 0;
  for (Vertex x = 0; x < t.order(); ++x) sum += t_q(t, x, q, Direction::out) + t_q(t, x, q, Direction::in);
  return sum;
}

inline BigInt transversal_count(const Tournament& t) {
  return ipow(BigInt(t.part_size()), static_cast<unsigned>(t.parts()));
}

}  // namespace mpt
