#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "tw/denot.hpp"

namespace tw {

/// A point of the one-point compactification of the naturals, in tagged form.
/// The stream form (via embed) consists of the monotone bit sequences
/// n-bar = 0^n 1^w and infinity = 0^w; the tag records which point a stream
/// is — information that no computation on finitely many bits can recover
/// for infinity. Order: Finite(m) <= Finite(n) iff m <= n, and every point
/// <= Infinity (the top element).
class NInfPoint {
 public:
  static NInfPoint finite(uint64_t n) { return NInfPoint{n}; }
  static NInfPoint infinity() { return NInfPoint{std::nullopt}; }

  bool is_finite() const { return n_.has_value(); }
  bool is_infinity() const { return !n_.has_value(); }
  uint64_t value() const;  // pre: is_finite()

  std::string to_string() const;  // "3-bar" / "infinity"

  friend bool operator==(const NInfPoint& a, const NInfPoint& b) { return a.n_ == b.n_; }
  friend bool operator!=(const NInfPoint& a, const NInfPoint& b) { return !(a == b); }

 private:
  explicit NInfPoint(std::optional<uint64_t> n) : n_(n) {}
  std::optional<uint64_t> n_;
};

/// The stream of a tagged point: Finite(n) -> 0^n 1^w, Infinity -> 0^w.
BitStream embed(const NInfPoint& x);

/// 1 iff the length-k prefix of `s` is monotone nondecreasing (k >= 1); the
/// bit-level membership test for the compactified naturals.
int member_prefix_check(const BitStream& s, uint64_t k);

/// Finite(n) -> Finite(n+1); Infinity -> Infinity.
NInfPoint succ_point(const NInfPoint& x);

/// The discontinuous functional at the heart of the counter-example:
/// 1 at Infinity, 0 at every finite point. Not definable — as a function on
/// streams it would have to inspect infinitely many bits.
int f_kreisel(const NInfPoint& x);

/// How eps_point is allowed to resolve the (undecidable in general) question
/// of whether some finite point satisfies the predicate.
struct ConstantOnFinite {
  int bit;  // the predicate provably takes this value at every finite point
};
struct BoundedSearch {
  uint64_t bound;  // >= 1
};
using WitnessPolicy = std::variant<ConstantOnFinite, BoundedSearch>;

/// Honest negative verdict of a bounded search: no witness below the bound.
/// Never coerced to Infinity.
struct NoWitnessUpTo {
  uint64_t bound;
};
using EpsPointResult = std::variant<NInfPoint, NoWitnessUpTo>;

/// A ConstantOnFinite certificate failed its spot check.
struct CertificateViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The selection functional on tagged points: the infimum of the satisfying
/// set, where the infimum of the empty set is the top element Infinity.
///   ConstantOnFinite(0): no finite point satisfies p, result Infinity
///     (whether p(Infinity) holds affects membership, not the infimum).
///   ConstantOnFinite(1): result Finite(0).
///   BoundedSearch(B): least n <= B with p(Finite n), else NoWitnessUpTo(B).
/// Certificates are spot-checked at a few finite points; a contradiction
/// throws CertificateViolation.
EpsPointResult eps_point(const std::function<int(const NInfPoint&)>& p,
                         const WitnessPolicy& policy);

/// Outcome of running the test functional over tagged points, with the
/// denotational cross-validation bound folded in.
struct CounterexampleReport {
  int test_value;
  int antecedent_holds;
  int consequent_holds;
  uint64_t eps_prefix_zero_up_to;
  int f_kreisel_at_infinity;
  int f_kreisel_at_zerobar;
};

/// Runs test(f_kreisel) over tagged points (bound >= 1):
///   p(x) = [f_kreisel(x+1) = f_kreisel(infinity)] is constantly 0 on finite
///   points (f_kreisel(Finite m+1) = 0 while f_kreisel(infinity) = 1), so
///   eps_point returns Infinity; the antecedent [f(inf) = f(inf)] holds, the
///   consequent [f(0-bar) = f(inf)] = [0 = 1] fails, and test_value = 0.
/// Cross-validates the T-definable side: the stream of tm_eps applied to the
/// computable restriction of p must be all zeros out to `bound`
/// (eps_prefix_zero_up_to reports the verified length). Throws
/// CertificateViolation or SemanticError if either check fails — both would
/// indicate an implementation bug.
CounterexampleReport run_counterexample(uint64_t bound);

/// The same pipeline with f_kreisel replaced by the constant-1 function;
/// test_value comes out 1 (its eps stream is all ones, so
/// eps_prefix_zero_up_to is 0).
CounterexampleReport run_counterexample_control(uint64_t bound);

/// Least n <= bound with f(n-bar) = f(infinity), if any: the agreement index
/// that continuity guarantees for every definable functional.
std::optional<uint64_t> discontinuity_scan(const std::function<int(const NInfPoint&)>& f,
                                           uint64_t bound);

struct DiscontinuityReport {
  uint64_t bound;
  int value_at_infinity;                 // f_kreisel(infinity) = 1
  bool finite_values_all_zero;           // f_kreisel(n-bar) = 0 for all n <= bound
  std::optional<uint64_t> agreement_at;  // empty: no agreement below the bound
};

/// Certifies the discontinuity of f_kreisel up to `bound` (>= 1): value 1 at
/// Infinity, 0 at every sampled finite point, hence no agreement index below
/// the bound — the continuity property every definable functional enjoys
/// fails here.
DiscontinuityReport discontinuity_certificate(uint64_t bound);

}  // namespace tw
