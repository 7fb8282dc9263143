#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tw/denot.hpp"
#include "tw/syntax.hpp"

namespace tw {

/// Parameters for deterministic generation of well-typed closed terms.
/// Generation is a pure function of (target_type, max_size, seed, index):
/// the same inputs always produce the structurally same term.
struct GenConfig {
  Type target_type;
  uint64_t max_size = 24;  // AST node budget, >= 1
  uint64_t seed = 0;
  uint64_t count = 100;  // number of generated samples in a harness run
};

struct GenError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A closed, well-typed term of cfg.target_type with at most cfg.max_size
/// nodes, drawn from variables in scope, library combinators, and the
/// constructors (Lam/App/If/Rec/Succ/Zero/True/False) with size-aware
/// weights. Rec scrutinees are numeric literals <= 6 so everything evaluates
/// fast. Throws GenError if the budget cannot close a term of the type.
Term gen_term(const GenConfig& cfg, uint64_t index);

/// gen_term specialized to predicates of type (nat -> bool) -> bool, with a
/// read-locality guarantee: evaluating the predicate on the all-zero stream
/// queries only indices < 64. Candidates violating the bound are rejected
/// and regenerated deterministically. The guarantee makes a witness bound of
/// 64 exact: a predicate that holds at some n-bar but at none with n <= 64
/// would have to distinguish streams agreeing on bits 0..63.
Term gen_predicate(const GenConfig& cfg, uint64_t index);

/// Fixed functionals of type (nat -> bool) -> bool: constants, the
/// projections fun a. a k for k <= 8, and small library compositions.
/// Random small terms are often constant, so the corpus guarantees coverage
/// of genuinely input-reading functionals. Every harness below appends it
/// after the generated samples.
const std::vector<Term>& functional_corpus();

/// Outcome of a property harness run. Sample indices < count refer to
/// generated terms (replay via gen_term/gen_predicate with the same config);
/// indices >= count refer to functional_corpus()[index - count].
struct FuzzReport {
  uint64_t samples = 0;
  std::vector<uint64_t> failures;
  uint64_t seed = 0;
  uint64_t elapsed_ms = 0;
  uint64_t max_depth = 0;  // deepest model application nesting observed
  bool ok() const { return failures.empty(); }
};

/// For each functional f (cfg.count generated at (nat->bool)->bool, plus the
/// corpus), checks that the test functional applied to f denotes 1. Any 0 is
/// recorded as a failure — it would exhibit a non-constant test on a
/// definable argument.
FuzzReport check_test_constancy(const GenConfig& cfg);

/// For each predicate p (cfg.count via gen_predicate, plus the corpus),
/// compares the first prefix_len bits of the eps stream against a
/// brute-force oracle (running OR of p at 0-bar, 1-bar, ...), and checks the
/// prefix is monotone. Any mismatch is a failure.
FuzzReport check_eps_oracle(const GenConfig& cfg, uint64_t prefix_len);

/// For each predicate p (same sample list as check_eps_oracle), checks the
/// defining property of the selection functional: p(eps p) = 1 exactly when
/// p holds at some n-bar with n <= witness_bound or at infinity; and when
/// p(eps p) = 0, additionally p(infinity) = 0 and p(n-bar) = 0 for every
/// n <= tail_bound.
FuzzReport check_witness_property(const GenConfig& cfg, uint64_t witness_bound,
                                  uint64_t tail_bound);

/// Least n <= max_n with f(n-bar) = f(infinity), or nullopt if there is none
/// below the bound. Every definable f has such an n by continuity, so an
/// empty result at a generous bound flags non-definable-like behavior.
std::optional<uint64_t> agreement_index(const SemVal& f, uint64_t max_n);

}  // namespace tw
