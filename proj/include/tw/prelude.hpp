#pragma once

#include <string>
#include <vector>

#include "tw/syntax.hpp"

namespace tw {

// Closed library terms, each paired with its checked type in prelude().
// Booleans: false = 0, true = 1. Streams of type nat -> bool stand for
// elements of the Cantor space 2^N; the monotone ones form the one-point
// compactification of N, with n-bar = 0^n 1^w and infinity = 0^w.

Term tm_not();       // bool -> bool
Term tm_and();       // bool -> bool -> bool
Term tm_or();        // bool -> bool -> bool
Term tm_implies();   // bool -> bool -> bool
Term tm_eqbool();    // bool -> bool -> bool
Term tm_pred();      // nat -> nat
Term tm_iszero();    // nat -> bool
Term tm_monus();     // nat -> nat -> nat (truncated subtraction)
Term tm_leq();       // nat -> nat -> bool
Term tm_add();       // nat -> nat -> nat
Term tm_mult();      // nat -> nat -> nat

/// bexists q i = 1 iff q(n) = 1 for some n <= i (bound inclusive); the
/// bounded existential reduced to primitive recursion at result type bool.
Term tm_bexists();   // (nat -> bool) -> nat -> bool

/// nbar n = the stream 0^n 1^w: bit i is 1 iff n <= i.
Term tm_nbar();      // nat -> nat -> bool

Term tm_infty();     // nat -> bool, the stream 0^w
Term tm_zerobar();   // nat -> bool, the stream 1^w (= nbar 0 extensionally)

/// cons a = the stream 0a: bit 0 is 0 and bit i+1 is a(i). Maps n-bar to
/// (n+1)-bar and fixes infinity.
Term tm_cons();      // (nat -> bool) -> nat -> bool

/// The selection functional for the compactified naturals:
/// eps p has bit i = 1 iff p(nbar n) for some n <= i, so eps p is the
/// infimum of the satisfying monotone streams (infinity when none satisfy).
Term tm_eps();       // ((nat -> bool) -> bool) -> nat -> bool

/// test f = (f(eps(\x. f(cons x) = f(infty))) = f(infty)) ==> (f(zerobar) = f(infty)).
/// Holds for every definable f; fails in the model for the function that is 1
/// exactly at infinity.
Term tm_test();      // ((nat -> bool) -> bool) -> bool

struct PreludeEntry {
  std::string name;
  Term term;
  Type type;
};

/// All prelude definitions in source order.
const std::vector<PreludeEntry>& prelude();

/// The exact text of the shipped prelude.t.
const std::string& prelude_source();

}  // namespace tw
