#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tw/denot.hpp"
#include "tw/eval.hpp"
#include "tw/parse.hpp"
#include "tw/prelude.hpp"
#include "tw/typecheck.hpp"

using namespace tw;

namespace {

SemVal lib(const std::string& name) {
  for (const PreludeEntry& entry : prelude()) {
    if (entry.name == name) return denote(entry.term);
  }
  FAIL("no prelude entry named " << name);
  return SemVal::nat(0);
}

SemVal ap(const SemVal& f, const SemVal& a) { return apply_sem(f, a); }
SemVal ap(const SemVal& f, const SemVal& a, const SemVal& b) {
  return apply_sem(apply_sem(f, a), b);
}

// a predicate functional parsed with the library in scope
SemVal functional(const std::string& body) {
  SourceFile file = parse(prelude_source() + "\n" + body + "\n");
  REQUIRE(file.main.has_value());
  return denote(*file.main);
}

std::vector<int> prefix_of(const SemVal& stream, size_t len) {
  return sem_to_stream(stream).prefix(len);
}

}  // namespace

TEST_CASE("prelude entries typecheck at their declared types") {
  const char* expected_names[] = {"not",  "and",     "or",   "implies", "eqBool", "pred",
                                  "iszero", "monus", "leq",  "add",     "mult",   "bexists",
                                  "nbar", "infty",   "zerobar", "cons", "eps",    "test"};
  REQUIRE(prelude().size() == 18);
  for (size_t i = 0; i < prelude().size(); ++i) {
    const PreludeEntry& entry = prelude()[i];
    CAPTURE(entry.name);
    CHECK(entry.name == expected_names[i]);
    CHECK(typecheck(entry.term) == entry.type);
  }
}

TEST_CASE("the selection functional and the test functional have the advertised types") {
  CHECK(typecheck(tm_eps()).to_string() == "((nat -> bool) -> bool) -> nat -> bool");
  CHECK(typecheck(tm_test()).to_string() == "((nat -> bool) -> bool) -> bool");
}

TEST_CASE("prelude.t carries exactly the embedded library text") {
  std::ifstream in(TW_PRELUDE_FILE, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == prelude_source());
}

TEST_CASE("parsing the library text reproduces the constructed terms") {
  SourceFile file = parse(prelude_source());
  CHECK(!file.main.has_value());
  REQUIRE(file.definitions.size() == prelude().size());
  for (size_t i = 0; i < prelude().size(); ++i) {
    CAPTURE(prelude()[i].name);
    CHECK(file.definitions[i].first == prelude()[i].name);
    CHECK(file.definitions[i].second == prelude()[i].term);
  }
}

TEST_CASE("boolean combinators: full truth tables") {
  SemVal tt = SemVal::boolean(true);
  SemVal ff = SemVal::boolean(false);
  SemVal not_ = lib("not");
  SemVal and_ = lib("and");
  SemVal or_ = lib("or");
  SemVal implies_ = lib("implies");
  SemVal eq = lib("eqBool");

  CHECK(ap(not_, tt).bit_value() == 0);
  CHECK(ap(not_, ff).bit_value() == 1);
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(ap(and_, SemVal::boolean(a), SemVal::boolean(b)).bool_value() == (a && b));
      CHECK(ap(or_, SemVal::boolean(a), SemVal::boolean(b)).bool_value() == (a || b));
      CHECK(ap(implies_, SemVal::boolean(a), SemVal::boolean(b)).bool_value() == (!a || b));
      CHECK(ap(eq, SemVal::boolean(a), SemVal::boolean(b)).bool_value() == (a == b));
    }
  }
}

TEST_CASE("arithmetic combinators match host arithmetic") {
  SemVal pred_ = lib("pred");
  SemVal iszero_ = lib("iszero");
  SemVal monus_ = lib("monus");
  SemVal leq_ = lib("leq");
  SemVal add_ = lib("add");
  SemVal mult_ = lib("mult");

  CHECK(ap(pred_, SemVal::nat(0)).nat_value() == 0);
  CHECK(ap(pred_, SemVal::nat(5)).nat_value() == 4);
  CHECK(ap(iszero_, SemVal::nat(0)).bit_value() == 1);
  CHECK(ap(iszero_, SemVal::nat(3)).bit_value() == 0);

  for (uint64_t m = 0; m <= 8; ++m) {
    for (uint64_t n = 0; n <= 8; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(ap(add_, SemVal::nat(m), SemVal::nat(n)).nat_value() == m + n);
      CHECK(ap(mult_, SemVal::nat(m), SemVal::nat(n)).nat_value() == m * n);
      CHECK(ap(monus_, SemVal::nat(m), SemVal::nat(n)).nat_value() == (m > n ? m - n : 0));
      CHECK(ap(leq_, SemVal::nat(m), SemVal::nat(n)).bool_value() == (m <= n));
    }
  }

  // the evaluator path computes the same values as the model path
  Term five = Term::app(Term::app(tm_add(), Term::nat_literal(2)), Term::nat_literal(3));
  CHECK(eval_closed(five).nat_value() == 5);
  Term twelve = Term::app(Term::app(tm_mult(), Term::nat_literal(3)), Term::nat_literal(4));
  CHECK(eval_closed(twelve).nat_value() == 12);
}

TEST_CASE("bexists is the bounded existential, bound inclusive") {
  SemVal bexists_ = lib("bexists");
  SemVal q = SemVal::fun([](const SemVal& n) { return SemVal::bit(n.nat_value() == 2); });
  CHECK(ap(bexists_, q, SemVal::nat(0)).bit_value() == 0);
  CHECK(ap(bexists_, q, SemVal::nat(1)).bit_value() == 0);
  CHECK(ap(bexists_, q, SemVal::nat(2)).bit_value() == 1);
  CHECK(ap(bexists_, q, SemVal::nat(7)).bit_value() == 1);

  SemVal at_zero = SemVal::fun([](const SemVal& n) { return SemVal::bit(n.nat_value() == 0); });
  CHECK(ap(bexists_, at_zero, SemVal::nat(0)).bit_value() == 1);
}

TEST_CASE("stream constructors: nbar, infty, zerobar, cons") {
  std::vector<int> nbar3 = prefix_of(ap(lib("nbar"), SemVal::nat(3)), 6);
  CHECK(nbar3 == std::vector<int>{0, 0, 0, 1, 1, 1});
  std::vector<int> nbar0 = prefix_of(ap(lib("nbar"), SemVal::nat(0)), 4);
  CHECK(nbar0 == std::vector<int>{1, 1, 1, 1});
  CHECK(prefix_of(lib("infty"), 5) == std::vector<int>{0, 0, 0, 0, 0});
  CHECK(prefix_of(lib("zerobar"), 5) == std::vector<int>{1, 1, 1, 1, 1});

  // cons maps n-bar to (n+1)-bar and fixes infinity
  SemVal cons_ = lib("cons");
  SemVal cons_nbar3 = ap(cons_, ap(lib("nbar"), SemVal::nat(3)));
  CHECK(prefix_of(cons_nbar3, 6) == std::vector<int>{0, 0, 0, 0, 1, 1});
  CHECK(prefix_of(ap(cons_, lib("infty")), 6) == std::vector<int>{0, 0, 0, 0, 0, 0});
  CHECK(prefix_of(ap(cons_, lib("zerobar")), 4) == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("eps: hand-expanded prefixes") {
  SemVal eps_ = lib("eps");

  // p(alpha) = alpha(0): 0-bar satisfies it, so eps p = 0-bar = 1^w
  CHECK(prefix_of(ap(eps_, functional("fun a : nat -> bool . a 0")), 5) ==
        std::vector<int>{1, 1, 1, 1, 1});

  // p(alpha) = alpha(3) and not alpha(0): holds at n-bar iff 1 <= n <= 3,
  // least witness 1, so eps p = 1-bar
  CHECK(prefix_of(ap(eps_, functional("fun a : nat -> bool . and (a 3) (not (a 0))")), 5) ==
        std::vector<int>{0, 1, 1, 1, 1});

  // unsatisfiable predicate: the infimum of the empty set is infinity
  CHECK(prefix_of(ap(eps_, functional("fun a : nat -> bool . false")), 5) ==
        std::vector<int>{0, 0, 0, 0, 0});

  // p(alpha) = not alpha(0): fails at 0-bar, holds at 1-bar
  CHECK(prefix_of(ap(eps_, functional("fun a : nat -> bool . not (a 0)")), 5) ==
        std::vector<int>{0, 1, 1, 1, 1});
}

TEST_CASE("test denotes 1 at hand-picked definable functionals") {
  SemVal test_ = lib("test");
  const char* functionals[] = {
      "fun a : nat -> bool . true",
      "fun a : nat -> bool . false",
      "fun a : nat -> bool . a 0",
      "fun a : nat -> bool . a 1",
      "fun a : nat -> bool . a 2",
      "fun a : nat -> bool . a 3",
      "fun a : nat -> bool . not (a 0)",
      "fun a : nat -> bool . eqBool (a 0) (a 2)",
      "fun a : nat -> bool . bexists a 6",
  };
  for (const char* f : functionals) {
    CAPTURE(f);
    CHECK(ap(test_, functional(f)).bit_value() == 1);
  }
}
