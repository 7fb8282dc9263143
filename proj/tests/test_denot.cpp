#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <string>
#include <vector>

#include "tw/denot.hpp"
#include "tw/eval.hpp"
#include "tw/parse.hpp"
#include "tw/typecheck.hpp"

using namespace tw;

namespace {
SemVal den(const std::string& src) { return denote(parse_term_text(src)); }
}  // namespace

TEST_CASE("ground denotations") {
  CHECK(den("0").nat_value() == 0);
  CHECK(den("5").nat_value() == 5);
  CHECK(den("succ 5").nat_value() == 6);
  CHECK(den("true").bool_value());
  CHECK(den("true").bit_value() == 1);
  CHECK(den("false").bit_value() == 0);
}

TEST_CASE("functions denote host functions") {
  SemVal inc = den("fun x : nat . succ x");
  CHECK(inc.is_fun());
  CHECK(apply_sem(inc, SemVal::nat(41)).nat_value() == 42);
  CHECK(inc.apply(SemVal::nat(0)).nat_value() == 1);

  SemVal twice = den("fun f : nat -> nat . fun n : nat . f (f n)");
  CHECK(apply_sem(apply_sem(twice, inc), SemVal::nat(3)).nat_value() == 5);
}

TEST_CASE("rec and if in the model") {
  CHECK(den("rec 2 (fun k : nat . fun r : nat . succ r) 3").nat_value() == 5);
  CHECK(den("rec 7 (fun k : nat . fun r : nat . 0) 0").nat_value() == 7);
  CHECK(den("rec 0 (fun k : nat . fun r : nat . k) 3").nat_value() == 2);
  CHECK(den("if false then 1 else 2").nat_value() == 2);
}

TEST_CASE("eval and denote agree on hand-picked ground terms") {
  const char* sources[] = {
      "rec 0 (fun k : nat . fun r : nat . succ (succ r)) 6",
      "(fun x : nat . (fun x : nat . x) 5) 9",
      "if (fun b : bool . b) false then 1 else 2",
      "(rec (fun n : nat . n) (fun k : nat . fun g : nat -> nat . fun n : nat . succ (g n)) 4) 10",
      "rec true (fun k : nat . fun r : bool . if r then false else true) 5",
  };
  for (const char* src : sources) {
    CAPTURE(src);
    Term t = parse_term_text(src);
    Type ty = typecheck(t);
    MachineValue m = eval_closed(t);
    SemVal s = denote(t);
    if (ty == Type::nat()) {
      CHECK(m.nat_value() == s.nat_value());
    } else {
      CHECK(m.bool_value() == s.bool_value());
    }
  }
}

TEST_CASE("denote under an environment") {
  SemEnv env = SemEnv{}.push(SemVal::nat(3)).push(SemVal::boolean(true));
  // index 0 = most recent push
  CHECK(denote(Term::var(0), env).bool_value());
  CHECK(denote(Term::var(1), env).nat_value() == 3);
}

TEST_CASE("compile once, run under many environments") {
  CompiledTerm body = compile(parse_term_text("fun x : nat . succ x"));
  SemVal f1 = body(SemEnv{});
  CHECK(apply_sem(f1, SemVal::nat(1)).nat_value() == 2);

  CompiledTerm open = compile(Term::succ(Term::var(0)));
  CHECK(open(SemEnv{}.push(SemVal::nat(10))).nat_value() == 11);
  CHECK(open(SemEnv{}.push(SemVal::nat(20))).nat_value() == 21);
}

TEST_CASE("apply_sem rejects non-functions") {
  CHECK_THROWS_AS(apply_sem(SemVal::nat(0), SemVal::nat(0)), SemanticError);
  CHECK_THROWS_AS(SemVal::nat(0).bool_value(), SemanticError);
  CHECK_THROWS_AS(SemVal::boolean(true).nat_value(), SemanticError);
}

TEST_CASE("bit streams memoize per index") {
  auto calls = std::make_shared<std::vector<uint64_t>>();
  BitStream s([calls](uint64_t i) {
    calls->push_back(i);
    return static_cast<int>(i % 2);
  });
  CHECK(s.at(5) == 1);
  CHECK(s.at(5) == 1);
  CHECK(s.at(4) == 0);
  CHECK(s.at(5) == 1);
  CHECK(calls->size() == 2);  // one evaluation per distinct index

  std::vector<int> expected = {0, 1, 0, 1};
  CHECK(s.prefix(4) == expected);
}

TEST_CASE("stream/model conversions") {
  BitStream parity([](uint64_t i) { return static_cast<int>(i % 2); });
  SemVal as_sem = stream_to_sem(parity);
  CHECK(apply_sem(as_sem, SemVal::nat(7)).bit_value() == 1);
  CHECK(apply_sem(as_sem, SemVal::nat(8)).bit_value() == 0);

  BitStream back = sem_to_stream(as_sem);
  CHECK(back.at(7) == 1);
  CHECK(back.at(8) == 0);

  // sem_to_stream queries the model value once per index
  auto count = std::make_shared<int>(0);
  SemVal counting = SemVal::fun([count](const SemVal& idx) {
    ++*count;
    return SemVal::bit(idx.nat_value() == 2 ? 1 : 0);
  });
  BitStream memoized = sem_to_stream(counting);
  CHECK(memoized.at(2) == 1);
  CHECK(memoized.at(2) == 1);
  CHECK(memoized.at(2) == 1);
  CHECK(*count == 1);

  CHECK_THROWS_AS(sem_to_stream(SemVal::nat(3)), SemanticError);
  SemVal not_bits = SemVal::fun([](const SemVal&) { return SemVal::nat(9); });
  CHECK_THROWS_AS(sem_to_stream(not_bits).at(0), SemanticError);
}

TEST_CASE("apply depth instrumentation") {
  reset_apply_depth();
  CHECK(max_apply_depth() == 0);
  SemVal twice = den("fun f : nat -> nat . fun n : nat . f (f n)");
  SemVal inc = den("fun x : nat . succ x");
  apply_sem(apply_sem(twice, inc), SemVal::nat(0));
  CHECK(max_apply_depth() >= 2);
  reset_apply_depth();
  CHECK(max_apply_depth() == 0);
}
