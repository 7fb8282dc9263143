#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tw/denot.hpp"
#include "tw/fuzz.hpp"
#include "tw/parse.hpp"
#include "tw/prelude.hpp"
#include "tw/pretty.hpp"
#include "tw/typecheck.hpp"

using namespace tw;

namespace {

Type predicate_type() {
  return Type::arrow(Type::arrow(Type::nat(), Type::boolean()), Type::boolean());
}

SemVal functional(const std::string& body) {
  SourceFile file = parse(prelude_source() + "\n" + body + "\n");
  REQUIRE(file.main.has_value());
  return denote(*file.main);
}

}  // namespace

TEST_CASE("generation is a pure function of config and index") {
  for (Type ty : {Type::nat(), Type::arrow(Type::nat(), Type::nat()), predicate_type()}) {
    CAPTURE(ty.to_string());
    GenConfig cfg{ty, 30, 42, 100};
    for (uint64_t i = 0; i < 20; ++i) {
      CHECK(gen_term(cfg, i) == gen_term(cfg, i));
    }
  }
}

TEST_CASE("generation does not collapse to a handful of shapes") {
  GenConfig cfg{Type::nat(), 30, 7, 100};
  std::set<std::string> shapes;
  for (uint64_t i = 0; i < 50; ++i) shapes.insert(pretty(gen_term(cfg, i)));
  CHECK(shapes.size() >= 10);
}

TEST_CASE("generated terms are closed, well-typed, and within budget") {
  const Type targets[] = {Type::nat(), Type::boolean(), Type::arrow(Type::nat(), Type::nat()),
                          Type::arrow(Type::nat(), Type::boolean()), predicate_type()};
  for (const Type& ty : targets) {
    CAPTURE(ty.to_string());
    GenConfig cfg{ty, 30, 2026, 200};
    for (uint64_t i = 0; i < 200; ++i) {
      CAPTURE(i);
      Term t = gen_term(cfg, i);
      REQUIRE(t.size() <= cfg.max_size);
      REQUIRE(typecheck(t) == ty);  // typecheck also rejects open terms
    }
  }
}

TEST_CASE("tiny budgets: ground types close, arrows cannot") {
  GenConfig tiny_bool{Type::boolean(), 1, 5, 10};
  for (uint64_t i = 0; i < 10; ++i) {
    Term t = gen_term(tiny_bool, i);
    CHECK((t == Term::lit_true() || t == Term::lit_false()));
  }
  GenConfig tiny_pred{predicate_type(), 1, 5, 10};
  CHECK_THROWS_AS(gen_term(tiny_pred, 0), GenError);
}

TEST_CASE("gen_predicate: well-typed and read-local on the all-zero stream") {
  GenConfig cfg{predicate_type(), 40, 99, 60};
  for (uint64_t i = 0; i < 60; ++i) {
    CAPTURE(i);
    Term p = gen_predicate(cfg, i);
    REQUIRE(typecheck(p) == predicate_type());

    auto max_read = std::make_shared<uint64_t>(0);
    auto read_any = std::make_shared<bool>(false);
    SemVal recording_zero_stream = SemVal::fun([max_read, read_any](const SemVal& n) {
      uint64_t index = n.nat_value();
      if (!*read_any || index > *max_read) *max_read = index;
      *read_any = true;
      return SemVal::bit(0);
    });
    apply_sem(denote(p), recording_zero_stream).bit_value();
    if (*read_any) CHECK(*max_read < 64);
  }
}

TEST_CASE("the fixed functional corpus") {
  const std::vector<Term>& corpus = functional_corpus();
  CHECK(corpus.size() == 25);
  for (size_t i = 0; i < corpus.size(); ++i) {
    CAPTURE(i);
    CHECK(typecheck(corpus[i]) == predicate_type());
  }
  CHECK(corpus[0] == Term::lam(Type::arrow(Type::nat(), Type::boolean()), Term::lit_true()));
}

TEST_CASE("harness: eps stream matches the brute-force oracle on a small run") {
  GenConfig cfg{predicate_type(), 40, 7, 25};
  FuzzReport r = check_eps_oracle(cfg, 64);
  CHECK(r.ok());
  CHECK(r.samples == 25 + functional_corpus().size());
  CHECK(r.seed == 7);
}

TEST_CASE("harness: the test functional is constantly 1 on a small run") {
  GenConfig cfg{predicate_type(), 40, 11, 40};
  FuzzReport r = check_test_constancy(cfg);
  CHECK(r.ok());
  CHECK(r.samples == 40 + functional_corpus().size());
}

TEST_CASE("harness: witness property on a small run") {
  GenConfig cfg{predicate_type(), 40, 13, 25};
  FuzzReport r = check_witness_property(cfg, 64, 1000);
  CHECK(r.ok());
  CHECK(r.samples == 25 + functional_corpus().size());
}

TEST_CASE("harness runs with equal configs produce identical reports") {
  GenConfig cfg{predicate_type(), 40, 21, 15};
  FuzzReport a = check_eps_oracle(cfg, 32);
  FuzzReport b = check_eps_oracle(cfg, 32);
  CHECK(a.samples == b.samples);
  CHECK(a.failures == b.failures);
  CHECK(a.seed == b.seed);
}

TEST_CASE("agreement_index: the modulus of continuity at hand-picked functionals") {
  std::optional<uint64_t> at = agreement_index(functional("fun a : nat -> bool . a 3"), 100);
  REQUIRE(at.has_value());
  CHECK(*at == 4);

  at = agreement_index(functional("fun a : nat -> bool . true"), 100);
  REQUIRE(at.has_value());
  CHECK(*at == 0);

  at = agreement_index(functional("fun a : nat -> bool . not (a 0)"), 100);
  REQUIRE(at.has_value());
  CHECK(*at == 1);
}
