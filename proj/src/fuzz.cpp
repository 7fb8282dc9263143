#include "tw/fuzz.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <utility>

#include "tw/ninf.hpp"
#include "tw/parse.hpp"
#include "tw/prelude.hpp"
#include "tw/typecheck.hpp"

namespace tw {

namespace {

constexpr uint64_t kReadBound = 64;
constexpr int kMaxAttempts = 64;

// splitmix64 output function; bijective, so distinct inputs stay distinct.
uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Hand-rolled so reports reproduce across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

 private:
  uint64_t state_;
};

// Smallest closable term of a type: a constant at ground types, otherwise a
// spine of lambdas down to one.
uint64_t min_size(const Type& ty) {
  return ty.is_arrow() ? 1 + min_size(ty.codomain()) : 1;
}

struct Combinator {
  Term term;
  Type type;
  uint64_t size;
};

const std::vector<Combinator>& combinator_pool() {
  static const std::vector<Combinator> pool = [] {
    std::vector<Combinator> out;
    for (const PreludeEntry& entry : prelude()) {
      // eps and test stay out: the harnesses probe those, the generator
      // builds their arguments.
      if (entry.name == "eps" || entry.name == "test") continue;
      out.push_back({entry.term, entry.type, entry.term.size()});
    }
    return out;
  }();
  return pool;
}

class Generator {
 public:
  explicit Generator(uint64_t seed) : rng_(seed) {}

  // pre: budget >= min_size(ty). Result has at most `budget` nodes.
  Term gen(const Type& ty, uint64_t budget) {
    struct Candidate {
      uint64_t weight;
      std::function<Term()> build;
    };
    std::vector<Candidate> cands;
    auto add = [&](uint64_t w, std::function<Term()> build) {
      cands.push_back({w, std::move(build)});
    };

    for (size_t j = 0; j < scope_.size(); ++j) {
      if (scope_[j] == ty) {
        int index = static_cast<int>(scope_.size() - 1 - j);
        add(5, [index] { return Term::var(index); });
      }
    }

    for (const Combinator& comb : combinator_pool()) {
      if (comb.type == ty && comb.size <= budget) {
        Term t = comb.term;
        add(2, [t] { return t; });
      }
    }

    // Generic application. Argument types: ground types, the stream type,
    // and domains of in-scope functions landing in ty — the latter weighted
    // up, because applying a bound variable is what makes a functional
    // actually read its input.
    {
      std::vector<std::pair<Type, uint64_t>> options = {
          {Type::nat(), 3},
          {Type::boolean(), 1},
          {Type::arrow(Type::nat(), Type::boolean()), 1},
      };
      for (size_t j = 0; j < scope_.size(); ++j) {
        if (scope_[j].is_arrow() && scope_[j].codomain() == ty) {
          options.push_back({scope_[j].domain(), 6});
        }
      }
      std::vector<std::pair<Type, uint64_t>> feasible;
      for (const auto& option : options) {
        uint64_t need = 1 + (1 + min_size(ty)) + min_size(option.first);
        if (budget >= need) feasible.push_back(option);
      }
      if (!feasible.empty()) {
        Type result = ty;
        uint64_t b = budget;
        add(5, [this, result, b, feasible] {
          uint64_t total = 0;
          for (const auto& option : feasible) total += option.second;
          uint64_t r = rng_.below(total);
          Type sigma = feasible.front().first;
          for (const auto& option : feasible) {
            if (r < option.second) {
              sigma = option.first;
              break;
            }
            r -= option.second;
          }
          Type fn_ty = Type::arrow(sigma, result);
          uint64_t avail = b - 1;
          uint64_t extra = avail - min_size(fn_ty) - min_size(sigma);
          uint64_t f_budget = min_size(fn_ty) + rng_.below(extra + 1);
          Term f = gen(fn_ty, f_budget);
          Term x = gen(sigma, avail - f_budget);
          return Term::app(f, x);
        });
      }
    }

    if (budget >= 2 + 2 * min_size(ty)) {
      Type result = ty;
      uint64_t b = budget;
      add(2, [this, result, b] {
        uint64_t m = min_size(result);
        uint64_t extra = b - 2 - 2 * m;
        uint64_t e1 = rng_.below(extra + 1);
        uint64_t e2 = rng_.below(extra - e1 + 1);
        Term cond = gen(Type::boolean(), 1 + e1);
        Term then_branch = gen(result, m + e2);
        Term else_branch = gen(result, m + (extra - e1 - e2));
        return Term::if_then_else(cond, then_branch, else_branch);
      });
    }

    {
      uint64_t z_min = min_size(ty);
      uint64_t s_min = 2 + min_size(ty);
      if (budget >= 1 + z_min + s_min + 1) {
        Type result = ty;
        uint64_t b = budget;
        add(2, [this, result, b, z_min, s_min] {
          // scrutinee: a literal <= 6, so recursion depth stays small
          uint64_t slack = b - 1 - z_min - s_min - 1;
          uint64_t k = rng_.below(std::min<uint64_t>(6, slack) + 1);
          uint64_t avail = b - 1 - (k + 1);
          uint64_t extra = avail - z_min - s_min;
          uint64_t ez = rng_.below(extra + 1);
          Term z = gen(result, z_min + ez);
          Term s = gen(Type::arrow(Type::nat(), Type::arrow(result, result)),
                       s_min + (extra - ez));
          return Term::rec(z, s, Term::nat_literal(k));
        });
      }
    }

    if (ty.is_nat()) {
      add(2, [] { return Term::zero(); });
      if (budget >= 2) {
        uint64_t b = budget;
        add(3, [this, b] {
          uint64_t k = 1 + rng_.below(std::min<uint64_t>(6, b - 1));
          return Term::nat_literal(k);
        });
        add(3, [this, b] { return Term::succ(gen(Type::nat(), b - 1)); });
      }
    }

    if (ty.is_bool()) {
      add(2, [] { return Term::lit_true(); });
      add(2, [] { return Term::lit_false(); });
    }

    if (ty.is_arrow() && budget >= 1 + min_size(ty.codomain())) {
      Type dom = ty.domain();
      Type cod = ty.codomain();
      uint64_t b = budget;
      add(8, [this, dom, cod, b] {
        scope_.push_back(dom);
        Term body = gen(cod, b - 1);
        scope_.pop_back();
        return Term::lam(dom, body);
      });
    }

    uint64_t total = 0;
    for (const Candidate& c : cands) total += c.weight;
    if (total == 0) throw GenError("generator: no candidate fits the budget");
    uint64_t r = rng_.below(total);
    for (const Candidate& c : cands) {
      if (r < c.weight) return c.build();
      r -= c.weight;
    }
    return cands.back().build();
  }

 private:
  Rng rng_;
  std::vector<Type> scope_;
};

Term generate(const GenConfig& cfg, uint64_t index, uint64_t attempt) {
  if (cfg.max_size < min_size(cfg.target_type)) {
    throw GenError("size budget " + std::to_string(cfg.max_size) +
                   " cannot close a term of type " + cfg.target_type.to_string());
  }
  Generator g(mix64(mix64(mix64(cfg.seed) ^ index) ^ attempt));
  Term t = g.gen(cfg.target_type, cfg.max_size);
  if (typecheck(t) != cfg.target_type) {
    throw GenError("generator produced an ill-typed term (internal bug)");
  }
  return t;
}

// True if evaluating the predicate on the all-zero stream queries only
// indices < bound.
bool reads_below(const Term& p, uint64_t bound) {
  auto ok = std::make_shared<bool>(true);
  SemVal zero_stream = SemVal::fun([ok, bound](const SemVal& index) {
    if (index.nat_value() >= bound) *ok = false;
    return SemVal::bit(0);
  });
  (void)apply_sem(denote(p), zero_stream).bit_value();
  return *ok;
}

Type predicate_type() {
  return Type::arrow(Type::arrow(Type::nat(), Type::boolean()), Type::boolean());
}

std::vector<Term> sample_list(const GenConfig& cfg, bool predicates) {
  std::vector<Term> samples;
  samples.reserve(cfg.count + functional_corpus().size());
  for (uint64_t i = 0; i < cfg.count; ++i) {
    samples.push_back(predicates ? gen_predicate(cfg, i) : gen_term(cfg, i));
  }
  for (const Term& t : functional_corpus()) samples.push_back(t);
  return samples;
}

uint64_t elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return static_cast<uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count());
}

int sem_at_point(const SemVal& p, const NInfPoint& x) {
  return apply_sem(p, stream_to_sem(embed(x))).bit_value();
}

}  // namespace

Term gen_term(const GenConfig& cfg, uint64_t index) { return generate(cfg, index, 0); }

Term gen_predicate(const GenConfig& cfg, uint64_t index) {
  if (cfg.target_type != predicate_type()) {
    throw GenError("gen_predicate needs target type " + predicate_type().to_string());
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Term t = generate(cfg, index, static_cast<uint64_t>(attempt));
    if (reads_below(t, kReadBound)) return t;
  }
  throw GenError("no read-local predicate for sample " + std::to_string(index) +
                 " after " + std::to_string(kMaxAttempts) + " attempts");
}

const std::vector<Term>& functional_corpus() {
  static const std::vector<Term> corpus = [] {
    const char* bodies[] = {
        "fun a : nat -> bool . true",
        "fun a : nat -> bool . false",
        "fun a : nat -> bool . a 0",
        "fun a : nat -> bool . a 1",
        "fun a : nat -> bool . a 2",
        "fun a : nat -> bool . a 3",
        "fun a : nat -> bool . a 4",
        "fun a : nat -> bool . a 5",
        "fun a : nat -> bool . a 6",
        "fun a : nat -> bool . a 7",
        "fun a : nat -> bool . a 8",
        "fun a : nat -> bool . not (a 0)",
        "fun a : nat -> bool . and (a 0) (a 3)",
        "fun a : nat -> bool . or (a 2) (not (a 5))",
        "fun a : nat -> bool . eqBool (a 1) (a 4)",
        "fun a : nat -> bool . implies (a 0) (a 7)",
        "fun a : nat -> bool . a (add 2 3)",
        "fun a : nat -> bool . bexists a 6",
        "fun a : nat -> bool . and (a 1) (and (a 2) (a 4))",
        "fun a : nat -> bool . eqBool (a 3) (a 3)",
        "fun a : nat -> bool . if a 0 then a 5 else not (a 5)",
        "fun a : nat -> bool . rec (a 0) (fun k : nat . fun r : bool . or r (a (succ k))) 6",
        "fun a : nat -> bool . a (mult 2 3)",
        "fun a : nat -> bool . a (monus 9 4)",
        "fun a : nat -> bool . leq (rec 0 (fun k : nat . fun r : nat . succ (succ r)) 3) 7",
    };
    std::vector<Term> out;
    for (const char* body : bodies) {
      SourceFile file = parse(prelude_source() + "\n" + body + "\n");
      out.push_back(*file.main);
    }
    return out;
  }();
  return corpus;
}

FuzzReport check_test_constancy(const GenConfig& cfg) {
  FuzzReport report;
  report.seed = cfg.seed;
  auto start = std::chrono::steady_clock::now();
  reset_apply_depth();
  SemVal test_sem = denote(tm_test());
  std::vector<Term> samples = sample_list(cfg, /*predicates=*/false);
  report.samples = samples.size();
  for (size_t i = 0; i < samples.size(); ++i) {
    if (apply_sem(test_sem, denote(samples[i])).bit_value() != 1) {
      report.failures.push_back(i);
    }
  }
  report.max_depth = max_apply_depth();
  report.elapsed_ms = elapsed_ms_since(start);
  return report;
}

FuzzReport check_eps_oracle(const GenConfig& cfg, uint64_t prefix_len) {
  FuzzReport report;
  report.seed = cfg.seed;
  auto start = std::chrono::steady_clock::now();
  reset_apply_depth();
  SemVal eps_sem = denote(tm_eps());
  std::vector<Term> samples = sample_list(cfg, /*predicates=*/true);
  report.samples = samples.size();
  for (size_t i = 0; i < samples.size(); ++i) {
    SemVal p_sem = denote(samples[i]);
    BitStream stream = sem_to_stream(apply_sem(eps_sem, p_sem));
    std::vector<int> got = stream.prefix(prefix_len);
    // Oracle: bit i of the infimum stream is 1 iff p holds at some n-bar
    // with n <= i — a running OR of direct probes, sharing nothing with the
    // bounded-search machinery inside the eps term.
    bool ok = true;
    int acc = 0;
    for (uint64_t n = 0; n < prefix_len; ++n) {
      acc |= sem_at_point(p_sem, NInfPoint::finite(n));
      if (got[n] != acc) {
        ok = false;
        break;
      }
    }
    if (ok && member_prefix_check(stream, prefix_len) != 1) ok = false;
    if (!ok) report.failures.push_back(i);
  }
  report.max_depth = max_apply_depth();
  report.elapsed_ms = elapsed_ms_since(start);
  return report;
}

FuzzReport check_witness_property(const GenConfig& cfg, uint64_t witness_bound,
                                  uint64_t tail_bound) {
  FuzzReport report;
  report.seed = cfg.seed;
  auto start = std::chrono::steady_clock::now();
  reset_apply_depth();
  SemVal eps_sem = denote(tm_eps());
  std::vector<Term> samples = sample_list(cfg, /*predicates=*/true);
  report.samples = samples.size();
  for (size_t i = 0; i < samples.size(); ++i) {
    SemVal p_sem = denote(samples[i]);
    int p_at_eps = apply_sem(p_sem, apply_sem(eps_sem, p_sem)).bit_value();
    int p_inf = sem_at_point(p_sem, NInfPoint::infinity());
    bool witness = false;
    for (uint64_t n = 0; n <= witness_bound && !witness; ++n) {
      witness = sem_at_point(p_sem, NInfPoint::finite(n)) == 1;
    }
    bool ok = (p_at_eps == 1) == (witness || p_inf == 1);
    if (ok && p_at_eps == 0) {
      ok = p_inf == 0;
      for (uint64_t n = 0; ok && n <= tail_bound; ++n) {
        ok = sem_at_point(p_sem, NInfPoint::finite(n)) == 0;
      }
    }
    if (!ok) report.failures.push_back(i);
  }
  report.max_depth = max_apply_depth();
  report.elapsed_ms = elapsed_ms_since(start);
  return report;
}

std::optional<uint64_t> agreement_index(const SemVal& f, uint64_t max_n) {
  int f_inf = apply_sem(f, stream_to_sem(embed(NInfPoint::infinity()))).bit_value();
  for (uint64_t n = 0; n <= max_n; ++n) {
    if (apply_sem(f, stream_to_sem(embed(NInfPoint::finite(n)))).bit_value() == f_inf) {
      return n;
    }
  }
  return std::nullopt;
}

}  // namespace tw
