#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tw/syntax.hpp"

namespace tw {

struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A point of the set-theoretical model: a natural, a boolean (false = 0,
/// true = 1), or a total host-level function. Function values are opaque —
/// they can only be applied, never inspected or compared.
class SemVal {
 public:
  using Fn = std::function<SemVal(const SemVal&)>;

  static SemVal nat(uint64_t n) { return SemVal{SNat{n}}; }
  static SemVal boolean(bool b) { return SemVal{SBool{b}}; }
  static SemVal bit(int b) { return boolean(b != 0); }
  static SemVal fun(Fn f) { return SemVal{std::make_shared<const Fn>(std::move(f))}; }

  bool is_nat() const { return std::holds_alternative<SNat>(v_); }
  bool is_bool() const { return std::holds_alternative<SBool>(v_); }
  bool is_fun() const { return std::holds_alternative<std::shared_ptr<const Fn>>(v_); }

  uint64_t nat_value() const;
  bool bool_value() const;
  int bit_value() const { return bool_value() ? 1 : 0; }

  SemVal apply(const SemVal& arg) const;

 private:
  struct SNat {
    uint64_t n;
  };
  struct SBool {
    bool b;
  };
  using Repr = std::variant<SNat, SBool, std::shared_ptr<const Fn>>;
  explicit SemVal(Repr v) : v_(std::move(v)) {}
  Repr v_;
};

/// Model application. Errors (with a diagnostic) if `f` is not a function.
SemVal apply_sem(const SemVal& f, const SemVal& arg);

/// Deepest nesting of apply_sem calls seen since the last reset, for harness
/// reporting. Thread-local.
uint64_t max_apply_depth();
void reset_apply_depth();

/// Persistent semantic environment; push shares the tail.
class SemEnv {
 public:
  SemEnv() = default;
  SemEnv push(SemVal value) const;
  const SemVal& at(int index) const;  // 0 = most recently pushed

 private:
  struct Node {
    SemVal value;
    std::shared_ptr<const Node> next;
  };
  explicit SemEnv(std::shared_ptr<const Node> head) : head_(std::move(head)) {}
  std::shared_ptr<const Node> head_;
};

using CompiledTerm = std::function<SemVal(const SemEnv&)>;

/// Translate a term into a host closure once; the result can be applied to
/// many environments without re-walking the syntax tree.
CompiledTerm compile(const Term& term);

/// The set-model interpretation of `term` under `env`. Rec is interpreted by
/// host-level primitive recursion, If by host-level branching.
SemVal denote(const Term& term, const SemEnv& env = {});

/// A total function from naturals to bits with a demand-driven cache: each
/// index is computed at most once and repeated queries return the same bit.
/// The cache is not synchronized — confine a stream to one thread at a time
/// (independent evaluations with their own streams may run in parallel).
class BitStream {
 public:
  explicit BitStream(std::function<int(uint64_t)> bit_at);

  int at(uint64_t index) const;
  std::vector<int> prefix(size_t length) const;

 private:
  struct State {
    std::function<int(uint64_t)> bit_at;
    mutable std::unordered_map<uint64_t, int> memo;
  };
  std::shared_ptr<State> state_;
};

/// Package a stream as the model value of type nat -> bool.
SemVal stream_to_sem(const BitStream& stream);

/// Read a model value of type nat -> bool back as a stream. The value is
/// queried once per distinct index; errors if it yields a non-boolean.
BitStream sem_to_stream(const SemVal& value);

}  // namespace tw
