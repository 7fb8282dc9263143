#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <variant>

#include "tw/syntax.hpp"

namespace tw {

class MachineValue;

/// Persistent runtime environment; push shares the tail.
class MachineEnv {
 public:
  MachineEnv() = default;
  MachineEnv push(MachineValue value) const;
  const MachineValue& at(int index) const;  // 0 = most recently pushed

 private:
  struct Node;
  explicit MachineEnv(std::shared_ptr<const Node> head) : head_(std::move(head)) {}
  std::shared_ptr<const Node> head_;
};

/// Result of the call-by-value machine: a natural, a boolean, or a closure.
/// Ground-typed closed terms always evaluate to MNat/MBool, never a closure.
class MachineValue {
 public:
  struct ClosureData;

  static MachineValue nat(uint64_t n) { return MachineValue{MNat{n}}; }
  static MachineValue boolean(bool b) { return MachineValue{MBool{b}}; }
  static MachineValue closure(MachineEnv env, Type annotation, Term body);

  bool is_nat() const { return std::holds_alternative<MNat>(v_); }
  bool is_bool() const { return std::holds_alternative<MBool>(v_); }
  bool is_closure() const { return !is_nat() && !is_bool(); }

  uint64_t nat_value() const { return std::get<MNat>(v_).n; }
  bool bool_value() const { return std::get<MBool>(v_).b; }
  const ClosureData& closure_data() const;

 private:
  struct MNat {
    uint64_t n;
  };
  struct MBool {
    bool b;
  };
  using Repr = std::variant<MNat, MBool, std::shared_ptr<const ClosureData>>;
  explicit MachineValue(Repr v) : v_(std::move(v)) {}
  Repr v_;
};

struct MachineValue::ClosureData {
  MachineEnv env;
  Type annotation;
  Term body;
};

struct MachineEnv::Node {
  MachineValue value;
  std::shared_ptr<const Node> next;
};

struct EvalOptions {
  // debugging aid; evaluation of well-typed terms always terminates on its own
  std::optional<uint64_t> step_budget;
};

struct StepBudgetExceeded : std::runtime_error {
  explicit StepBudgetExceeded(uint64_t budget)
      : std::runtime_error("step budget of " + std::to_string(budget) +
                           " exceeded; this indicates an interpreter bug, since every "
                           "well-typed term terminates") {}
};

struct MachineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Big-step call-by-value evaluation of a closed, well-typed term.
MachineValue eval_closed(const Term& term, const EvalOptions& options = {});

}  // namespace tw
