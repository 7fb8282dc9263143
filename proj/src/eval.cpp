#include "tw/eval.hpp"

namespace tw {

MachineEnv MachineEnv::push(MachineValue value) const {
  return MachineEnv{std::make_shared<const Node>(Node{std::move(value), head_})};
}

const MachineValue& MachineEnv::at(int index) const {
  const Node* cur = head_.get();
  while (cur != nullptr && index > 0) {
    cur = cur->next.get();
    --index;
  }
  if (cur == nullptr) throw MachineError("variable index out of range");
  return cur->value;
}

MachineValue MachineValue::closure(MachineEnv env, Type annotation, Term body) {
  return MachineValue{std::make_shared<const ClosureData>(
      ClosureData{std::move(env), std::move(annotation), std::move(body)})};
}

const MachineValue::ClosureData& MachineValue::closure_data() const {
  return *std::get<std::shared_ptr<const ClosureData>>(v_);
}

namespace {

struct Machine {
  std::optional<uint64_t> remaining;

  void tick() {
    if (!remaining) return;
    if (*remaining == 0) throw StepBudgetExceeded(budget);
    --*remaining;
  }

  uint64_t budget = 0;

  MachineValue eval(const Term& term, const MachineEnv& env) {
    tick();
    return std::visit(
        overloaded{
            [&](const Var& v) -> MachineValue { return env.at(v.index); },
            [&](const Lam& l) -> MachineValue {
              return MachineValue::closure(env, l.annotation, l.body);
            },
            [&](const App& a) -> MachineValue {
              MachineValue fn = eval(a.fn, env);
              MachineValue arg = eval(a.arg, env);
              return apply(fn, std::move(arg));
            },
            [&](const Zero&) -> MachineValue { return MachineValue::nat(0); },
            [&](const Succ& s) -> MachineValue {
              uint64_t added = 1;
              const Term* cur = &s.arg;
              while (const auto* inner = std::get_if<Succ>(&cur->node().v)) {
                tick();
                ++added;
                cur = &inner->arg;
              }
              MachineValue base = eval(*cur, env);
              if (!base.is_nat()) throw MachineError("succ applied to a non-natural");
              return MachineValue::nat(base.nat_value() + added);
            },
            [&](const Rec& r) -> MachineValue {
              MachineValue scrutinee = eval(r.scrutinee, env);
              if (!scrutinee.is_nat()) throw MachineError("rec scrutinee is not a natural");
              MachineValue acc = eval(r.zero_case, env);
              MachineValue step = eval(r.step_case, env);
              uint64_t n = scrutinee.nat_value();
              for (uint64_t k = 0; k < n; ++k) {
                tick();
                acc = apply(apply(step, MachineValue::nat(k)), std::move(acc));
              }
              return acc;
            },
            [&](const TrueLit&) -> MachineValue { return MachineValue::boolean(true); },
            [&](const FalseLit&) -> MachineValue { return MachineValue::boolean(false); },
            [&](const If& i) -> MachineValue {
              MachineValue cond = eval(i.cond, env);
              if (!cond.is_bool()) throw MachineError("if condition is not a boolean");
              return cond.bool_value() ? eval(i.then_branch, env) : eval(i.else_branch, env);
            },
        },
        term.node().v);
  }

  MachineValue apply(const MachineValue& fn, MachineValue arg) {
    if (!fn.is_closure()) throw MachineError("application of a non-function value");
    const auto& cl = fn.closure_data();
    return eval(cl.body, cl.env.push(std::move(arg)));
  }
};

}  // namespace

MachineValue eval_closed(const Term& term, const EvalOptions& options) {
  Machine m;
  m.remaining = options.step_budget;
  m.budget = options.step_budget.value_or(0);
  return m.eval(term, MachineEnv{});
}

}  // namespace tw
