#include "tw/denot.hpp"

namespace tw {

uint64_t SemVal::nat_value() const {
  if (!is_nat()) throw SemanticError("internal error: expected a natural in the model");
  return std::get<SNat>(v_).n;
}

bool SemVal::bool_value() const {
  if (!is_bool()) throw SemanticError("internal error: expected a boolean in the model");
  return std::get<SBool>(v_).b;
}

namespace {
thread_local uint64_t g_apply_depth = 0;
thread_local uint64_t g_max_apply_depth = 0;

struct DepthGuard {
  DepthGuard() {
    ++g_apply_depth;
    if (g_apply_depth > g_max_apply_depth) g_max_apply_depth = g_apply_depth;
  }
  ~DepthGuard() { --g_apply_depth; }
};
}  // namespace

uint64_t max_apply_depth() { return g_max_apply_depth; }
void reset_apply_depth() { g_max_apply_depth = g_apply_depth; }

SemVal SemVal::apply(const SemVal& arg) const {
  if (!is_fun()) {
    throw SemanticError("apply_sem: value is not a function");
  }
  DepthGuard guard;
  return (*std::get<std::shared_ptr<const Fn>>(v_))(arg);
}

SemVal apply_sem(const SemVal& f, const SemVal& arg) { return f.apply(arg); }

SemEnv SemEnv::push(SemVal value) const {
  return SemEnv{std::make_shared<const Node>(Node{std::move(value), head_})};
}

const SemVal& SemEnv::at(int index) const {
  const Node* cur = head_.get();
  while (cur != nullptr && index > 0) {
    cur = cur->next.get();
    --index;
  }
  if (cur == nullptr) throw SemanticError("internal error: environment index out of range");
  return cur->value;
}

CompiledTerm compile(const Term& term) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> CompiledTerm {
            int index = v.index;
            return [index](const SemEnv& env) { return env.at(index); };
          },
          [&](const Lam& l) -> CompiledTerm {
            CompiledTerm body = compile(l.body);
            return [body](const SemEnv& env) {
              return SemVal::fun(
                  [body, env](const SemVal& arg) { return body(env.push(arg)); });
            };
          },
          [&](const App& a) -> CompiledTerm {
            CompiledTerm fn = compile(a.fn);
            CompiledTerm arg = compile(a.arg);
            return [fn, arg](const SemEnv& env) { return apply_sem(fn(env), arg(env)); };
          },
          [&](const Zero&) -> CompiledTerm {
            return [](const SemEnv&) { return SemVal::nat(0); };
          },
          [&](const Succ& s) -> CompiledTerm {
            // collapse succ spines so literals compile to a single constant
            uint64_t added = 1;
            const Term* cur = &s.arg;
            while (const auto* inner = std::get_if<Succ>(&cur->node().v)) {
              ++added;
              cur = &inner->arg;
            }
            if (std::holds_alternative<Zero>(cur->node().v)) {
              return [added](const SemEnv&) { return SemVal::nat(added); };
            }
            CompiledTerm base = compile(*cur);
            return [base, added](const SemEnv& env) {
              return SemVal::nat(base(env).nat_value() + added);
            };
          },
          [&](const Rec& r) -> CompiledTerm {
            CompiledTerm zero_case = compile(r.zero_case);
            CompiledTerm step_case = compile(r.step_case);
            CompiledTerm scrutinee = compile(r.scrutinee);
            return [zero_case, step_case, scrutinee](const SemEnv& env) {
              uint64_t n = scrutinee(env).nat_value();
              SemVal acc = zero_case(env);
              if (n == 0) return acc;
              SemVal step = step_case(env);
              for (uint64_t k = 0; k < n; ++k) {
                acc = apply_sem(apply_sem(step, SemVal::nat(k)), acc);
              }
              return acc;
            };
          },
          [&](const TrueLit&) -> CompiledTerm {
            return [](const SemEnv&) { return SemVal::boolean(true); };
          },
          [&](const FalseLit&) -> CompiledTerm {
            return [](const SemEnv&) { return SemVal::boolean(false); };
          },
          [&](const If& i) -> CompiledTerm {
            CompiledTerm cond = compile(i.cond);
            CompiledTerm then_branch = compile(i.then_branch);
            CompiledTerm else_branch = compile(i.else_branch);
            return [cond, then_branch, else_branch](const SemEnv& env) {
              return cond(env).bool_value() ? then_branch(env) : else_branch(env);
            };
          },
      },
      term.node().v);
}

SemVal denote(const Term& term, const SemEnv& env) { return compile(term)(env); }

BitStream::BitStream(std::function<int(uint64_t)> bit_at)
    : state_(std::make_shared<State>(State{std::move(bit_at), {}})) {}

int BitStream::at(uint64_t index) const {
  auto it = state_->memo.find(index);
  if (it != state_->memo.end()) return it->second;
  int bit = state_->bit_at(index) ? 1 : 0;
  state_->memo.emplace(index, bit);
  return bit;
}

std::vector<int> BitStream::prefix(size_t length) const {
  std::vector<int> bits;
  bits.reserve(length);
  for (size_t i = 0; i < length; ++i) bits.push_back(at(i));
  return bits;
}

SemVal stream_to_sem(const BitStream& stream) {
  return SemVal::fun([stream](const SemVal& index) {
    return SemVal::bit(stream.at(index.nat_value()));
  });
}

BitStream sem_to_stream(const SemVal& value) {
  if (!value.is_fun()) {
    throw SemanticError("sem_to_stream: value is not a function");
  }
  return BitStream([value](uint64_t index) {
    SemVal bit = value.apply(SemVal::nat(index));
    if (!bit.is_bool()) {
      throw SemanticError("sem_to_stream: stream yielded a non-boolean bit");
    }
    return bit.bit_value();
  });
}

}  // namespace tw
