#include "tw/typecheck.hpp"

namespace tw {

namespace {

std::string at_suffix(Span s) {
  if (!s.known()) return "";
  return " (at " + std::to_string(s.line) + ":" + std::to_string(s.column) + ")";
}

[[noreturn]] void mismatch(Span where, const Type& expected, const Type& actual,
                           const std::string& what) {
  throw TypeError(where,
                  "type mismatch: expected " + expected.to_string() + ", got " +
                      actual.to_string() + " in " + what + at_suffix(where),
                  expected, actual);
}

Type check(const Term& term, std::vector<Type>& context) {
  return std::visit(
      overloaded{
          [&](const Var& v) -> Type {
            if (v.index < 0 || static_cast<size_t>(v.index) >= context.size()) {
              throw TypeError(term.span(), "unbound variable index " +
                                               std::to_string(v.index) + at_suffix(term.span()));
            }
            return context[context.size() - 1 - static_cast<size_t>(v.index)];
          },
          [&](const Lam& l) -> Type {
            context.push_back(l.annotation);
            Type body = check(l.body, context);
            context.pop_back();
            return Type::arrow(l.annotation, std::move(body));
          },
          [&](const App& a) -> Type {
            Type fn = check(a.fn, context);
            if (!fn.is_arrow()) {
              throw TypeError(a.fn.span(),
                              "non-function applied: operator has type " + fn.to_string() +
                                  at_suffix(a.fn.span()),
                              std::nullopt, fn);
            }
            Type arg = check(a.arg, context);
            if (arg != fn.domain()) {
              mismatch(a.arg.span(), fn.domain(), arg, "function argument");
            }
            return fn.codomain();
          },
          [&](const Zero&) -> Type { return Type::nat(); },
          [&](const Succ&) -> Type {
            // walk succ spines iteratively; literals can be long
            const Term* cur = &term;
            while (const auto* s = std::get_if<Succ>(&cur->node().v)) cur = &s->arg;
            Type inner = check(*cur, context);
            if (!inner.is_nat()) {
              mismatch(cur->span(), Type::nat(), inner, "argument of succ");
            }
            return Type::nat();
          },
          [&](const Rec& r) -> Type {
            Type result = check(r.zero_case, context);
            Type expected_step = Type::arrow(Type::nat(), Type::arrow(result, result));
            Type step = check(r.step_case, context);
            if (step != expected_step) {
              mismatch(r.step_case.span(), expected_step, step, "step case of rec");
            }
            Type scrutinee = check(r.scrutinee, context);
            if (!scrutinee.is_nat()) {
              mismatch(r.scrutinee.span(), Type::nat(), scrutinee, "scrutinee of rec");
            }
            return result;
          },
          [&](const TrueLit&) -> Type { return Type::boolean(); },
          [&](const FalseLit&) -> Type { return Type::boolean(); },
          [&](const If& i) -> Type {
            Type cond = check(i.cond, context);
            if (!cond.is_bool()) {
              mismatch(i.cond.span(), Type::boolean(), cond, "condition of if");
            }
            Type then_type = check(i.then_branch, context);
            Type else_type = check(i.else_branch, context);
            if (then_type != else_type) {
              mismatch(i.else_branch.span(), then_type, else_type, "branches of if");
            }
            return then_type;
          },
      },
      term.node().v);
}

}  // namespace

Type typecheck(const Term& term, const std::vector<Type>& context) {
  std::vector<Type> ctx = context;
  return check(term, ctx);
}

}  // namespace tw
