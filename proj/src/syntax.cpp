#include "tw/syntax.hpp"

namespace tw {

namespace {
std::shared_ptr<const TypeNode> make_type(std::variant<NatType, BoolType, ArrowType> v) {
  return std::make_shared<const TypeNode>(TypeNode{std::move(v)});
}

using TermVariant = std::variant<Var, Lam, App, Zero, Succ, Rec, TrueLit, FalseLit, If>;

std::shared_ptr<const TermNode> make_node(TermVariant v, Span s) {
  return std::make_shared<const TermNode>(TermNode{std::move(v), s});
}
}  // namespace

Type Type::nat() {
  static const Type t{make_type(NatType{})};
  return t;
}

Type Type::boolean() {
  static const Type t{make_type(BoolType{})};
  return t;
}

Type Type::arrow(Type domain, Type codomain) {
  return Type{make_type(ArrowType{std::move(domain), std::move(codomain)})};
}

bool Type::is_nat() const { return std::holds_alternative<NatType>(node_->v); }
bool Type::is_bool() const { return std::holds_alternative<BoolType>(node_->v); }
bool Type::is_arrow() const { return std::holds_alternative<ArrowType>(node_->v); }

const Type& Type::domain() const { return std::get<ArrowType>(node_->v).domain; }
const Type& Type::codomain() const { return std::get<ArrowType>(node_->v).codomain; }

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  return std::visit(
      overloaded{
          [&](const NatType&) { return b.is_nat(); },
          [&](const BoolType&) { return b.is_bool(); },
          [&](const ArrowType& ar) {
            return b.is_arrow() && ar.domain == b.domain() && ar.codomain == b.codomain();
          },
      },
      a.node_->v);
}

std::string Type::to_string() const {
  return std::visit(
      overloaded{
          [](const NatType&) { return std::string("nat"); },
          [](const BoolType&) { return std::string("bool"); },
          [](const ArrowType& ar) {
            std::string dom = ar.domain.to_string();
            if (ar.domain.is_arrow()) dom = "(" + dom + ")";
            return dom + " -> " + ar.codomain.to_string();
          },
      },
      node_->v);
}

Term Term::var(int index, Span span) { return Term{make_node(Var{index}, span)}; }
Term Term::lam(Type annotation, Term body, Span span) {
  return Term{make_node(Lam{std::move(annotation), std::move(body)}, span)};
}
Term Term::app(Term fn, Term arg, Span span) {
  return Term{make_node(App{std::move(fn), std::move(arg)}, span)};
}
Term Term::zero(Span span) { return Term{make_node(Zero{}, span)}; }
Term Term::succ(Term arg, Span span) { return Term{make_node(Succ{std::move(arg)}, span)}; }
Term Term::rec(Term zero_case, Term step_case, Term scrutinee, Span span) {
  return Term{
      make_node(Rec{std::move(zero_case), std::move(step_case), std::move(scrutinee)}, span)};
}
Term Term::lit_true(Span span) { return Term{make_node(TrueLit{}, span)}; }
Term Term::lit_false(Span span) { return Term{make_node(FalseLit{}, span)}; }
Term Term::if_then_else(Term cond, Term then_branch, Term else_branch, Span span) {
  return Term{make_node(
      If{std::move(cond), std::move(then_branch), std::move(else_branch)}, span)};
}

Term Term::nat_literal(uint64_t n, Span span) {
  Term t = zero(span);
  for (uint64_t i = 0; i < n; ++i) t = succ(std::move(t), span);
  return t;
}

Span Term::span() const { return node_->span; }

size_t Term::size() const {
  return std::visit(
      overloaded{
          [](const Var&) -> size_t { return 1; },
          [](const Lam& l) -> size_t { return 1 + l.body.size(); },
          [](const App& a) -> size_t { return 1 + a.fn.size() + a.arg.size(); },
          [](const Zero&) -> size_t { return 1; },
          [](const Succ& s) -> size_t {
            // iterate succ spines; numeric literals make them long
            size_t n = 1;
            const Term* cur = &s.arg;
            while (const auto* inner = std::get_if<Succ>(&cur->node().v)) {
              ++n;
              cur = &inner->arg;
            }
            return n + cur->size();
          },
          [](const Rec& r) -> size_t {
            return 1 + r.zero_case.size() + r.step_case.size() + r.scrutinee.size();
          },
          [](const TrueLit&) -> size_t { return 1; },
          [](const FalseLit&) -> size_t { return 1; },
          [](const If& i) -> size_t {
            return 1 + i.cond.size() + i.then_branch.size() + i.else_branch.size();
          },
      },
      node_->v);
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& av = a.node_->v;
  const auto& bv = b.node_->v;
  if (av.index() != bv.index()) return false;
  return std::visit(
      overloaded{
          [&](const Var& x) { return x.index == std::get<Var>(bv).index; },
          [&](const Lam& x) {
            const auto& y = std::get<Lam>(bv);
            return x.annotation == y.annotation && x.body == y.body;
          },
          [&](const App& x) {
            const auto& y = std::get<App>(bv);
            return x.fn == y.fn && x.arg == y.arg;
          },
          [&](const Zero&) { return true; },
          [&](const Succ& x) {
            // match succ spines iteratively
            const Term* p = &x.arg;
            const Term* q = &std::get<Succ>(bv).arg;
            while (true) {
              const auto* ps = std::get_if<Succ>(&p->node().v);
              const auto* qs = std::get_if<Succ>(&q->node().v);
              if ((ps == nullptr) != (qs == nullptr)) return false;
              if (ps == nullptr) return *p == *q;
              p = &ps->arg;
              q = &qs->arg;
            }
          },
          [&](const Rec& x) {
            const auto& y = std::get<Rec>(bv);
            return x.zero_case == y.zero_case && x.step_case == y.step_case &&
                   x.scrutinee == y.scrutinee;
          },
          [&](const TrueLit&) { return true; },
          [&](const FalseLit&) { return true; },
          [&](const If& x) {
            const auto& y = std::get<If>(bv);
            return x.cond == y.cond && x.then_branch == y.then_branch &&
                   x.else_branch == y.else_branch;
          },
      },
      av);
}

}  // namespace tw
