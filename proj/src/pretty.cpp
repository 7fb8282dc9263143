#include "tw/pretty.hpp"

#include <optional>

namespace tw {

namespace {

// a full succ...succ(zero) chain, or nullopt
std::optional<uint64_t> literal_value(const Term& t) {
  uint64_t n = 0;
  const Term* cur = &t;
  while (const auto* s = std::get_if<Succ>(&cur->node().v)) {
    ++n;
    cur = &s->arg;
  }
  if (std::holds_alternative<Zero>(cur->node().v)) return n;
  return std::nullopt;
}

class Printer {
 public:
  explicit Printer(PrettyOptions options) : options_(options) {}

  std::string term(const Term& t, int depth) {
    return std::visit(
        overloaded{
            [&](const Var& v) { return var_name(v.index, depth); },
            [&](const Lam& l) {
              return "fun x" + std::to_string(depth) + " : " + l.annotation.to_string() +
                     " . " + term(l.body, depth + 1);
            },
            [&](const App&) {
              // flatten the left spine: application is left associative
              std::vector<const Term*> args;
              const Term* head = &t;
              while (const auto* a = std::get_if<App>(&head->node().v)) {
                args.push_back(&a->arg);
                head = &a->fn;
              }
              std::string out = atom(*head, depth);
              for (size_t i = args.size(); i-- > 0;) {
                out += " " + atom(*args[i], depth);
              }
              return out;
            },
            [&](const Zero&) { return std::string("0"); },
            [&](const Succ& s) {
              if (options_.numeric_literals) {
                if (auto n = literal_value(t)) return std::to_string(*n);
              }
              return "succ " + atom(s.arg, depth);
            },
            [&](const Rec& r) {
              return "rec " + atom(r.zero_case, depth) + " " + atom(r.step_case, depth) + " " +
                     atom(r.scrutinee, depth);
            },
            [&](const TrueLit&) { return std::string("true"); },
            [&](const FalseLit&) { return std::string("false"); },
            [&](const If& i) {
              return "if " + term(i.cond, depth) + " then " + term(i.then_branch, depth) +
                     " else " + term(i.else_branch, depth);
            },
        },
        t.node().v);
  }

 private:
  bool is_atomic(const Term& t) const {
    return std::visit(
        overloaded{
            [](const Var&) { return true; },
            [](const Zero&) { return true; },
            [](const TrueLit&) { return true; },
            [](const FalseLit&) { return true; },
            [&](const Succ&) {
              return options_.numeric_literals && literal_value(t).has_value();
            },
            [](const auto&) { return false; },
        },
        t.node().v);
  }

  std::string atom(const Term& t, int depth) {
    if (is_atomic(t)) return term(t, depth);
    return "(" + term(t, depth) + ")";
  }

  std::string var_name(int index, int depth) const {
    int binder = depth - 1 - index;
    if (binder < 0) return "?" + std::to_string(index);  // unscoped; will not reparse
    return "x" + std::to_string(binder);
  }

  PrettyOptions options_;
};

}  // namespace

std::string pretty(const Term& term, PrettyOptions options) {
  return Printer(options).term(term, 0);
}

}  // namespace tw
