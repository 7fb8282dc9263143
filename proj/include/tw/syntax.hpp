#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tw {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// 1-based source position; {0,0} means "no position" (programmatically built
// nodes). Positions are metadata only and never take part in equality.
struct Span {
  uint32_t line = 0;
  uint32_t column = 0;
  bool known() const { return line != 0; }
};

struct TypeNode;

/// Simple types: nat, bool, and right-nested arrows. Value type; copies share
/// nodes. Structural equality is the only type equality.
class Type {
 public:
  static Type nat();
  static Type boolean();
  static Type arrow(Type domain, Type codomain);

  bool is_nat() const;
  bool is_bool() const;
  bool is_arrow() const;
  const Type& domain() const;    // pre: is_arrow()
  const Type& codomain() const;  // pre: is_arrow()

  std::string to_string() const;

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }

 private:
  explicit Type(std::shared_ptr<const TypeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TypeNode> node_;
};

struct NatType {};
struct BoolType {};
struct ArrowType {
  Type domain;
  Type codomain;
};

struct TypeNode {
  std::variant<NatType, BoolType, ArrowType> v;
};

struct TermNode;

/// Core terms with binder-relative (de Bruijn) variables: index 0 is the
/// innermost enclosing binder. Surface names exist only in the parser and
/// pretty-printer. Value type; copies share nodes; operator== is structural
/// and ignores spans.
class Term {
 public:
  static Term var(int index, Span span = {});
  static Term lam(Type annotation, Term body, Span span = {});
  static Term app(Term fn, Term arg, Span span = {});
  static Term zero(Span span = {});
  static Term succ(Term arg, Span span = {});
  static Term rec(Term zero_case, Term step_case, Term scrutinee, Span span = {});
  static Term lit_true(Span span = {});
  static Term lit_false(Span span = {});
  static Term if_then_else(Term cond, Term then_branch, Term else_branch, Span span = {});

  // n-fold succ of zero
  static Term nat_literal(uint64_t n, Span span = {});

  const TermNode& node() const { return *node_; }
  Span span() const;
  size_t size() const;  // AST node count

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const TermNode> node_;
};

struct Var {
  int index;
};
struct Lam {
  Type annotation;
  Term body;
};
struct App {
  Term fn;
  Term arg;
};
struct Zero {};
struct Succ {
  Term arg;
};
struct Rec {
  Term zero_case;
  Term step_case;
  Term scrutinee;
};
struct TrueLit {};
struct FalseLit {};
struct If {
  Term cond;
  Term then_branch;
  Term else_branch;
};

struct TermNode {
  std::variant<Var, Lam, App, Zero, Succ, Rec, TrueLit, FalseLit, If> v;
  Span span;
};

/// A parsed .t file. Definition bodies are closed: references to earlier
/// definitions were expanded during parsing.
struct SourceFile {
  std::vector<std::pair<std::string, Term>> definitions;
  std::optional<Term> main;
};

}  // namespace tw
