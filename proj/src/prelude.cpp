#include "tw/prelude.hpp"

namespace tw {

namespace {

Type tnat() { return Type::nat(); }
Type tbool() { return Type::boolean(); }
Type tstream() { return Type::arrow(Type::nat(), Type::boolean()); }  // nat -> bool
Type tpred_ty() { return Type::arrow(tstream(), Type::boolean()); }   // (nat -> bool) -> bool

Term v(int i) { return Term::var(i); }

}  // namespace

Term tm_not() {
  return Term::lam(tbool(), Term::if_then_else(v(0), Term::lit_false(), Term::lit_true()));
}

Term tm_and() {
  return Term::lam(tbool(), Term::lam(tbool(), Term::if_then_else(v(1), v(0), Term::lit_false())));
}

Term tm_or() {
  return Term::lam(tbool(), Term::lam(tbool(), Term::if_then_else(v(1), Term::lit_true(), v(0))));
}

Term tm_implies() {
  return Term::lam(tbool(), Term::lam(tbool(), Term::if_then_else(v(1), v(0), Term::lit_true())));
}

Term tm_eqbool() {
  return Term::lam(
      tbool(),
      Term::lam(tbool(), Term::if_then_else(v(1), v(0), Term::app(tm_not(), v(0)))));
}

Term tm_pred() {
  // pred n = rec 0 (\k r. k) n
  return Term::lam(
      tnat(),
      Term::rec(Term::zero(), Term::lam(tnat(), Term::lam(tnat(), v(1))), v(0)));
}

Term tm_iszero() {
  return Term::lam(
      tnat(),
      Term::rec(Term::lit_true(), Term::lam(tnat(), Term::lam(tbool(), Term::lit_false())), v(0)));
}

Term tm_monus() {
  // monus m n = rec m (\k r. pred r) n
  return Term::lam(
      tnat(),
      Term::lam(
          tnat(),
          Term::rec(v(1), Term::lam(tnat(), Term::lam(tnat(), Term::app(tm_pred(), v(0)))), v(0))));
}

Term tm_leq() {
  // leq m n = iszero (monus m n)
  return Term::lam(
      tnat(),
      Term::lam(tnat(),
                Term::app(tm_iszero(), Term::app(Term::app(tm_monus(), v(1)), v(0)))));
}

Term tm_add() {
  // add m n = rec m (\k r. succ r) n
  return Term::lam(
      tnat(),
      Term::lam(tnat(),
                Term::rec(v(1), Term::lam(tnat(), Term::lam(tnat(), Term::succ(v(0)))), v(0))));
}

Term tm_mult() {
  // mult m n = rec 0 (\k r. add m r) n
  return Term::lam(
      tnat(),
      Term::lam(
          tnat(),
          Term::rec(
              Term::zero(),
              Term::lam(tnat(), Term::lam(tnat(), Term::app(Term::app(tm_add(), v(3)), v(0)))),
              v(0))));
}

Term tm_bexists() {
  // bexists q i = rec (q 0) (\k r. or r (q (succ k))) i
  return Term::lam(
      tstream(),
      Term::lam(
          tnat(),
          Term::rec(
              Term::app(v(1), Term::zero()),
              Term::lam(
                  tnat(),
                  Term::lam(tbool(),
                            Term::app(Term::app(tm_or(), v(0)),
                                      Term::app(v(3), Term::succ(v(1)))))),
              v(0))));
}

Term tm_nbar() {
  // nbar n i = leq n i
  return Term::lam(
      tnat(), Term::lam(tnat(), Term::app(Term::app(tm_leq(), v(1)), v(0))));
}

Term tm_infty() { return Term::lam(tnat(), Term::lit_false()); }

Term tm_zerobar() { return Term::lam(tnat(), Term::lit_true()); }

Term tm_cons() {
  // cons a i = if iszero i then false else a (pred i)
  return Term::lam(
      tstream(),
      Term::lam(tnat(),
                Term::if_then_else(Term::app(tm_iszero(), v(0)), Term::lit_false(),
                                   Term::app(v(1), Term::app(tm_pred(), v(0))))));
}

Term tm_eps() {
  // eps p i = bexists (\n. p (nbar n)) i
  return Term::lam(
      tpred_ty(),
      Term::lam(
          tnat(),
          Term::app(
              Term::app(tm_bexists(),
                        Term::lam(tnat(), Term::app(v(2), Term::app(tm_nbar(), v(0))))),
              v(0))));
}

Term tm_test() {
  // test f = implies (eqBool (f (eps (\x. eqBool (f (cons x)) (f infty)))) (f infty))
  //                  (eqBool (f zerobar) (f infty))
  Term probe = Term::lam(
      tstream(),
      Term::app(
          Term::app(tm_eqbool(), Term::app(v(1), Term::app(tm_cons(), v(0)))),
          Term::app(v(1), tm_infty())));
  Term antecedent = Term::app(
      Term::app(tm_eqbool(), Term::app(v(0), Term::app(tm_eps(), probe))),
      Term::app(v(0), tm_infty()));
  Term consequent = Term::app(
      Term::app(tm_eqbool(), Term::app(v(0), tm_zerobar())),
      Term::app(v(0), tm_infty()));
  return Term::lam(tpred_ty(), Term::app(Term::app(tm_implies(), antecedent), consequent));
}

const std::vector<PreludeEntry>& prelude() {
  static const std::vector<PreludeEntry> entries = [] {
    Type b2 = Type::arrow(tbool(), tbool());
    Type b3 = Type::arrow(tbool(), b2);
    Type n2 = Type::arrow(tnat(), tnat());
    Type n3 = Type::arrow(tnat(), n2);
    std::vector<PreludeEntry> out;
    out.push_back({"not", tm_not(), b2});
    out.push_back({"and", tm_and(), b3});
    out.push_back({"or", tm_or(), b3});
    out.push_back({"implies", tm_implies(), b3});
    out.push_back({"eqBool", tm_eqbool(), b3});
    out.push_back({"pred", tm_pred(), n2});
    out.push_back({"iszero", tm_iszero(), Type::arrow(tnat(), tbool())});
    out.push_back({"monus", tm_monus(), n3});
    out.push_back({"leq", tm_leq(), Type::arrow(tnat(), Type::arrow(tnat(), tbool()))});
    out.push_back({"add", tm_add(), n3});
    out.push_back({"mult", tm_mult(), n3});
    out.push_back({"bexists", tm_bexists(), Type::arrow(tstream(), Type::arrow(tnat(), tbool()))});
    out.push_back({"nbar", tm_nbar(), Type::arrow(tnat(), tstream())});
    out.push_back({"infty", tm_infty(), tstream()});
    out.push_back({"zerobar", tm_zerobar(), tstream()});
    out.push_back({"cons", tm_cons(), Type::arrow(tstream(), tstream())});
    out.push_back({"eps", tm_eps(), Type::arrow(tpred_ty(), tstream())});
    out.push_back({"test", tm_test(), Type::arrow(tpred_ty(), tbool())});
    return out;
  }();
  return entries;
}

const std::string& prelude_source() {
  static const std::string text = R"PRELUDE(-- Library of closed terms; streams of type nat -> bool encode points of
-- the one-point compactification of the naturals (nbar n = 0^n 1^w,
-- infty = 0^w), eps selects the least satisfying point, and test probes
-- whether a boolean-valued functional respects limits.

let not = fun b : bool . if b then false else true;
let and = fun a : bool . fun b : bool . if a then b else false;
let or = fun a : bool . fun b : bool . if a then true else b;
let implies = fun a : bool . fun b : bool . if a then b else true;
let eqBool = fun a : bool . fun b : bool . if a then b else not b;
let pred = fun n : nat . rec 0 (fun k : nat . fun r : nat . k) n;
let iszero = fun n : nat . rec true (fun k : nat . fun r : bool . false) n;
let monus = fun m : nat . fun n : nat . rec m (fun k : nat . fun r : nat . pred r) n;
let leq = fun m : nat . fun n : nat . iszero (monus m n);
let add = fun m : nat . fun n : nat . rec m (fun k : nat . fun r : nat . succ r) n;
let mult = fun m : nat . fun n : nat . rec 0 (fun k : nat . fun r : nat . add m r) n;
let bexists = fun q : nat -> bool . fun i : nat . rec (q 0) (fun k : nat . fun r : bool . or r (q (succ k))) i;
let nbar = fun n : nat . fun i : nat . leq n i;
let infty = fun i : nat . false;
let zerobar = fun i : nat . true;
let cons = fun a : nat -> bool . fun i : nat . if iszero i then false else a (pred i);
let eps = fun p : (nat -> bool) -> bool . fun i : nat . bexists (fun n : nat . p (nbar n)) i;
let test = fun f : (nat -> bool) -> bool . implies (eqBool (f (eps (fun x : nat -> bool . eqBool (f (cons x)) (f infty)))) (f infty)) (eqBool (f zerobar) (f infty));
)PRELUDE";
  return text;
}

}  // namespace tw
