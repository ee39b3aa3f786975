#include <doctest.h>

#include "ljplus/builder.hpp"
#include "ljplus/cut_elimination.hpp"
#include "ljplus/derivation_io.hpp"
#include "ljplus/kernel.hpp"
#include "ljplus/prop_decision.hpp"
#include "ljplus/syntax.hpp"
#include "ljplus/transform.hpp"
#include "support.hpp"

using namespace ljplus;
using namespace ljplus::build;

namespace {

Formula F(const char* s) { return parse_formula(s); }

// Counts connectives and atoms independently of Formula::size.
std::size_t nodes(const Formula& f) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < f.child_count(); ++i) n += nodes(f.child(i));
  return n;
}

void eliminates(const Derivation& d) {
  REQUIRE(check(d, CalculusMode::LJ_PLUS).ok());
  EliminationTrace trace;
  Derivation e = eliminate_cuts(d, &trace);
  CHECK(check(e, CalculusMode::LJ_PLUS).ok());
  CHECK(count_tag(e, RuleTag::Cut) == 0);
  CHECK(count_tag(e, RuleTag::Mix) == 0);
  CHECK(e.conclusion() == d.conclusion());
  CHECK(trace.violations == 0);
  CHECK(trace.cuts_removed == count_tag(d, RuleTag::Cut));
  CHECK(predicate_subformula_report(e).ok());
}

}  // namespace

TEST_SUITE("cut-elimination") {
  TEST_CASE("mix measure on a hand-computed example") {
    // Left: A |- A then thinned twice on the left, so A stays in the
    // succedent for three sequents. Right: A, A |- A contracted.
    const Formula a = F("A & B");
    Derivation left = thin_ant(F("C"), thin_ant(F("D"), axiom(a)));
    Derivation right = contract(thin_ant(a, axiom(a)));
    MixMeasure m = mix_measure(left, right, a);
    CHECK(m.grade == nodes(a));
    CHECK(m.left_rank == 3);
    CHECK(m.right_rank == 3);
    CHECK(m.rank() == 6);
    CHECK(MixMeasure{2, 1, 1} < MixMeasure{3, 1, 1});
    CHECK(MixMeasure{3, 1, 1} < MixMeasure{3, 2, 1});
    CHECK(!(MixMeasure{3, 1, 2} < MixMeasure{3, 2, 1}));
  }

  TEST_CASE("cuts on every connective") {
    // &
    Derivation andsuc = and_suc(thin_ant(F("B"), axiom(F("A"))), exchange(0, thin_ant(F("A"), axiom(F("B")))));
    eliminates(cut(andsuc, and_ant_r(F("A"), axiom(F("B")))));
    eliminates(cut(andsuc, and_ant_l(F("B"), axiom(F("A")))));
    // structural: the cut formula was thinned on the left
    eliminates(cut(thin_ant(F("B"), thin_ant(F("A"), axiom(F("A")))), axiom(F("A"))));
    // ∨
    eliminates(cut(or_suc_l(F("B"), axiom(F("A"))), or_ant(or_suc_r(F("B"), axiom(F("A"))),
                                                          or_suc_l(F("A"), axiom(F("B"))))));
    // ¬
    eliminates(cut(not_suc(not_ant(axiom(F("A")))), not_ant(axiom(F("~A")))));
    // ⊃
    eliminates(cut(imp_suc(axiom(F("A"))), imp_ant(axiom(F("A")), axiom(F("A")))));
    // ∀
    Formula all = F("forall x. P(x) -> P(x)");
    eliminates(cut(forall_suc(all, "y", imp_suc(axiom(F("P(y)")))),
                   forall_ant(all, "t", thin_ant(F("P(t) -> P(t)"), top_axiom()))));
    eliminates(cut(forall_suc(all, "y", imp_suc(axiom(F("P(y)")))),
                   forall_ant(all, "t", axiom(F("P(t) -> P(t)")))));
    // ∃
    Formula ex = F("exists x. P(x)");
    eliminates(cut(exists_suc(ex, "t", axiom(F("P(t)"))),
                   exists_ant(ex, "y", exists_suc(ex, "y", axiom(F("P(y)"))))));
  }

  TEST_CASE("cuts above and below neutralizations") {
    Derivation lem = derive_lem(F("R"));
    Derivation use = or_ant(or_suc_l(F("~R"), axiom(F("R"))), or_suc_r(F("R"), axiom(F("~R"))));
    eliminates(cut(lem, use));
    eliminates(lem_to_neutralization(neutralization_to_lem(derive_lem(F("R & ~S")))));
    // Neutralization on the right of a cut whose formula is predicate.
    Formula p = F("P(x) -> P(x)");
    Derivation pos = thin_ant(F("R"), axiom(p));
    Derivation neg = thin_ant(F("~R"), axiom(p));
    eliminates(cut(imp_suc(axiom(F("P(x)"))), neutralization(F("R"), pos, neg)));
  }

  TEST_CASE("random cut chains of tautologies") {
    std::mt19937 rng(3);
    testsupport::FormulaShape shape{{"R", "S"}, {}, {}, true, false, 7};
    int built = 0;
    while (built < 40) {
      Formula f = testsupport::random_formula(rng, shape, 1 + testsupport::pick(rng, 7));
      Formula g = testsupport::random_formula(rng, shape, 1 + testsupport::pick(rng, 7));
      if (falsify(f) || falsify(g)) continue;
      Derivation pf = synthesize_proof(f);
      Derivation pg = synthesize_proof(g);
      // ⊢ f&g cut against f&g ⊢ g&f, then cut against g&f ⊢ f.
      Derivation swap = and_suc(and_ant_r(f, axiom(g)), and_ant_l(g, axiom(f)));
      Derivation back = and_ant_r(g, axiom(f));
      Derivation d = cut(cut(and_suc(pf, pg), swap), back);
      INFO(to_string(f), " / ", to_string(g));
      eliminates(d);
      ++built;
    }
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(eliminate_cuts(lem_axiom(F("A"))), TransformError);
    CHECK_THROWS_AS(predicate_subformula_report(cut(axiom(F("A")), axiom(F("A")))), TransformError);
  }

  TEST_CASE("subformula report") {
    // Cut-free: every predicate formula is a subformula of the endsequent,
    // with quantified variables instantiated.
    Formula all = F("forall x. P(x) -> P(x)");
    Derivation ok = forall_suc(all, "y", imp_suc(axiom(F("P(y)"))));
    CHECK(predicate_subformula_report(ok).ok());
    // Propositional formulas may be discharged by neutralization.
    Derivation n = neutralization(F("R"), thin_ant(F("R"), axiom(F("P(x)"))), thin_ant(F("~R"), axiom(F("P(x)"))));
    CHECK(predicate_subformula_report(n).ok());
    // A node mentioning Q(x), which the endsequent does not contain.
    Derivation stray = parse_derivation(R"D((ImpSuc :concl "|- P(x) -> P(x)" (Axiom :concl "Q(x) |- Q(x)")))D");
    auto r = predicate_subformula_report(stray);
    REQUIRE(!r.ok());
    CHECK(r.failure->code == ViolationCode::SubformulaViolation);
    CHECK(r.failure->path == std::vector<std::size_t>{0});
  }
}
