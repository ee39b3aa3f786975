#include <doctest.h>

#include <filesystem>

#include "ljplus/analysis.hpp"
#include "ljplus/builder.hpp"
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

std::vector<Derivation> corpus() {
  std::vector<Derivation> out;
  for (const auto& e : std::filesystem::directory_iterator(LJPLUS_CORPUS_DIR "/proofs")) {
    out.push_back(read_derivation_file(e.path().string()));
  }
  return out;
}

}  // namespace

TEST_SUITE("transform") {
  TEST_CASE("the LEM gadget is five nodes with one neutralization") {
    Derivation g = lem_gadget(F("N"));
    CHECK(node_count(g) == 5);
    CHECK(count_tag(g, RuleTag::Neutralization) == 1);
    CHECK(g.conclusion() == parse_sequent("|- N | ~N"));
    CHECK(check(g, CalculusMode::LJ_PLUS).ok());
  }

  TEST_CASE("derive_lem for random propositional formulas") {
    std::mt19937 rng(5);
    testsupport::FormulaShape shape{{"R", "S", "T"}, {}, {}, true, false, 8};
    for (int i = 0; i < 300; ++i) {
      Formula n = testsupport::random_formula(rng, shape, 1 + testsupport::pick(rng, 8));
      INFO(to_string(n));
      Derivation d = derive_lem(n);
      Derivation a = derive_lem_atomic(n);
      Sequent expect{{}, Formula::disjunction(n, Formula::negation(n))};
      REQUIRE(d.conclusion() == expect);
      REQUIRE(a.conclusion() == expect);
      REQUIRE(check(d, CalculusMode::LJ_PLUS).ok());
      REQUIRE(check(a, CalculusMode::LJ_ATOMIC_LEM).ok());
      CHECK(count_tag(a, RuleTag::Neutralization) == 0);
      CHECK(count_tag(d, RuleTag::LemAxiom) == 0);
    }
    CHECK_THROWS_AS(derive_lem(F("P(x)")), TransformError);
  }

  TEST_CASE("LEM and neutralization conversions round trip on the corpus") {
    for (const auto& d0 : corpus()) {
      Derivation d = lem_to_neutralization(d0);
      INFO(to_string(d.conclusion()));
      Derivation lem = neutralization_to_lem(d);
      CHECK(count_tag(lem, RuleTag::Neutralization) == 0);
      CHECK(count_tag(lem, RuleTag::Cut) == count_tag(d, RuleTag::Cut) + count_tag(d, RuleTag::Neutralization));
      CHECK(check(lem, CalculusMode::LJ_ATOMIC_LEM).ok());
      Derivation back = lem_to_neutralization(lem);
      CHECK(check(back, CalculusMode::LJ_PLUS).ok());
      CHECK(back.conclusion() == d0.conclusion());
    }
  }

  TEST_CASE("specialize substitutes in every sequent") {
    for (const auto& d : corpus()) {
      for (const auto& [sym, arity] : symbols(d.conclusion())) {
        if (arity != 0) continue;
        for (const Formula& c : {Formula::top(), Formula::bot()}) {
          Derivation s = specialize(lem_to_neutralization(d), sym, c);
          INFO(to_string(d.conclusion()), " with ", sym, " := ", to_string(c));
          CHECK(check(s, CalculusMode::LJ_PLUS).ok());
          const Sequent& end = d.conclusion();
          Sequent expect;
          for (const auto& f : end.antecedent) expect.antecedent.push_back(subst_prop(f, sym, c));
          if (end.succedent) expect.succedent = subst_prop(*end.succedent, sym, c);
          CHECK(s.conclusion() == expect);
        }
      }
    }
  }

  TEST_CASE("merge_by_substitution inverts specialize") {
    std::mt19937 rng(8);
    testsupport::FormulaShape shape{{"R", "S"}, {}, {}, true, false, 9};
    int merged = 0;
    for (int i = 0; i < 2000 && merged < 40; ++i) {
      Formula a = testsupport::random_formula(rng, shape, 3 + testsupport::pick(rng, 7));
      if (!symbols(a).count("R")) continue;
      Formula at = subst_prop(a, "R", Formula::top());
      Formula ab = subst_prop(a, "R", Formula::bot());
      if (falsify(at) || falsify(ab)) continue;
      Derivation top = synthesize_proof(at);
      Derivation bot = synthesize_proof(ab);
      Derivation m = merge_by_substitution(top, bot, a, "R");
      INFO(to_string(a));
      REQUIRE(check(m, CalculusMode::LJ_PLUS).ok());
      CHECK(m.tag() == RuleTag::Neutralization);
      CHECK(m.conclusion() == Sequent{{}, a});
      CHECK(specialize(m, "R", Formula::top()).conclusion() == top.conclusion());
      CHECK(specialize(m, "R", Formula::bot()).conclusion() == bot.conclusion());
      ++merged;
    }
    CHECK(merged == 40);
  }

  TEST_CASE("merge with a predicate part") {
    Formula a = F("R | (P(x) -> P(x))");
    Derivation top = or_suc_l(F("P(x) -> P(x)"), top_axiom());
    Derivation bot = or_suc_r(Formula::bot(), imp_suc(axiom(F("P(x)"))));
    Derivation m = merge_by_substitution(top, bot, a, "R");
    CHECK(check(m, CalculusMode::LJ_PLUS).ok());
    CHECK(m.conclusion() == Sequent{{}, a});
  }

  TEST_CASE("merge rejects mismatched inputs") {
    Derivation top = or_suc_l(F("~top"), top_axiom());
    CHECK_THROWS_AS(merge_by_substitution(top, top, F("R | ~R"), "R"), TransformError);
    CHECK_THROWS_AS(merge_by_substitution(top, top, F("S | ~S"), "R"), TransformError);
  }

  TEST_CASE("replacement lemma") {
    Formula x = F("R & (S -> R)");
    Formula y = F("top & (S -> top)");
    Derivation d = replacement_lemma(x, y, "R", true);
    CHECK(check(d, CalculusMode::LJ).ok());
    CHECK(d.conclusion().succedent == y);
    Derivation e = replacement_lemma(F("~R | S"), F("~bot | S"), "R", false);
    CHECK(check(e, CalculusMode::LJ).ok());
  }

  TEST_CASE("N -> F and ~N | F") {
    for (const char* f : {"P(x)", "forall x. P(x)", "exists y. Q(y) & R", "bot"}) {
      Derivation i2d = derive_impl_disj_equiv(F("N & M"), F(f), EquivDirection::ImpToDisj);
      Derivation d2i = derive_impl_disj_equiv(F("N & M"), F(f), EquivDirection::DisjToImp);
      INFO(f);
      CHECK(check(i2d, CalculusMode::LJ_PLUS).ok());
      CHECK(count_tag(i2d, RuleTag::Neutralization) == 1);
      CHECK(check(d2i, CalculusMode::LJ).ok());
      CHECK(i2d.conclusion().antecedent.front() == d2i.conclusion().succedent);
    }
    CHECK_THROWS_AS(derive_impl_disj_equiv(F("P(x)"), F("R"), EquivDirection::ImpToDisj), TransformError);
  }

  TEST_CASE("regularize gives distinct eigenvariables") {
    Formula q = F("forall x. P(x) -> P(x)");
    Derivation one = forall_suc(q, "y", imp_suc(axiom(F("P(y)"))));
    Derivation d = and_suc(one, one);
    VariablePool pool;
    pool.reserve(d);
    Derivation r = regularize(d, pool);
    CHECK(check(r, CalculusMode::LJ).ok());
    CHECK(r.premises[0].rule.attrs.variable != r.premises[1].rule.attrs.variable);
    CHECK(r.conclusion() == d.conclusion());
  }
}
