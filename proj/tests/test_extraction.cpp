#include <doctest.h>

#include "ljplus/builder.hpp"
#include "ljplus/derivation_io.hpp"
#include "ljplus/extraction.hpp"
#include "ljplus/kernel.hpp"
#include "ljplus/syntax.hpp"
#include "ljplus/transform.hpp"

using namespace ljplus;
using namespace ljplus::build;

namespace {

Formula F(const char* s) { return parse_formula(s); }

Derivation corpus_file(const char* name) {
  return read_derivation_file(std::string(LJPLUS_CORPUS_DIR "/proofs/") + name);
}

}  // namespace

TEST_SUITE("extraction") {
  TEST_CASE("the counterexample yields two instances") {
    Extraction e = extract_disjuncts(corpus_file("exists_counterexample.ljp"));
    const Formula g = F("(A(a) | N) & (A(b) | ~N)");
    REQUIRE(e.instances.size() == 2);
    CHECK(e.instances[0] == Formula::implication(g, F("A(a)")));
    CHECK(e.instances[1] == Formula::implication(g, F("A(b)")));
    CHECK(e.witnesses == std::vector<std::string>{"a", "b"});
    CHECK(e.derivation.conclusion() == Sequent{{}, Formula::disjunction(e.instances[0], e.instances[1])});
    CHECK(check(e.derivation, CalculusMode::LJ_PLUS).ok());
    CHECK(count_tag(e.derivation, RuleTag::ExistsSuc) == 0);
  }

  TEST_CASE("one witness gives the bare instance") {
    Extraction e = extract_disjuncts(corpus_file("single_witness.ljp"));
    CHECK(e.instances.size() == 1);
    CHECK(e.derivation.conclusion() == parse_sequent("|- P(a) -> P(a)"));
  }

  TEST_CASE("three witnesses are chained left-associated") {
    // Neutralize on R and then on S: branches pick witnesses a, b, c.
    Formula ex = F("exists x. P(x) -> P(x)");
    auto branch = [&](const char* w, std::vector<Formula> hyps) {
      Derivation d = exists_suc(ex, w, imp_suc(axiom(F((std::string("P(") + w + ")").c_str()))));
      for (const auto& h : hyps) d = thin_ant(h, d);
      return d;
    };
    Derivation inner_pos = branch("a", {F("R"), F("S")});
    Derivation inner_neg = branch("b", {F("R"), F("~S")});
    Derivation pos = neutralization(F("S"), inner_pos, inner_neg);
    Derivation neg = thin_ant(F("~R"), branch("c", {}));
    Derivation d = neutralization(F("R"), pos, neg);
    REQUIRE(check(d, CalculusMode::LJ_PLUS).ok());
    Extraction e = extract_disjuncts(d);
    REQUIRE(e.instances.size() == 3);
    CHECK(check(e.derivation, CalculusMode::LJ_PLUS).ok());
    const Formula& disj = *e.derivation.conclusion().succedent;
    CHECK(disj.is(Kind::Or));
    CHECK(disj.left().is(Kind::Or));
    CHECK(disj.right() == e.instances[2]);
    std::vector<std::string> sorted = e.witnesses;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<std::string>{"a", "b", "c"});
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(extract_disjuncts(corpus_file("example3.ljp")), TransformError);
    Formula ex = F("exists x. P(x) -> P(x)");
    Derivation base = exists_suc(ex, "a", imp_suc(axiom(F("P(a)"))));
    CHECK_THROWS_AS(extract_disjuncts(cut(top_axiom(), thin_ant(Formula::top(), base))), TransformError);
  }
}
