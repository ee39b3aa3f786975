#include <doctest.h>

#include "ljplus/analysis.hpp"
#include "ljplus/syntax.hpp"
#include "support.hpp"

using namespace ljplus;

TEST_SUITE("syntax") {
  TEST_CASE("precedence and associativity") {
    Formula f = parse_formula("~A & B | C -> D -> E");
    REQUIRE(f.is(Kind::Implies));
    CHECK(f.right().is(Kind::Implies));
    CHECK(f.left().is(Kind::Or));
    CHECK(f.left().left().is(Kind::And));
    CHECK(f.left().left().left().is(Kind::Not));
    CHECK(to_string(f) == "~A & B | C -> D -> E");
    CHECK(to_string(parse_formula("(A -> B) -> C")) == "(A -> B) -> C");
    CHECK(to_string(parse_formula("A & (B | C)")) == "A & (B | C)");
  }

  TEST_CASE("quantifier scope extends to the right") {
    Formula f = parse_formula("forall x. P(x) -> Q(x)");
    REQUIRE(f.is(Kind::Forall));
    CHECK(f.body().is(Kind::Implies));
    CHECK(free_variables(f).empty());
    Formula g = parse_formula("(forall x. P(x)) -> Q(x)");
    CHECK(g.is(Kind::Implies));
    CHECK(free_variables(g) == std::set<std::string>{"x"});
  }

  TEST_CASE("a quantifier under a binary connective needs parentheses") {
    CHECK_THROWS_AS(parse_formula("A | forall x. B(x)"), ParseError);
    CHECK_NOTHROW(parse_formula("A | (forall x. B(x))"));
  }

  TEST_CASE("parse errors carry line and column") {
    try {
      parse_formula("A &\n  & B");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_formula("A &"), ParseError);
    CHECK_THROWS_AS(parse_formula("P(x"), ParseError);
    CHECK_THROWS_AS(parse_sequent("A |- B, C"), ParseError);
  }

  TEST_CASE("symbols keep the arity of their first use") {
    // Inside the parser the conflict is reported at the offending use.
    try {
      parse_formula("P(x) & P(x, y)");
      FAIL("arity conflict accepted");
    } catch (const ParseError& e) {
      CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(parse_formula("P & P(x)"), ParseError);
    Signature sig;
    parse_formula("Q(x)", sig);
    CHECK_THROWS_AS(parse_formula("Q", sig), ParseError);
    CHECK(sig.arity("Q") == 1u);
    CHECK_THROWS_AS(sig.declare("Q", 2), ArityError);
  }

  TEST_CASE("sequents") {
    Sequent s = parse_sequent("A, B & C |- D");
    CHECK(s.antecedent.size() == 2);
    CHECK(s.succedent == parse_formula("D"));
    Sequent empty = parse_sequent("|-");
    CHECK(empty.antecedent.empty());
    CHECK(!empty.succedent);
    CHECK(to_string(parse_sequent("A |-")) == "A |-");
  }

  TEST_CASE("alpha equivalence and identity") {
    Formula a = parse_formula("forall x. P(x) & Q(y)");
    Formula b = parse_formula("forall z. P(z) & Q(y)");
    CHECK(a == b);
    CHECK(!identical(a, b));
    CHECK(a != parse_formula("forall y. P(y) & Q(y)"));
  }

  TEST_CASE("substitution avoids capture") {
    Formula f = parse_formula("forall y. P(x, y)");
    Formula g = substitute(f, "x", "y");
    CHECK(free_variables(g) == std::set<std::string>{"y"});
    CHECK(g != parse_formula("forall y. P(y, y)"));
    Formula out = f;
    CHECK(!substitute_strict(f, "x", "y", out));
    CHECK(substitute_strict(f, "x", "z", out));
    CHECK(out == parse_formula("forall y. P(z, y)"));
  }

  TEST_CASE("rendering round trips on random formulas") {
    std::mt19937 rng(11);
    testsupport::FormulaShape shape{{"R", "S"}, {"P", "Q"}, {"x", "y", "z"}, true, true, 14};
    for (int i = 0; i < 2000; ++i) {
      Formula f = testsupport::random_formula(rng, shape, 1 + testsupport::pick(rng, 14));
      Formula back = parse_formula(render_formula(f));
      INFO(render_formula(f));
      REQUIRE(identical(back, f));
    }
  }

  TEST_CASE("polarity, unipolarity and strict positivity") {
    Formula f = parse_formula("(R -> S) & ~T");
    auto pol = occurrence_polarities(f);
    CHECK(pol.at({0, 0}) == Polarity::Negative);
    CHECK(pol.at({0, 1}) == Polarity::Positive);
    CHECK(pol.at({1, 0}) == Polarity::Negative);
    CHECK(is_unipolar(f));
    CHECK(!is_unipolar(parse_formula("R -> R")));
    CHECK(is_unipolar(parse_formula("R | R & P(x)")));
    CHECK(is_strictly_positive(parse_formula("R & (S | T)"), {1, 1}));
    CHECK(!is_strictly_positive(parse_formula("R -> S"), {1}));
    CHECK(!is_strictly_positive(parse_formula("forall x. R"), {0}));
  }

  TEST_CASE("classification") {
    CHECK(classify(parse_formula("R & ~S")) == FormulaClass::Propositional);
    CHECK(classify(parse_formula("P(x) -> Q(x)")) == FormulaClass::PurelyPredicate);
    CHECK(classify(parse_formula("R | P(x)")) == FormulaClass::Mixed);
    CHECK(classify(parse_formula("top -> bot")) == FormulaClass::ConstantOnly);
  }

  TEST_CASE("propositional substitution") {
    Formula f = parse_formula("R -> (S | ~R)");
    CHECK(subst_prop(f, "R", Formula::top()) == parse_formula("top -> (S | ~top)"));
    CHECK(atom_paths(f, "R").size() == 2);
  }
}
