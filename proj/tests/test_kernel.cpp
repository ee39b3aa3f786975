#include <doctest.h>

#include <filesystem>

#include "ljplus/builder.hpp"
#include "ljplus/derivation_io.hpp"
#include "ljplus/kernel.hpp"
#include "ljplus/syntax.hpp"

using namespace ljplus;
using namespace ljplus::build;

namespace {

Formula F(const char* s) { return parse_formula(s); }

CheckReport check_text(const std::string& text, CalculusMode mode = CalculusMode::LJ_PLUS) {
  return check(parse_derivation(text), mode);
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("every rule accepts its canonical instance") {
    const Formula a = F("A"), b = F("B");
    std::vector<Derivation> ds = {
        axiom(a),
        top_axiom(),
        bot_axiom(),
        thin_ant(b, axiom(a)),
        thin_suc(a, bot_axiom()),
        contract(thin_ant(a, axiom(a))),
        exchange(0, thin_ant(b, axiom(a))),
        cut(axiom(a), axiom(a)),
        and_suc(top_axiom(), top_axiom()),
        and_ant_l(b, axiom(a)),
        and_ant_r(a, axiom(b)),
        or_ant(or_suc_l(b, axiom(a)), or_suc_r(a, axiom(b))),
        not_suc(not_ant(axiom(a))),
        imp_suc(axiom(a)),
        imp_ant(axiom(a), axiom(b)),
        forall_suc(F("forall x. P(x) -> P(x)"), "y", imp_suc(axiom(F("P(y)")))),
        forall_ant(F("forall x. P(x)"), "t", axiom(F("P(t)"))),
        exists_suc(F("exists x. P(x) -> P(x)"), "t", imp_suc(axiom(F("P(t)")))),
        exists_ant(F("exists x. P(x)"), "y", exists_suc(F("exists x. P(x)"), "y", axiom(F("P(y)")))),
        neutralization(a, or_suc_l(F("~A"), axiom(a)), or_suc_r(a, axiom(F("~A")))),
    };
    for (const auto& d : ds) {
      INFO(tag_name(d.tag()), " ", to_string(d.conclusion()));
      CHECK(check(d, CalculusMode::LJ_PLUS).ok());
    }
    CHECK(check(lem_axiom(a), CalculusMode::LJ_ATOMIC_LEM).ok());
    CHECK(check(lem_axiom(F("A & B")), CalculusMode::LK_LEM).ok());
  }

  TEST_CASE("mode gates") {
    Derivation n = neutralization(F("A"), or_suc_l(F("~A"), axiom(F("A"))), or_suc_r(F("A"), axiom(F("~A"))));
    auto lj = check(n, CalculusMode::LJ);
    REQUIRE(!lj.ok());
    CHECK(lj.failure->code == ViolationCode::ModeViolation);
    CHECK(lj.failure->message == "neutralization not allowed in LJ");
    CHECK(!check(n, CalculusMode::LJ_ATOMIC_LEM).ok());
    CHECK(!check(lem_axiom(F("A")), CalculusMode::LJ_PLUS).ok());
    CHECK(!check(lem_axiom(F("A & B")), CalculusMode::LJ_ATOMIC_LEM).ok());
    // The neutralized formula must be propositional.
    Derivation bad = neutralization(F("P(x)"), or_suc_l(F("~P(x)"), axiom(F("P(x)"))),
                                    or_suc_r(F("P(x)"), axiom(F("~P(x)"))));
    CHECK(!check(bad, CalculusMode::LJ_PLUS).ok());
  }

  TEST_CASE("eigenvariable condition") {
    // P(y) |- forall x. P(x): y occurs free in the conclusion.
    auto r = check_text(R"D((ForallSuc :concl "P(y) |- forall x. P(x)" :eigen y :bound x
                            (Axiom :concl "P(y) |- P(y)")))D");
    REQUIRE(!r.ok());
    CHECK(r.failure->code == ViolationCode::EigenvariableViolation);
    auto e = check_text(R"D((ExistsAnt :concl "exists x. P(x) |- P(y)" :eigen y :bound x
                            (Axiom :concl "P(y) |- P(y)")))D");
    REQUIRE(!e.ok());
    CHECK(e.failure->code == ViolationCode::EigenvariableViolation);
  }

  TEST_CASE("shape and attribute errors point at the node") {
    auto r = check_text(R"D((AndSuc :concl "|- A & B"
                            (Axiom :concl "A |- A")
                            (OrSucL :concl "B |- B | C" (Axiom :concl "B |- B"))))D");
    REQUIRE(!r.ok());
    CHECK(r.failure->code == ViolationCode::ShapeMismatch);
    CHECK(r.failure->path.empty());

    auto deep = check_text(R"D((ImpSuc :concl "|- A -> B"
                               (Axiom :concl "A |- B")))D");
    REQUIRE(!deep.ok());
    CHECK(deep.failure->path == std::vector<std::size_t>{0});

    auto attr = check_text(R"D((Neutralization :concl "|- A | ~A" :n "B"
                               (OrSucL :concl "A |- A | ~A" (Axiom :concl "A |- A"))
                               (OrSucR :concl "~A |- A | ~A" (Axiom :concl "~A |- ~A"))))D");
    CHECK(!attr.ok());
  }

  TEST_CASE("wrong premise count is an arity mismatch") {
    Derivation d{RuleInstance{RuleTag::AndSuc, parse_sequent("|- top & top"), {}}, {top_axiom()}};
    auto r = check(d, CalculusMode::LJ);
    REQUIRE(!r.ok());
    CHECK(r.failure->code == ViolationCode::ArityMismatch);
  }

  TEST_CASE("statistics") {
    Derivation d = cut(axiom(F("A")), exchange(0, thin_ant(F("B"), axiom(F("A")))));
    auto r = check(d, CalculusMode::LJ);
    REQUIRE(r.ok());
    CHECK(r.stats.cuts == 1);
    CHECK(r.stats.size == 5);
    CHECK(r.stats.height == 4);
    CHECK(r.stats.rule_counts[static_cast<std::size_t>(RuleTag::Axiom)] == 2);
  }

  TEST_CASE("structural elaboration reaches permutations and thinnings") {
    Sequent goal = parse_sequent("C, B, A, A |- D");
    auto chain = elaborate_structural(goal, {parse_sequent("A, B |- D")});
    REQUIRE(chain);
    Derivation base{RuleInstance{RuleTag::Axiom, parse_sequent("A, B |- D"), {}}, {}};
    Derivation built = apply_chain(base, *chain);
    CHECK(built.conclusion() == goal);
    CHECK(!elaborate_structural(goal, {parse_sequent("E |- D")}));
  }

  TEST_CASE("builder rejects ill-shaped premises") {
    CHECK_THROWS_AS(imp_suc(top_axiom()), BuildError);
    CHECK_THROWS_AS(and_suc(axiom(F("A")), axiom(F("B"))), BuildError);
    CHECK_THROWS_AS(cut(axiom(F("A")), axiom(F("B"))), BuildError);
  }
}

TEST_SUITE("io") {
  TEST_CASE("write then parse is the identity on the corpus") {
    for (const auto& e : std::filesystem::directory_iterator(LJPLUS_CORPUS_DIR "/proofs")) {
      Derivation d = read_derivation_file(e.path().string());
      Derivation back = parse_derivation(write_derivation(d));
      INFO(e.path().filename().string());
      CHECK(write_derivation(back) == write_derivation(d));
      CHECK(back.conclusion() == d.conclusion());
      CHECK(node_count(back) == node_count(d));
    }
  }

  TEST_CASE("mode directive") {
    CHECK(mode_directive("; mode: lj\n(TopAxiom :concl \"|- top\")") == CalculusMode::LJ);
    CHECK(mode_directive("; mode: lj-atomic-lem\n") == CalculusMode::LJ_ATOMIC_LEM);
    CHECK(!mode_directive("(TopAxiom :concl \"|- top\")"));
  }

  TEST_CASE("parse errors give positions") {
    try {
      parse_derivation("(Axiom :concl \"A |- A\")\n(Axiom");
      FAIL("trailing input accepted");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    try {
      parse_derivation("(Axiom :concl\n   \"A |- & A\")");
      FAIL("bad formula accepted");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 4);
    }
    CHECK_THROWS_AS(parse_derivation("(Bogus :concl \"|- top\")"), ParseError);
    CHECK_THROWS_AS(parse_derivation("(TopAxiom :colour \"|- top\")"), ParseError);
  }
}
