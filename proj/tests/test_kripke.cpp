#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ljplus/kripke.hpp"
#include "ljplus/kripke_io.hpp"
#include "ljplus/syntax.hpp"
#include "support.hpp"

using namespace ljplus;

namespace {

Formula F(const char* s) { return parse_formula(s); }

const char* kTwoNode = R"D(# two nodes, P(0) appears at m
node k
node m
le k m
dom k 0
dom m 0
val m P(0)
)D";

// The same structure with nodes and elements relabelled by the given
// permutations.
KripkeStructure permute(const KripkeStructure& s, const std::vector<int>& np, const std::vector<int>& ep) {
  KripkeStructure t;
  for (std::size_t i = 0; i < s.size(); ++i) t.add_node("n" + std::to_string(i));
  for (std::size_t i = 0; i < s.elements.size(); ++i) t.add_element("e" + std::to_string(i));
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (s.leq(a, b)) t.order(np[a], np[b]);
    }
    for (int e : s.domain[a]) t.domain[np[a]].insert(ep[e]);
    for (const auto& atom : s.valuation[a]) {
      GroundAtom g{atom.symbol, {}};
      for (int e : atom.args) g.args.push_back(ep[e]);
      t.valuation[np[a]].insert(g);
    }
  }
  t.close();
  return t;
}

}  // namespace

TEST_SUITE("kripke") {
  TEST_CASE("the two-node structure") {
    KripkeStructure s = parse_structure(kTwoNode);
    auto rep = validate_structure(s);
    CHECK(rep.well_formed);
    CHECK(rep.constrained);
    const int k = *s.node_index("k"), m = *s.node_index("m");
    CHECK(!forces(s, k, F("exists x. P(x)")));
    CHECK(forces(s, m, F("exists x. P(x)")));
    CHECK(!forces(s, k, F("~(exists x. P(x))")));
    CHECK(!forces(s, k, F("(exists x. P(x)) | ~(exists x. P(x))")));
    CHECK(forces(s, k, F("~~(exists x. P(x))")));
    CHECK(forces(s, k, F("top")));
    CHECK(!forces(s, k, F("bot")));
    CHECK(refute_sequent(s, parse_sequent("|- (exists x. P(x)) | ~(exists x. P(x))"))->node == k);
  }

  TEST_CASE("forcing needs assigned variables inside the domain") {
    KripkeStructure s = parse_structure(kTwoNode);
    CHECK_THROWS_AS(forces(s, 0, F("P(x)")), KripkeError);
    CHECK(forces(s, 1, F("P(x)"), {{"x", 0}}));
    CHECK_THROWS_AS(forces(s, 1, F("P(x)"), {{"x", 5}}), KripkeError);
    // Open sequents are read universally over the node's domain.
    CHECK(sequent_valid(s, parse_sequent("P(x) |- P(x)")));
  }

  TEST_CASE("validation reports each kind of defect") {
    auto non_mono = validate_structure(parse_structure("node a\nnode b\nle a b\ndom a 0\ndom b 0\nval a P(0)\n"));
    CHECK(!non_mono.well_formed);
    auto shrinking = validate_structure(parse_structure("node a\nnode b\nle a b\ndom a 0 1\ndom b 0\n"));
    CHECK(!shrinking.well_formed);
    auto prop = validate_structure(parse_structure("node a\nnode b\nle a b\ndom a 0\ndom b 0\nval b R\n"));
    CHECK(prop.well_formed);
    CHECK(!prop.constrained);
    auto empty = validate_structure(parse_structure("node a\n"));
    CHECK(!empty.well_formed);
  }

  TEST_CASE("parse errors name the line") {
    try {
      parse_structure("node a\nle a b\n");
      FAIL("undeclared node accepted");
    } catch (const KripkeError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_structure("node a\nfrob a\n"), KripkeError);
    CHECK_THROWS_AS(parse_structure("node a\ndom a 0\nval a P(7)\n"), KripkeError);
  }

  TEST_CASE("write and parse round trip") {
    std::mt19937 rng(2);
    KripkeSignature sig{{"R", 0}, {"P", 1}, {"E", 2}};
    for (int i = 0; i < 200; ++i) {
      KripkeStructure s = random_structure(rng, 4, 3, sig);
      KripkeStructure back = parse_structure(write_structure(s));
      CHECK(canonical_form(back) == canonical_form(s));
      // One pass fixes the element order; after that the text is stable.
      CHECK(write_structure(parse_structure(write_structure(back))) == write_structure(back));
    }
  }

  TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937 rng(9);
    KripkeSignature sig{{"R", 0}, {"S", 0}, {"P", 1}};
    for (int i = 0; i < 200; ++i) {
      KripkeStructure s = random_structure(rng, 4, 2, sig);
      std::vector<int> np(s.size()), ep(s.elements.size());
      std::iota(np.begin(), np.end(), 0);
      std::iota(ep.begin(), ep.end(), 0);
      std::shuffle(np.begin(), np.end(), rng);
      std::shuffle(ep.begin(), ep.end(), rng);
      KripkeStructure t = permute(s, np, ep);
      REQUIRE(isomorphic(s, t));
      // Dropping one atom breaks the isomorphism when there is one to drop.
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (t.valuation[k].empty()) continue;
        KripkeStructure u = t;
        u.valuation[k].erase(u.valuation[k].begin());
        CHECK(!isomorphic(s, u));
        break;
      }
    }
  }

  TEST_CASE("enumeration counts match hand counts") {
    CHECK(count_structures({1, 1, {{"R", 0}}}) == 2);
    CHECK(count_structures({2, 1, {}}) == 3);
    CHECK(count_structures({2, 1, {{"R", 0}}}) == 7);
    CHECK(count_structures({2, 1, {{"P", 1}}}) == 8);
    CHECK(count_structures({1, 2, {{"P", 1}}}) == 5);
    // Three nodes, no symbols: the five posets on three points, plus the
    // smaller ones.
    CHECK(count_structures({3, 1, {}}) == 1 + 2 + 5);
  }

  TEST_CASE("enumerated structures are constrained and pairwise non-isomorphic") {
    std::set<std::string> seen;
    std::size_t n = 0;
    enumerate_structures({3, 2, {{"R", 0}, {"P", 1}}}, [&](const KripkeStructure& s) {
      auto rep = validate_structure(s);
      CHECK(rep.well_formed);
      CHECK(rep.constrained);
      CHECK(seen.insert(canonical_form(s)).second);
      ++n;
      return true;
    });
    CHECK(n == seen.size());
    CHECK(n > 0);
  }

  TEST_CASE("countermodel search") {
    auto none = countermodel_search(parse_sequent("|- (forall x. P(x)) -> (exists x. P(x))"), {3, 2, {{"P", 1}}});
    CHECK(!none);
    auto lem = countermodel_search(parse_sequent("|- R | ~R"), {3, 2, {{"R", 0}}});
    CHECK(!lem);
    auto dn = countermodel_search(parse_sequent("|- ~~(exists x. P(x)) -> (exists x. P(x))"), {2, 1, {{"P", 1}}});
    REQUIRE(dn);
    CHECK(dn->structure.size() == 2);
    CHECK(isomorphic(dn->structure, parse_structure(kTwoNode)));
  }

  TEST_CASE("gluing keeps both refutations") {
    KripkeStructure a = parse_structure(kTwoNode);
    KripkeStructure b = parse_structure("node u\ndom u 0 1\nval u S\n");
    Glued g = glue(a, 0, b, 0);
    auto rep = validate_structure(g.structure);
    CHECK(rep.well_formed);
    CHECK(rep.constrained);
    CHECK(g.structure.size() == 4);
    CHECK(forces(g.structure, g.root, F("S")));
    const Formula f = F("(exists x. P(x)) | ~(exists x. P(x))");
    const Formula h = F("S -> T");
    CHECK(!forces(g.structure, g.root, Formula::disjunction(f, h)));
  }

  TEST_CASE("classical structures evaluate like truth tables") {
    std::mt19937 rng(4);
    testsupport::FormulaShape shape{{"R", "S", "T"}, {}, {}, true, false, 10};
    const std::vector<std::string> syms{"R", "S", "T"};
    for (int i = 0; i < 500; ++i) {
      Formula f = testsupport::random_formula(rng, shape, 1 + testsupport::pick(rng, 10));
      const std::uint64_t table = testsupport::truth_table(f, syms);
      for (unsigned row = 0; row < 8; ++row) {
        std::set<std::string> truths;
        for (unsigned j = 0; j < 3; ++j) {
          if (row >> j & 1) truths.insert(syms[j]);
        }
        CHECK(forces(classical_structure(truths), 0, f) == static_cast<bool>(table >> row & 1));
      }
    }
  }
}
