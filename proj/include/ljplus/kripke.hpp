#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ljplus/formula.hpp"
#include "ljplus/sequent.hpp"

namespace ljplus {

class KripkeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A propositional symbol (no arguments) or a predicate applied to element
/// indices.
struct GroundAtom {
  std::string symbol;
  std::vector<int> args;

  auto operator<=>(const GroundAtom&) const = default;
};

/// Finite Kripke structure. Nodes and elements are indices into the name
/// tables; `le` is kept reflexively and transitively closed.
struct KripkeStructure {
  std::vector<std::string> nodes;
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> le;
  std::vector<std::set<int>> domain;
  std::vector<std::set<GroundAtom>> valuation;

  int add_node(const std::string& name);
  int add_element(const std::string& name);
  std::optional<int> node_index(const std::string& name) const;
  std::optional<int> element_index(const std::string& name) const;
  std::size_t size() const { return nodes.size(); }
  bool leq(int a, int b) const { return le[a][b]; }
  void order(int a, int b) { le[a][b] = true; }
  /// Reflexive-transitive closure of `le`.
  void close();
  /// Nodes k' with k ≤ k'.
  std::vector<int> above(int k) const;
  std::string atom_text(const GroundAtom& a) const;
};

struct StructureReport {
  bool well_formed = true;
  bool constrained = true;
  std::vector<std::string> problems;
};

StructureReport validate_structure(const KripkeStructure& s);

/// Maps variable names to element indices.
using Assignment = std::map<std::string, int>;

/// Forcing at node `k`. Throws KripkeError when a free variable of `f` is
/// unassigned or assigned outside D(k).
bool forces(const KripkeStructure& s, int k, const Formula& f, const Assignment& asg = {});

struct Refutation {
  int node;
  Assignment assignment;
};

/// A node and assignment at which every antecedent formula is forced and the
/// succedent (if any) is not.
std::optional<Refutation> refute_sequent(const KripkeStructure& s, const Sequent& q);

bool sequent_valid(const KripkeStructure& s, const Sequent& q);

/// Joins the cones above k1 in s1 and above k2 in s2 under a new root. The
/// root's valuation holds the propositional symbols of both base nodes,
/// which are also added to every node of both cones. Elements of s2 are
/// renamed so that the two base domains overlap, and the root's domain is
/// their intersection.
struct Glued {
  KripkeStructure structure;
  int root;
};
Glued glue(const KripkeStructure& s1, int k1, const KripkeStructure& s2, int k2);

/// Symbol name to arity.
using KripkeSignature = std::map<std::string, std::size_t>;

struct SearchBounds {
  std::size_t max_nodes = 1;
  std::size_t max_domain = 1;
  KripkeSignature signature;
};

/// Calls `fn` on every constrained structure within the bounds, one per
/// isomorphism class, in a fixed order: by node count, then order shape,
/// then domains, then valuations. Stops early when `fn` returns false.
void enumerate_structures(const SearchBounds& b, const std::function<bool(const KripkeStructure&)>& fn);

/// Number of structures enumerate_structures yields.
std::size_t count_structures(const SearchBounds& b);

struct Countermodel {
  KripkeStructure structure;
  int node;
  Assignment assignment;
};

/// First refuting structure, node and assignment in enumeration order.
std::optional<Countermodel> countermodel_search(const Sequent& q, const SearchBounds& b);

/// Canonical text of the structure up to renaming of nodes and elements.
std::string canonical_form(const KripkeStructure& s);
bool isomorphic(const KripkeStructure& a, const KripkeStructure& b);

/// Random constrained structure with at most `max_nodes` nodes and
/// `max_domain` elements over the given signature.
KripkeStructure random_structure(std::mt19937& rng, std::size_t max_nodes, std::size_t max_domain,
                                 const KripkeSignature& signature);

/// One-node structure with domain {0} whose valuation is the set of true
/// propositional symbols.
KripkeStructure classical_structure(const std::set<std::string>& true_symbols);

}  // namespace ljplus
