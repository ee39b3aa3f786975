#include "ljplus/kripke.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ljplus {

int KripkeStructure::add_node(const std::string& name) {
  nodes.push_back(name);
  for (auto& row : le) row.push_back(false);
  le.emplace_back(nodes.size(), false);
  le.back().back() = true;
  domain.emplace_back();
  valuation.emplace_back();
  return static_cast<int>(nodes.size()) - 1;
}

int KripkeStructure::add_element(const std::string& name) {
  elements.push_back(name);
  return static_cast<int>(elements.size()) - 1;
}

std::optional<int> KripkeStructure::node_index(const std::string& name) const {
  auto it = std::find(nodes.begin(), nodes.end(), name);
  if (it == nodes.end()) return std::nullopt;
  return static_cast<int>(it - nodes.begin());
}

std::optional<int> KripkeStructure::element_index(const std::string& name) const {
  auto it = std::find(elements.begin(), elements.end(), name);
  if (it == elements.end()) return std::nullopt;
  return static_cast<int>(it - elements.begin());
}

void KripkeStructure::close() {
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!le[i][m]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (le[m][j]) le[i][j] = true;
      }
    }
  }
}

std::vector<int> KripkeStructure::above(int k) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (le[k][j]) out.push_back(static_cast<int>(j));
  }
  return out;
}

std::string KripkeStructure::atom_text(const GroundAtom& a) const {
  if (a.args.empty()) return a.symbol;
  std::string out = a.symbol + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ",";
    out += elements[a.args[i]];
  }
  return out + ")";
}

StructureReport validate_structure(const KripkeStructure& s) {
  StructureReport r;
  auto bad = [&](std::string msg) {
    r.well_formed = false;
    r.problems.push_back(std::move(msg));
  };
  const std::size_t n = s.nodes.size();
  if (n == 0) bad("structure has no nodes");
  if (s.le.size() != n || s.domain.size() != n || s.valuation.size() != n) {
    bad("node tables have inconsistent sizes");
    r.constrained = false;
    return r;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.le[i][i]) bad("order is not reflexive at " + s.nodes[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && s.le[i][j] && s.le[j][i]) {
        if (i < j) bad("order is not antisymmetric: " + s.nodes[i] + " and " + s.nodes[j]);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (s.le[i][j] && s.le[j][k] && !s.le[i][k]) {
          bad("order is not transitive: " + s.nodes[i] + " <= " + s.nodes[j] + " <= " + s.nodes[k]);
        }
      }
    }
  }
  std::map<std::string, std::size_t> arity;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.domain[i].empty()) bad("domain of " + s.nodes[i] + " is empty");
    for (int e : s.domain[i]) {
      if (e < 0 || static_cast<std::size_t>(e) >= s.elements.size()) bad("unknown element in domain of " + s.nodes[i]);
    }
    for (const auto& a : s.valuation[i]) {
      auto [it, fresh] = arity.emplace(a.symbol, a.args.size());
      if (!fresh && it->second != a.args.size()) bad("symbol " + a.symbol + " used with two arities");
      for (int e : a.args) {
        if (!s.domain[i].count(e)) bad("atom " + s.atom_text(a) + " at " + s.nodes[i] + " uses an element outside its domain");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !s.le[i][j]) continue;
      if (!std::includes(s.domain[j].begin(), s.domain[j].end(), s.domain[i].begin(), s.domain[i].end())) {
        bad("domain of " + s.nodes[i] + " is not included in domain of " + s.nodes[j]);
      }
      for (const auto& a : s.valuation[i]) {
        if (!s.valuation[j].count(a)) {
          bad("valuation of " + s.nodes[i] + " is not included in valuation of " + s.nodes[j] + " (" + s.atom_text(a) + ")");
        }
        if (a.args.empty() && !s.valuation[j].count(a)) r.constrained = false;
      }
      for (const auto& a : s.valuation[j]) {
        if (a.args.empty() && !s.valuation[i].count(a)) {
          r.constrained = false;
          r.problems.push_back("not constrained: " + a.symbol + " holds at " + s.nodes[j] + " but not at " + s.nodes[i]);
        }
      }
    }
  }
  if (!r.well_formed) r.constrained = false;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

class Forcer {
 public:
  explicit Forcer(const KripkeStructure& s) : s_(s) {}

  bool at(int k, const Formula& f, Assignment& asg) const {
    switch (f.kind()) {
      case Kind::Top: return true;
      case Kind::Bot: return false;
      case Kind::Atom: {
        GroundAtom a{f.symbol(), {}};
        for (const auto& v : f.args()) {
          auto it = asg.find(v);
          if (it == asg.end()) throw KripkeError("variable " + v + " is not assigned");
          if (!s_.domain[k].count(it->second)) {
            throw KripkeError("variable " + v + " is assigned outside the domain of " + s_.nodes[k]);
          }
          a.args.push_back(it->second);
        }
        return s_.valuation[k].count(a) > 0;
      }
      case Kind::And: return at(k, f.left(), asg) && at(k, f.right(), asg);
      case Kind::Or: return at(k, f.left(), asg) || at(k, f.right(), asg);
      case Kind::Implies:
        for (int j : s_.above(k)) {
          if (at(j, f.left(), asg) && !at(j, f.right(), asg)) return false;
        }
        return true;
      case Kind::Not:
        for (int j : s_.above(k)) {
          if (at(j, f.body(), asg)) return false;
        }
        return true;
      case Kind::Forall:
        for (int j : s_.above(k)) {
          for (int d : s_.domain[j]) {
            if (!with(j, f, d, asg)) return false;
          }
        }
        return true;
      case Kind::Exists:
        for (int d : s_.domain[k]) {
          if (with(k, f, d, asg)) return true;
        }
        return false;
    }
    return false;
  }

 private:
  bool with(int k, const Formula& q, int d, Assignment& asg) const {
    auto it = asg.find(q.var());
    std::optional<int> saved;
    if (it != asg.end()) saved = it->second;
    asg[q.var()] = d;
    bool out = at(k, q.body(), asg);
    if (saved) {
      asg[q.var()] = *saved;
    } else {
      asg.erase(q.var());
    }
    return out;
  }

  const KripkeStructure& s_;
};

void check_assignment(const KripkeStructure& s, int k, const Formula& f, const Assignment& asg) {
  for (const auto& v : free_variables(f)) {
    auto it = asg.find(v);
    if (it == asg.end()) throw KripkeError("variable " + v + " is not assigned");
    if (!s.domain[k].count(it->second)) {
      throw KripkeError("variable " + v + " is assigned outside the domain of " + s.nodes[k]);
    }
  }
}

}  // namespace

bool forces(const KripkeStructure& s, int k, const Formula& f, const Assignment& asg) {
  if (k < 0 || static_cast<std::size_t>(k) >= s.size()) throw KripkeError("no such node");
  check_assignment(s, k, f, asg);
  Assignment work = asg;
  return Forcer(s).at(k, f, work);
}

std::optional<Refutation> refute_sequent(const KripkeStructure& s, const Sequent& q) {
  const auto fv = free_variables(q);
  const std::vector<std::string> vars(fv.begin(), fv.end());
  Forcer forcer(s);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const std::vector<int> dom(s.domain[k].begin(), s.domain[k].end());
    if (dom.empty() && !vars.empty()) continue;
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      Assignment asg;
      for (std::size_t i = 0; i < vars.size(); ++i) asg[vars[i]] = dom[idx[i]];
      bool all = true;
      for (const auto& f : q.antecedent) {
        if (!forcer.at(static_cast<int>(k), f, asg)) {
          all = false;
          break;
        }
      }
      if (all && (!q.succedent || !forcer.at(static_cast<int>(k), *q.succedent, asg))) {
        return Refutation{static_cast<int>(k), asg};
      }
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == dom.size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return std::nullopt;
}

bool sequent_valid(const KripkeStructure& s, const Sequent& q) { return !refute_sequent(s, q); }

// ---------------------------------------------------------------------------

namespace {

std::string unused_name(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base += "'";
  return base;
}

std::set<GroundAtom> propositional_part(const std::set<GroundAtom>& v) {
  std::set<GroundAtom> out;
  for (const auto& a : v) {
    if (a.args.empty()) out.insert(a);
  }
  return out;
}

}  // namespace

Glued glue(const KripkeStructure& s1, int k1, const KripkeStructure& s2, int k2) {
  for (const auto* s : {&s1, &s2}) {
    auto rep = validate_structure(*s);
    if (!rep.well_formed || !rep.constrained) throw KripkeError("glue needs well-formed constrained structures");
  }
  KripkeStructure g;
  std::set<GroundAtom> props = propositional_part(s1.valuation[k1]);
  for (const auto& a : propositional_part(s2.valuation[k2])) props.insert(a);

  std::set<std::string> taken(s1.nodes.begin(), s1.nodes.end());
  taken.insert(s2.nodes.begin(), s2.nodes.end());
  const int root = g.add_node(unused_name("n", taken));

  for (const auto& e : s1.elements) g.add_element(e);
  std::vector<int> emap(s2.elements.size(), -1);
  const std::vector<int> d1(s1.domain[k1].begin(), s1.domain[k1].end());
  const std::vector<int> d2(s2.domain[k2].begin(), s2.domain[k2].end());
  for (std::size_t i = 0; i < d2.size() && i < d1.size(); ++i) emap[d2[i]] = d1[i];
  std::set<std::string> enames(s1.elements.begin(), s1.elements.end());
  for (std::size_t e = 0; e < s2.elements.size(); ++e) {
    if (emap[e] >= 0) continue;
    std::string name = unused_name(s2.elements[e], enames);
    enames.insert(name);
    emap[e] = g.add_element(name);
  }

  std::set<std::string> used{g.nodes[root]};
  auto copy_cone = [&](const KripkeStructure& s, int k, const std::vector<int>& elem) {
    std::map<int, int> nmap;
    for (int j : s.above(k)) {
      std::string name = unused_name(s.nodes[j], used);
      used.insert(name);
      int id = g.add_node(name);
      nmap[j] = id;
      for (int e : s.domain[j]) g.domain[id].insert(elem[e]);
      for (const auto& a : s.valuation[j]) {
        GroundAtom b{a.symbol, {}};
        for (int e : a.args) b.args.push_back(elem[e]);
        g.valuation[id].insert(b);
      }
      g.valuation[id].insert(props.begin(), props.end());
    }
    for (auto [a, ga] : nmap) {
      for (auto [b, gb] : nmap) {
        if (s.leq(a, b)) g.order(ga, gb);
      }
      g.order(root, ga);
    }
  };
  std::vector<int> identity(s1.elements.size());
  std::iota(identity.begin(), identity.end(), 0);
  copy_cone(s1, k1, identity);
  copy_cone(s2, k2, emap);

  for (std::size_t i = 0; i < d1.size() && i < d2.size(); ++i) g.domain[root].insert(d1[i]);
  g.valuation[root] = props;
  g.close();
  return Glued{std::move(g), root};
}

// ---------------------------------------------------------------------------

std::string canonical_form(const KripkeStructure& s) {
  const std::size_t n = s.size();
  std::set<int> used_set;
  for (const auto& d : s.domain) used_set.insert(d.begin(), d.end());
  for (const auto& v : s.valuation) {
    for (const auto& a : v) used_set.insert(a.args.begin(), a.args.end());
  }
  std::vector<int> used(used_set.begin(), used_set.end());

  std::vector<int> np(n);
  std::iota(np.begin(), np.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::vector<int> ep(used.size());
    std::iota(ep.begin(), ep.end(), 0);
    do {
      std::map<int, int> rename;
      for (std::size_t i = 0; i < used.size(); ++i) rename[used[ep[i]]] = static_cast<int>(i);
      std::ostringstream os;
      os << n << ';';
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) os << (s.le[np[i]][np[j]] ? '1' : '0');
      }
      for (std::size_t i = 0; i < n; ++i) {
        std::set<int> dom;
        for (int e : s.domain[np[i]]) dom.insert(rename[e]);
        os << "|d";
        for (int e : dom) os << ' ' << e;
        std::set<GroundAtom> val;
        for (const auto& a : s.valuation[np[i]]) {
          GroundAtom b{a.symbol, {}};
          for (int e : a.args) b.args.push_back(rename[e]);
          val.insert(b);
        }
        os << " v";
        for (const auto& a : val) {
          os << ' ' << a.symbol;
          for (int e : a.args) os << ',' << e;
        }
      }
      std::string text = os.str();
      if (first || text < best) {
        best = std::move(text);
        first = false;
      }
    } while (std::next_permutation(ep.begin(), ep.end()));
  } while (std::next_permutation(np.begin(), np.end()));
  return best;
}

bool isomorphic(const KripkeStructure& a, const KripkeStructure& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

namespace {

using Relation = std::vector<std::vector<bool>>;

// Partial orders on n nodes in which i <= j implies i < j, one per
// isomorphism class, in a fixed order.
const std::vector<Relation>& poset_shapes(std::size_t n) {
  static std::map<std::size_t, std::vector<Relation>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Relation> out;
  std::set<std::string> seen;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    Relation r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (mask >> p & 1) r[pairs[p].first][pairs[p].second] = true;
    }
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i) {
      for (std::size_t j = 0; j < n && closed; ++j) {
        for (std::size_t k = 0; k < n && closed; ++k) {
          if (r[i][j] && r[j][k] && !r[i][k]) closed = false;
        }
      }
    }
    if (!closed) continue;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool first = true;
    do {
      std::string t;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) t += r[perm[i]][perm[j]] ? '1' : '0';
      }
      if (first || t < best) {
        best = t;
        first = false;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(best).second) out.push_back(std::move(r));
  }
  return cache[n] = std::move(out);
}

std::vector<GroundAtom> atoms_over(const std::set<int>& dom, const KripkeSignature& sig) {
  std::vector<GroundAtom> out;
  const std::vector<int> d(dom.begin(), dom.end());
  for (const auto& [sym, ar] : sig) {
    if (ar == 0) continue;
    std::vector<std::size_t> idx(ar, 0);
    while (true) {
      GroundAtom a{sym, {}};
      for (std::size_t i : idx) a.args.push_back(d[i]);
      out.push_back(std::move(a));
      std::size_t i = ar;
      while (i > 0 && ++idx[i - 1] == d.size()) idx[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

std::vector<int> components(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (r[i][j]) comp[find(static_cast<int>(j))] = find(static_cast<int>(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) comp[i] = find(static_cast<int>(i));
  return comp;
}

class Enumerator {
 public:
  Enumerator(const SearchBounds& b, const std::function<bool(const KripkeStructure&)>& fn) : b_(b), fn_(fn) {
    for (const auto& [sym, ar] : b.signature) {
      if (ar == 0) props_.push_back(sym);
    }
  }

  void run() {
    for (std::size_t n = 1; n <= b_.max_nodes && !stop_; ++n) {
      for (const auto& shape : poset_shapes(n)) {
        if (stop_) return;
        rel_ = shape;
        comp_ = components(shape);
        domains_.assign(n, {});
        choose_domain(0);
      }
    }
  }

 private:
  void choose_domain(std::size_t j) {
    if (stop_) return;
    const std::size_t n = rel_.size();
    if (j == n) {
      roots_.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (comp_[i] == static_cast<int>(i)) roots_.push_back(i);
      }
      comp_props_.assign(n, 0);
      choose_props(0);
      return;
    }
    std::size_t required = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (rel_[i][j]) required |= domains_[i];
    }
    for (std::size_t mask = 1; mask < (std::size_t{1} << b_.max_domain) && !stop_; ++mask) {
      if ((mask & required) != required) continue;
      domains_[j] = mask;
      choose_domain(j + 1);
    }
  }

  void choose_props(std::size_t r) {
    if (stop_) return;
    if (r == roots_.size()) {
      preds_.assign(rel_.size(), {});
      choose_preds(0);
      return;
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << props_.size()) && !stop_; ++mask) {
      comp_props_[roots_[r]] = mask;
      choose_props(r + 1);
    }
  }

  std::set<int> domain_set(std::size_t j) const {
    std::set<int> out;
    for (std::size_t e = 0; e < b_.max_domain; ++e) {
      if (domains_[j] >> e & 1) out.insert(static_cast<int>(e));
    }
    return out;
  }

  void choose_preds(std::size_t j) {
    if (stop_) return;
    const std::size_t n = rel_.size();
    if (j == n) {
      emit();
      return;
    }
    std::set<GroundAtom> required;
    for (std::size_t i = 0; i < j; ++i) {
      if (rel_[i][j]) required.insert(preds_[i].begin(), preds_[i].end());
    }
    std::vector<GroundAtom> free;
    for (auto& a : atoms_over(domain_set(j), b_.signature)) {
      if (!required.count(a)) free.push_back(std::move(a));
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()) && !stop_; ++mask) {
      preds_[j] = required;
      for (std::size_t i = 0; i < free.size(); ++i) {
        if (mask >> i & 1) preds_[j].insert(free[i]);
      }
      choose_preds(j + 1);
    }
  }

  void emit() {
    KripkeStructure s;
    const std::size_t n = rel_.size();
    for (std::size_t e = 0; e < b_.max_domain; ++e) s.add_element(std::to_string(e));
    for (std::size_t i = 0; i < n; ++i) s.add_node("k" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) s.le[i][j] = rel_[i][j];
      s.domain[i] = domain_set(i);
      s.valuation[i] = preds_[i];
      const std::size_t mask = comp_props_[comp_[i]];
      for (std::size_t p = 0; p < props_.size(); ++p) {
        if (mask >> p & 1) s.valuation[i].insert(GroundAtom{props_[p], {}});
      }
    }
    if (!seen_.insert(canonical_form(s)).second) return;
    if (!fn_(s)) stop_ = true;
  }

  const SearchBounds& b_;
  const std::function<bool(const KripkeStructure&)>& fn_;
  std::vector<std::string> props_;
  Relation rel_;
  std::vector<int> comp_;
  std::vector<std::size_t> domains_;
  std::vector<std::size_t> roots_;
  std::vector<std::size_t> comp_props_;
  std::vector<std::set<GroundAtom>> preds_;
  std::set<std::string> seen_;
  bool stop_ = false;
};

}  // namespace

void enumerate_structures(const SearchBounds& b, const std::function<bool(const KripkeStructure&)>& fn) {
  if (b.max_nodes == 0 || b.max_domain == 0) return;
  if (b.max_domain > 16) throw KripkeError("domain bound too large for enumeration");
  Enumerator(b, fn).run();
}

std::size_t count_structures(const SearchBounds& b) {
  std::size_t n = 0;
  enumerate_structures(b, [&](const KripkeStructure&) {
    ++n;
    return true;
  });
  return n;
}

std::optional<Countermodel> countermodel_search(const Sequent& q, const SearchBounds& b) {
  std::optional<Countermodel> out;
  enumerate_structures(b, [&](const KripkeStructure& s) {
    if (auto r = refute_sequent(s, q)) {
      out = Countermodel{s, r->node, r->assignment};
      return false;
    }
    return true;
  });
  return out;
}

KripkeStructure random_structure(std::mt19937& rng, std::size_t max_nodes, std::size_t max_domain,
                                 const KripkeSignature& signature) {
  std::uniform_int_distribution<std::size_t> nodes_dist(1, std::max<std::size_t>(1, max_nodes));
  std::uniform_int_distribution<std::size_t> dom_dist(1, std::max<std::size_t>(1, max_domain));
  std::bernoulli_distribution coin(0.5), sparse(0.3);
  const std::size_t n = nodes_dist(rng);
  const std::size_t pool = dom_dist(rng);
  KripkeStructure s;
  for (std::size_t e = 0; e < pool; ++e) s.add_element(std::to_string(e));
  for (std::size_t i = 0; i < n; ++i) s.add_node("k" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) s.order(static_cast<int>(i), static_cast<int>(j));
    }
  }
  s.close();
  std::uniform_int_distribution<int> elem(0, static_cast<int>(pool) - 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (s.le[i][j]) s.domain[j].insert(s.domain[i].begin(), s.domain[i].end());
    }
    for (std::size_t e = 0; e < pool; ++e) {
      if (sparse(rng)) s.domain[j].insert(static_cast<int>(e));
    }
    if (s.domain[j].empty()) s.domain[j].insert(elem(rng));
  }
  Relation rel = s.le;
  auto comp = components(rel);
  std::map<int, std::set<GroundAtom>> comp_props;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] != static_cast<int>(i)) continue;
    for (const auto& [sym, ar] : signature) {
      if (ar == 0 && coin(rng)) comp_props[static_cast<int>(i)].insert(GroundAtom{sym, {}});
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!s.le[i][j]) continue;
      for (const auto& a : s.valuation[i]) {
        if (!a.args.empty()) s.valuation[j].insert(a);
      }
    }
    for (auto& a : atoms_over(s.domain[j], signature)) {
      if (sparse(rng)) s.valuation[j].insert(std::move(a));
    }
    const auto& p = comp_props[comp[j]];
    s.valuation[j].insert(p.begin(), p.end());
  }
  return s;
}

KripkeStructure classical_structure(const std::set<std::string>& true_symbols) {
  KripkeStructure s;
  s.add_element("0");
  int k = s.add_node("k");
  s.domain[k].insert(0);
  for (const auto& sym : true_symbols) s.valuation[k].insert(GroundAtom{sym, {}});
  return s;
}

}  // namespace ljplus
