#include "ljplus/kripke_io.hpp"

#include <sstream>

#include "ljplus/derivation_io.hpp"
#include "ljplus/syntax.hpp"

namespace ljplus {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw KripkeError("line " + std::to_string(line) + ": " + msg);
}

GroundAtom parse_atom(const std::string& word, const KripkeStructure& s, std::size_t line) {
  auto open = word.find('(');
  GroundAtom a;
  a.symbol = word.substr(0, open);
  if (!is_identifier(a.symbol) || is_variable(a.symbol)) fail(line, "bad atom symbol '" + a.symbol + "'");
  if (open == std::string::npos) return a;
  if (word.back() != ')') fail(line, "unterminated atom '" + word + "'");
  std::string inner = word.substr(open + 1, word.size() - open - 2);
  std::stringstream parts(inner);
  std::string e;
  while (std::getline(parts, e, ',')) {
    auto idx = s.element_index(e);
    if (!idx) fail(line, "unknown element '" + e + "' in " + word);
    a.args.push_back(*idx);
  }
  if (a.args.empty()) fail(line, "empty argument list in " + word);
  return a;
}

}  // namespace

KripkeStructure parse_structure(std::string_view text) {
  KripkeStructure s;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  auto node = [&](const std::string& name) {
    auto k = s.node_index(name);
    if (!k) fail(line, "undeclared node '" + name + "'");
    return *k;
  };
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string kw;
    if (!(words >> kw)) continue;
    std::vector<std::string> args;
    for (std::string w; words >> w;) args.push_back(w);
    if (kw == "node") {
      if (args.size() != 1) fail(line, "node takes one name");
      if (s.node_index(args[0])) fail(line, "duplicate node '" + args[0] + "'");
      s.add_node(args[0]);
    } else if (kw == "le") {
      if (args.size() != 2) fail(line, "le takes two node names");
      s.order(node(args[0]), node(args[1]));
    } else if (kw == "dom") {
      if (args.size() < 2) fail(line, "dom takes a node and at least one element");
      int k = node(args[0]);
      for (std::size_t i = 1; i < args.size(); ++i) {
        auto e = s.element_index(args[i]);
        s.domain[k].insert(e ? *e : s.add_element(args[i]));
      }
    } else if (kw == "val") {
      if (args.size() < 2) fail(line, "val takes a node and at least one atom");
      int k = node(args[0]);
      for (std::size_t i = 1; i < args.size(); ++i) s.valuation[k].insert(parse_atom(args[i], s, line));
    } else {
      fail(line, "unknown keyword '" + kw + "'");
    }
  }
  if (s.size() == 0) throw KripkeError("structure declares no nodes");
  s.close();
  return s;
}

std::string write_structure(const KripkeStructure& s) {
  std::ostringstream os;
  for (const auto& n : s.nodes) os << "node " << n << '\n';
  // Only covering pairs; the rest follows by closure on load.
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i == j || !s.le[i][j]) continue;
      bool covered = true;
      for (std::size_t m = 0; m < s.size(); ++m) {
        if (m != i && m != j && s.le[i][m] && s.le[m][j]) covered = false;
      }
      if (covered) os << "le " << s.nodes[i] << ' ' << s.nodes[j] << '\n';
    }
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    os << "dom " << s.nodes[k];
    for (int e : s.domain[k]) os << ' ' << s.elements[e];
    os << '\n';
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s.valuation[k].empty()) continue;
    os << "val " << s.nodes[k];
    for (const auto& a : s.valuation[k]) os << ' ' << s.atom_text(a);
    os << '\n';
  }
  return os.str();
}

KripkeStructure read_structure_file(const std::string& path) {
  try {
    return parse_structure(read_text_file(path));
  } catch (const KripkeError& e) {
    throw KripkeError(path + ": " + e.what());
  }
}

}  // namespace ljplus
