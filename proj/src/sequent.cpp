#include "ljplus/sequent.hpp"

namespace ljplus {

bool Sequent::operator==(const Sequent& other) const {
  if (antecedent.size() != other.antecedent.size()) return false;
  if (succedent.has_value() != other.succedent.has_value()) return false;
  for (std::size_t i = 0; i < antecedent.size(); ++i) {
    if (antecedent[i] != other.antecedent[i]) return false;
  }
  return !succedent || *succedent == *other.succedent;
}

std::set<std::string> free_variables(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : s.antecedent) {
    auto v = free_variables(f);
    out.insert(v.begin(), v.end());
  }
  if (s.succedent) {
    auto v = free_variables(*s.succedent);
    out.insert(v.begin(), v.end());
  }
  return out;
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.antecedent[i]);
  }
  if (!s.antecedent.empty()) out += ' ';
  out += "|-";
  if (s.succedent) {
    out += ' ';
    out += to_string(*s.succedent);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Sequent& s) { return os << to_string(s); }

std::size_t find_formula(const std::vector<Formula>& formulas, const Formula& f) {
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (formulas[i] == f) return i;
  }
  return std::string::npos;
}

bool contains_formula(const std::vector<Formula>& formulas, const Formula& f) {
  return find_formula(formulas, f) != std::string::npos;
}

std::vector<Formula> remove_all(const std::vector<Formula>& formulas, const Formula& f) {
  std::vector<Formula> out;
  for (const auto& g : formulas) {
    if (g != f) out.push_back(g);
  }
  return out;
}

}  // namespace ljplus
