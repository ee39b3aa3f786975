#include "ljplus/extraction.hpp"

#include <map>

#include "ljplus/analysis.hpp"
#include "ljplus/builder.hpp"
#include "ljplus/kernel.hpp"
#include "ljplus/transform.hpp"

namespace ljplus {

namespace {

using Path = std::vector<std::size_t>;

class Extractor {
 public:
  explicit Extractor(Formula goal) : goal_(std::move(goal)) {}

  bool in_form(const Sequent& s) const {
    if (!s.succedent || *s.succedent != goal_) return false;
    for (const auto& f : s.antecedent) {
      if (!is_propositional(f)) return false;
    }
    return true;
  }

  bool is_frontier(const Derivation& d) const {
    if (d.tag() == RuleTag::ExistsSuc) return true;
    for (const auto& p : d.premises) {
      const Sequent& s = p.conclusion();
      if (!in_form(s) && (!s.succedent || !is_propositional(*s.succedent))) return true;
    }
    return false;
  }

  void collect(const Derivation& d, Path& path) {
    if (is_frontier(d)) {
      if (d.tag() == RuleTag::ExistsSuc) {
        index_[path] = instances_.size();
        instances_.push_back(*d.premises[0].conclusion().succedent);
        witnesses_.push_back(*d.rule.attrs.variable);
        return;
      }
      if (d.tag() == RuleTag::ThinSuc) return;
      throw TransformError("frontier sequent " + to_string(d.conclusion()) + " is produced by " +
                           std::string(tag_name(d.tag())) + ", not by ExistsSuc or ThinSuc");
    }
    for (std::size_t i = d.premises.size(); i-- > 0;) {
      if (!in_form(d.premises[i].conclusion())) continue;
      path.push_back(i);
      collect(d.premises[i], path);
      path.pop_back();
    }
  }

  Formula disjunction(std::size_t upto) const {
    Formula out = instances_[0];
    for (std::size_t i = 1; i < upto; ++i) out = Formula::disjunction(out, instances_[i]);
    return out;
  }

  Derivation rewrite(const Derivation& d, Path& path) const {
    const Formula all = disjunction(instances_.size());
    if (is_frontier(d)) {
      if (d.tag() == RuleTag::ThinSuc) return build::thin_suc(all, d.premises[0]);
      const std::size_t i = index_.at(path);
      Derivation out = d.premises[0];
      if (i > 0) out = build::or_suc_r(disjunction(i), std::move(out));
      for (std::size_t j = i + 1; j < instances_.size(); ++j) out = build::or_suc_l(instances_[j], std::move(out));
      return out;
    }
    Derivation out;
    out.rule = d.rule;
    out.rule.conclusion.succedent = all;
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      if (!in_form(d.premises[i].conclusion())) {
        out.premises.push_back(d.premises[i]);
        continue;
      }
      path.push_back(i);
      out.premises.push_back(rewrite(d.premises[i], path));
      path.pop_back();
    }
    return out;
  }

  const std::vector<Formula>& instances() const { return instances_; }
  const std::vector<std::string>& witnesses() const { return witnesses_; }

 private:
  Formula goal_;
  std::vector<Formula> instances_;
  std::vector<std::string> witnesses_;
  std::map<Path, std::size_t> index_;
};

}  // namespace

Extraction extract_disjuncts(const Derivation& d) {
  const Sequent& end = d.conclusion();
  if (!end.succedent || !end.succedent->is(Kind::Exists)) {
    throw TransformError("endsequent succedent is not an existential formula");
  }
  if (count_tag(d, RuleTag::Cut) + count_tag(d, RuleTag::Mix) > 0) {
    throw TransformError("extraction needs a derivation without Cut or Mix");
  }
  auto report = check(d, CalculusMode::LJ_PLUS);
  if (!report.ok()) throw TransformError("input does not check in LJ+: " + report.failure->message);

  Extractor ex(*end.succedent);
  if (!ex.in_form(end)) throw TransformError("endsequent antecedent is not propositional");
  Path path;
  ex.collect(d, path);
  if (ex.instances().empty()) throw TransformError("no ExistsSuc inference on the frontier");
  Extraction out{ex.rewrite(d, path), ex.instances(), ex.witnesses()};
  auto after = check(out.derivation, CalculusMode::LJ_PLUS);
  if (!after.ok()) throw std::logic_error("extraction produced an invalid derivation: " + after.failure->message);
  return out;
}

}  // namespace ljplus
