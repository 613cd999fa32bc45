#include "pasp/reduct.h"

#include "pasp/logic.h"

#include <algorithm>
#include <set>

namespace pasp {

std::vector<Certainty> cert_plus(const Program& program) {
  std::set<Certainty> grid{Certainty::zero(), Certainty::half(), Certainty::one()};
  for (const Certainty& w : program.weights()) {
    grid.insert(w);
    grid.insert(w.complement());
  }
  return {grid.begin(), grid.end()};
}

std::vector<Rule> lambda_cut(const Program& program, Certainty level) {
  std::vector<Rule> out;
  for (const WeightedRule& r : program.rules())
    if (r.weight >= level) out.push_back(r.rule);
  return out;
}

Program gl_reduct(const Program& program, const Interpretation& interpretation) {
  std::vector<WeightedRule> out;
  for (const WeightedRule& r : program.rules()) {
    bool blocked = false;
    Rule positive{r.rule.head, {}};
    for (const BodyItem& b : r.rule.body) {
      if (!b.naf)
        positive.body.push_back(b);
      else if (std::any_of(b.clause.begin(), b.clause.end(), [&](Literal l) { return interpretation.count(l) > 0; }))
        blocked = true;
    }
    if (!blocked) out.push_back({std::move(positive), r.weight});
  }
  return program.with_rules(std::move(out));
}

Program clausal_reduct(const Program& program, const Valuation& valuation) {
  std::vector<WeightedRule> out;
  for (const WeightedRule& r : program.rules()) {
    Certainty entailed = Certainty::zero();
    Rule positive{r.rule.head, {}};
    for (const BodyItem& b : r.rule.body) {
      if (b.naf)
        entailed = std::max(entailed, logic::necessity(valuation, b.clause));
      else
        positive.body.push_back(b);
    }
    const Certainty weight = std::min(r.weight, entailed.complement());
    if (!weight.is_zero()) out.push_back({std::move(positive), weight});
  }
  return program.with_rules(std::move(out));
}

}  // namespace pasp
