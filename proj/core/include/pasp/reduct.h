#pragma once

#include "pasp/certainty.h"
#include "pasp/literal.h"
#include "pasp/program.h"
#include "pasp/valuation.h"

#include <vector>

namespace pasp {

/// cert⁺(P): every weight, its complement, and 0, ½, 1 — sorted, distinct.
std::vector<Certainty> cert_plus(const Program& program);

/// P_λ: the unweighted rules with weight >= level.
std::vector<Rule> lambda_cut(const Program& program, Certainty level);

/// Gelfond-Lifschitz reduct P^I of a literal program: drops every rule whose
/// naf literals meet `interpretation` and strips naf from the rest. Weights
/// are kept, so this is also the reduct P^L of the possibilistic baseline.
Program gl_reduct(const Program& program, const Interpretation& interpretation);

/// Reduct P^V of a clausal program w.r.t. a clausal valuation. Each rule keeps
/// its positive body and gets weight min(λ_rule, λ_body), where
///   λ_body = max{λ | V^{>1-λ} ⊭ e for every naf clause e} = 1 - max_e N_V(e);
/// rules whose weight drops to 0 are removed.
Program clausal_reduct(const Program& program, const Valuation& valuation);

}  // namespace pasp
