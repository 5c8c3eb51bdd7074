#pragma once

#include <string>
#include <vector>

#include "ghostring/burnside.hpp"

namespace ghostring {

/// L *_H^kappa M = kappa(L,M) * (L*M), extended bilinearly.
GhostElement twisted_product(const GhostElement& x, const GhostElement& y, const TripleSpace& ts);

/// L ~*_H^kappa M = sum_N a^{L,M}_N * N, extended bilinearly. Uses the
/// simplified structure-constant evaluator with candidates restricted to
/// subgroups of L*M carrying the projections of (L, M).
GhostElement ghost_product(const GhostElement& x, const GhostElement& y, const TripleSpace& ts);

/// e_G = sum_{g in G} Delta_g(G) in QS_{G x G}.
GhostElement idempotent_e(const SpacePtr& gg);
/// The transported idempotent zeta(e_G).
GhostElement tilde_e(const SpacePtr& gg);

struct CondensationReport {
    bool pass = true;
    std::vector<std::string> failures;
    std::size_t dim_alpha = 0;
    std::size_t dim_fixed = 0;
    std::size_t dim_condensed = 0;

    void fail(std::string what) {
        pass = false;
        failures.push_back(std::move(what));
    }
};

/// Verifies alpha(QB(G,H)) = fixed-point span = e_G * QS * e_H as subspaces,
/// the formula e_G * L * e_H = (|N(L)|/|GxH|) [L]^+, and (when G = H) that
/// alpha is multiplicative and injective on the standard basis.
CondensationReport condensation_check(const GroupPtr& g, const GroupPtr& h,
                                      int max_order = FiniteGroup::kDefaultMaxOrder);

}  // namespace ghostring
