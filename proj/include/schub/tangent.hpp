#pragma once

#include <set>
#include <vector>

#include "schub/bruhatgraph.hpp"

namespace schub {

// T-weights of a T-stable subspace of T_x(G/B): every weight delta
// satisfies x^{-1}(delta) < 0, and no two weights are proportional.
struct WeightModule {
  WeylElement base_point;
  std::set<Root> weights;

  bool contains(const Root& g) const { return weights.count(g) > 0; }
  int size() const { return static_cast<int>(weights.size()); }
};

// Long positive orthogonal roots {mu, phi} satisfying the edge conditions
// at x; contributes the short weight gamma = -1/2(mu + phi).
struct B2Pair {
  Root mu, phi;
  Root gamma;
  B2Basis basis;
};

// Span of the tangent lines to the T-curves at x.
WeightModule te_module(const BruhatGraph& g, const WeylElement& x);

// All of T_x(G/B): {gamma in Phi : x^{-1}(gamma) < 0}.
WeightModule full_tangent_weights(const RootSystem& rs, const WeylElement& x);

// Least B_x-stable superset of m inside T_x(G/B): closes under
// gamma -> gamma + k*alpha (k >= 1) for positive alpha fixing x.
// With m = te_module this is the isotropy submodule.
WeightModule isotropy_closure(const RootSystem& rs, const WeylElement& x,
                              const WeightModule& m);
// The literal one-step variant (k = 1 only); kept separate so tests can
// check the two closures coincide.
WeightModule isotropy_closure_one_step(const RootSystem& rs, const WeylElement& x,
                                       const WeightModule& m);

// Peterson translate along the good curve U_{-mu} x with far endpoint
// y = r_mu x, computed by the mu-string procedure on TE(X, y). The caller
// asserts that y is a smooth point of X(w).
WeightModule peterson_translate(const BruhatGraph& g, const WeylElement& x,
                                const Root& mu, bool far_endpoint_smooth);

struct ThetaResult {
  WeightModule weights;
  // True when the caller certified x smooth-or-maximal-singularity, so the
  // union is the full tangent-cone span; otherwise it is only the upper
  // bound tau(X, x).
  bool certified = false;
};

// Union of the translates over all UP curves at x.
ThetaResult theta_span(const BruhatGraph& g, const WeylElement& x,
                       bool smooth_or_maximal);

// All orthogonal B2-pairs at x, deterministically ordered by (mu, phi).
std::vector<B2Pair> b2_pairs(const BruhatGraph& g, const WeylElement& x);

// 2^d where d counts translate weights with no corresponding T-curve in X.
// Returns 1 at a smooth point.
long long multiplicity_at(const BruhatGraph& g, const WeylElement& x,
                          const Root& mu, bool x_is_smooth,
                          bool far_endpoint_smooth);

}  // namespace schub
