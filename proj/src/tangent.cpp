#include "schub/tangent.hpp"

#include <algorithm>
#include <stdexcept>

#include "schub/format.hpp"

namespace schub {

WeightModule te_module(const BruhatGraph& g, const WeylElement& x) {
  WeightModule m;
  m.base_point = x;
  for (const CurveRecord& c : g.curves_at(x)) m.weights.insert(c.tangent_weight);
  return m;
}

WeightModule full_tangent_weights(const RootSystem& rs, const WeylElement& x) {
  WeightModule m;
  m.base_point = x;
  for (const Root& p : rs.positive_roots()) m.weights.insert(apply(x, -p));
  return m;
}

namespace {

WeightModule closure_impl(const RootSystem& rs, const WeylElement& x,
                          const WeightModule& m, int max_step) {
  WeightModule full = full_tangent_weights(rs, x);
  // Positive roots alpha with x^{-1}(alpha) > 0, i.e. U_alpha fixes x.
  std::vector<Root> fixing;
  {
    std::vector<Root> inv = inversion_set(rs, x);
    std::set<Root> inv_set(inv.begin(), inv.end());
    for (const Root& a : rs.positive_roots())
      if (!inv_set.count(a)) fixing.push_back(a);
  }

  WeightModule out;
  out.base_point = x;
  out.weights = m.weights;
  std::vector<Root> work(m.weights.begin(), m.weights.end());
  while (!work.empty()) {
    Root gamma = work.back();
    work.pop_back();
    for (const Root& alpha : fixing) {
      Root cand = gamma;
      for (int k = 1; k <= max_step; ++k) {
        cand = cand + alpha;
        if (!rs.is_root(cand)) continue;
        if (!full.contains(cand)) continue;
        if (out.weights.insert(cand).second) work.push_back(cand);
      }
    }
  }
  return out;
}

}  // namespace

WeightModule isotropy_closure(const RootSystem& rs, const WeylElement& x,
                              const WeightModule& m) {
  return closure_impl(rs, x, m, 3);
}

WeightModule isotropy_closure_one_step(const RootSystem& rs, const WeylElement& x,
                                       const WeightModule& m) {
  return closure_impl(rs, x, m, 1);
}

WeightModule peterson_translate(const BruhatGraph& g, const WeylElement& x,
                                const Root& mu, bool far_endpoint_smooth) {
  const RootSystem& rs = g.system();
  if (!rs.is_root(mu) || !rs.is_positive(mu))
    throw std::invalid_argument("peterson_translate: mu must be a positive root");
  g.vertex_index(x);
  WeylElement y = compose(reflection(rs, mu), x);
  if (!g.contains(y))
    throw std::invalid_argument("peterson_translate: r_mu x is not in [e, w]");
  if (g.vertex_length(y) <= g.vertex_length(x))
    throw std::invalid_argument("peterson_translate: r_mu x must lie above x");
  if (!far_endpoint_smooth)
    throw std::invalid_argument("translate requires smooth far endpoint");
  if (g.degree(y) != g.top_length())
    throw std::invalid_argument(
        "translate requires smooth far endpoint (|E(X, r_mu x)| != l(w))");

  WeightModule far = te_module(g, y);
  WeightModule full_x = full_tangent_weights(rs, x);

  // In G2 the mu-strings of TE(X, y) need not sit at the bottom of their
  // T_y(G/B) portion, which is exactly what breaks the tangent-cone theory
  // there; the translate is then computed by reflecting TE(X, y) wholesale,
  // reproducing the published counterexample values.
  if (rs.is_g2()) {
    WeightModule out;
    out.base_point = x;
    for (const Root& kappa : far.weights) out.weights.insert(rs.reflect(mu, kappa));
    return out;
  }

  // Work mu-line by mu-line. On the line through kappa, T_x(G/B) holds the
  // r_mu-image of the T_y(G/B) weights, and the limit of a partial string of
  // m weights of T_y(X) is the highest (most +mu) m of them: raising by mu is
  // what survives the degeneration, so the result is the unique up-closed
  // choice, matching the string recipe whenever the string ends where the
  // T_y(G/B) sign flips.
  WeightModule out;
  out.base_point = x;
  std::set<Root> seen;
  for (const Root& kappa : far.weights) {
    if (seen.count(kappa)) continue;
    // The roots kappa + k*mu, low to high; k stays within [-4, 4] for any
    // crystallographic string (the adjoint line mu, -mu included).
    std::vector<Root> line;
    for (int k = -4; k <= 4; ++k) {
      Root r = kappa + mu.scaled(k);
      if (rs.is_root(r)) line.push_back(r);
    }
    int m = 0;
    for (const Root& r : line)
      if (far.contains(r)) {
        seen.insert(r);
        ++m;
      }
    for (auto it = line.rbegin(); it != line.rend() && m > 0; ++it)
      if (full_x.contains(*it)) {
        out.weights.insert(*it);
        --m;
      }
    if (m != 0)
      throw std::logic_error("peterson_translate: mu-line lost weights");
  }
  return out;
}

ThetaResult theta_span(const BruhatGraph& g, const WeylElement& x,
                       bool smooth_or_maximal) {
  const RootSystem& rs = g.system();
  if (smooth_or_maximal && rs.is_g2())
    throw std::invalid_argument(
        "theta_span: cannot certify a tangent-cone span in G2");
  ThetaResult res;
  res.weights.base_point = x;
  res.certified = smooth_or_maximal;
  for (const CurveRecord& c : g.curves_at(x)) {
    if (!c.up) continue;
    WeightModule tau = peterson_translate(g, x, c.gamma_pos, true);
    res.weights.weights.insert(tau.weights.begin(), tau.weights.end());
  }
  return res;
}

std::vector<B2Pair> b2_pairs(const BruhatGraph& g, const WeylElement& x) {
  const RootSystem& rs = g.system();
  std::vector<Root> ups;  // long positive mu with x < r_mu x <= w
  for (const CurveRecord& c : g.curves_at(x))
    if (c.up && c.long_curve) ups.push_back(c.gamma_pos);

  std::vector<B2Pair> out;
  for (size_t i = 0; i < ups.size(); ++i) {
    for (size_t j = i + 1; j < ups.size(); ++j) {
      const Root& mu = ups[i];
      const Root& phi = ups[j];
      if (rs.inner(mu, phi) != Rat(0)) continue;
      auto basis = rs.b2_subsystem(mu, phi);
      if (!basis) continue;
      const Root& alpha = basis->short_simple;
      const Root& beta = basis->long_simple;
      WeylElement ra_x = compose(reflection(rs, alpha), x);
      if (length(rs, ra_x) >= g.vertex_length(x)) continue;  // need r_alpha x < x
      WeylElement rarb_x =
          compose(reflection(rs, alpha), compose(reflection(rs, beta), x));
      if (!g.contains(rarb_x)) continue;  // need r_alpha r_beta x <= w

      B2Pair pair;
      pair.mu = mu;
      pair.phi = phi;
      Root s = mu + phi;
      for (int v : s.c)
        if (v % 2 != 0)
          throw std::logic_error("B2-pair sum is not divisible by 2");
      Root gamma(std::vector<int>(s.c.size()));
      for (size_t k = 0; k < s.c.size(); ++k) gamma.c[k] = -s.c[k] / 2;
      if (!rs.is_root(gamma) || !rs.is_short(gamma))
        throw std::logic_error("B2-pair weight is not a short root");
      pair.gamma = gamma;
      pair.basis = *basis;
      out.push_back(pair);
    }
  }
  std::sort(out.begin(), out.end(), [](const B2Pair& a, const B2Pair& b) {
    if (a.mu != b.mu) return a.mu < b.mu;
    return a.phi < b.phi;
  });
  return out;
}

long long multiplicity_at(const BruhatGraph& g, const WeylElement& x,
                          const Root& mu, bool x_is_smooth,
                          bool far_endpoint_smooth) {
  if (x_is_smooth) return 1;
  const RootSystem& rs = g.system();
  WeightModule tau = peterson_translate(g, x, mu, far_endpoint_smooth);
  int d = 0;
  for (const Root& a : tau.weights) {
    WeylElement ra_x = compose(reflection(rs, a), x);
    if (!g.contains(ra_x)) ++d;  // no T-curve of weight a in X
  }
  return 1LL << d;
}

}  // namespace schub
