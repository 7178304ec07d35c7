#include "schub/smoothness.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "json.hpp"

#include "schub/format.hpp"

namespace schub {

std::string failed_condition_name(FailedCondition c) {
  switch (c) {
    case FailedCondition::NONE: return "none";
    case FailedCondition::DEGREE: return "degree";
    case FailedCondition::ISOTROPY: return "isotropy";
    case FailedCondition::B2PAIR: return "b2pair";
    case FailedCondition::PROPAGATED: return "propagated";
  }
  return "?";
}

namespace {

void require_no_g2(const RootSystem& rs) {
  if (rs.is_g2())
    throw std::invalid_argument("smoothness test is not available in G2");
}

std::pair<FailedCondition, std::optional<B2Pair>> evaluate_conditions(
    const BruhatGraph& g, const WeylElement& x) {
  if (g.degree(x) != g.top_length()) return {FailedCondition::DEGREE, std::nullopt};
  WeightModule te = te_module(g, x);
  WeightModule iso = isotropy_closure(g.system(), x, te);
  if (iso.weights != te.weights) return {FailedCondition::ISOTROPY, std::nullopt};
  for (const B2Pair& pair : b2_pairs(g, x))
    if (!te.contains(pair.gamma)) return {FailedCondition::B2PAIR, pair};
  return {FailedCondition::NONE, std::nullopt};
}

CurveRecord pick_witness(const std::vector<CurveRecord>& candidates,
                         unsigned seed, unsigned salt) {
  if (seed == 0) return candidates.front();  // curves_at is gamma-sorted
  std::mt19937 rng(seed ^ (salt * 0x9e3779b9u));
  std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng)];
}

}  // namespace

PointReport is_smooth_at(const BruhatGraph& g, const WeylElement& x,
                         const std::set<WeylElement>& known_smooth,
                         unsigned witness_seed) {
  require_no_g2(g.system());
  int xi = g.vertex_index(x);

  PointReport rep;
  if (x == g.top()) {
    rep.verdict = Verdict::SMOOTH;
    return rep;
  }

  auto [failed, pair] = evaluate_conditions(g, x);
  if (failed != FailedCondition::NONE) {
    rep.verdict = Verdict::SINGULAR;
    rep.failed = failed;
    rep.offending_pair = pair;
    return rep;
  }

  std::vector<CurveRecord> good;
  for (const CurveRecord& c : g.curves_at(x))
    if (c.up && known_smooth.count(c.other)) good.push_back(c);
  if (good.empty())
    throw std::invalid_argument(
        "is_smooth_at: inconclusive, no certified smooth UP neighbor of " +
        render_word(g.vertex_word(xi)));
  rep.verdict = Verdict::SMOOTH;
  rep.witness = pick_witness(good, witness_seed, static_cast<unsigned>(xi));
  return rep;
}

SmoothnessReport singular_locus(const BruhatGraph& g, unsigned witness_seed) {
  require_no_g2(g.system());
  SmoothnessReport report;
  report.w = g.top();

  const auto& verts = g.vertices();  // sorted by increasing length
  std::set<WeylElement> smooth;

  for (auto it = verts.rbegin(); it != verts.rend(); ++it) {
    const WeylElement& x = *it;
    if (x == g.top()) {
      report.verdicts[x] = PointReport{};
      smooth.insert(x);
      continue;
    }
    bool up_singular = false;
    for (const CurveRecord& c : g.curves_at(x))
      if (c.up && !smooth.count(c.other)) up_singular = true;

    if (up_singular) {
      // Singular by downward closure; attribute a failed condition anyway.
      PointReport rep;
      rep.verdict = Verdict::SINGULAR;
      auto [failed, pair] = evaluate_conditions(g, x);
      rep.failed = failed == FailedCondition::NONE ? FailedCondition::PROPAGATED : failed;
      rep.offending_pair = pair;
      report.verdicts[x] = rep;
      continue;
    }
    PointReport rep = is_smooth_at(g, x, smooth, witness_seed);
    report.verdicts[x] = rep;
    if (rep.verdict == Verdict::SMOOTH) smooth.insert(x);
  }

  for (const auto& [x, rep] : report.verdicts) {
    if (rep.verdict != Verdict::SINGULAR) continue;
    bool maximal = true;
    for (const CurveRecord& c : g.curves_at(x))
      if (c.up && !smooth.count(c.other)) maximal = false;
    if (!maximal) continue;
    report.maximal_singularities.insert(x);
    if (g.degree(x) == g.top_length()) {
      std::vector<CurveRecord> ups;
      for (const CurveRecord& c : g.curves_at(x))
        if (c.up) ups.push_back(c);
      CurveRecord wit = pick_witness(ups, witness_seed,
                                     static_cast<unsigned>(g.vertex_index(x)));
      report.multiplicities[x] =
          multiplicity_at(g, x, wit.gamma_pos, false, true);
    }
  }
  return report;
}

std::set<WeylElement> smooth_points(const SmoothnessReport& r) {
  std::set<WeylElement> out;
  for (const auto& [x, rep] : r.verdicts)
    if (rep.verdict == Verdict::SMOOTH) out.insert(x);
  return out;
}

std::string report_to_json(const BruhatGraph& g, const SmoothnessReport& r) {
  const RootSystem& rs = g.system();
  nlohmann::json j;
  j["schema"] = "schub-smoothness/1";
  j["system"] = family_name(rs.family()) + std::to_string(rs.rank());
  j["w"] = render_word(canonical_word(rs, r.w));
  auto verdicts = nlohmann::json::array();
  for (const WeylElement& x : g.vertices()) {
    const PointReport& rep = r.verdicts.at(x);
    nlohmann::json v;
    v["x"] = render_word(g.vertex_word(g.vertex_index(x)));
    v["verdict"] = rep.verdict == Verdict::SMOOTH ? "SMOOTH" : "SINGULAR";
    if (rep.verdict == Verdict::SINGULAR)
      v["failed"] = failed_condition_name(rep.failed);
    if (rep.witness) v["witness_gamma"] = render_root(rep.witness->gamma_pos);
    if (rep.offending_pair) {
      v["pair"] = {render_root(rep.offending_pair->mu),
                   render_root(rep.offending_pair->phi)};
      v["pair_gamma"] = render_root(rep.offending_pair->gamma);
    }
    verdicts.push_back(v);
  }
  j["verdicts"] = verdicts;
  auto maxsing = nlohmann::json::array();
  for (const WeylElement& x : r.maximal_singularities)
    maxsing.push_back(render_word(canonical_word(rs, x)));
  j["maximal_singularities"] = maxsing;
  auto mults = nlohmann::json::array();
  for (const auto& [x, m] : r.multiplicities)
    mults.push_back({{"x", render_word(canonical_word(rs, x))}, {"multiplicity", m}});
  j["multiplicities"] = mults;
  j["globally_smooth"] = r.globally_smooth();
  return j.dump(2);
}

}  // namespace schub
