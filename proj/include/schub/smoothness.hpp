#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schub/tangent.hpp"

namespace schub {

enum class Verdict { SMOOTH, SINGULAR };

enum class FailedCondition { NONE, DEGREE, ISOTROPY, B2PAIR, PROPAGATED };

std::string failed_condition_name(FailedCondition c);

struct PointReport {
  Verdict verdict = Verdict::SMOOTH;
  FailedCondition failed = FailedCondition::NONE;
  // For smooth points: the witnessing good curve (absent at x = w).
  std::optional<CurveRecord> witness;
  // For b2pair failures: the offending pair.
  std::optional<B2Pair> offending_pair;
};

struct SmoothnessReport {
  WeylElement w;
  std::map<WeylElement, PointReport> verdicts;
  std::set<WeylElement> maximal_singularities;
  // Only for maximal singularities with |E(X, x)| = l(w).
  std::map<WeylElement, long long> multiplicities;

  bool globally_smooth() const { return maximal_singularities.empty(); }
};

// Per-point test (the three root-theoretic conditions). known_smooth must
// contain only certified smooth points; an UP neighbor of x must be among
// them (the good-curve witness) unless x = w.
PointReport is_smooth_at(const BruhatGraph& g, const WeylElement& x,
                         const std::set<WeylElement>& known_smooth,
                         unsigned witness_seed = 0);

// The non-recursive driver: classifies every point of [e, w] in decreasing
// length order. witness_seed randomizes the choice among equally valid
// good-curve witnesses; verdicts do not depend on it.
SmoothnessReport singular_locus(const BruhatGraph& g, unsigned witness_seed = 0);

std::set<WeylElement> smooth_points(const SmoothnessReport& r);

std::string report_to_json(const BruhatGraph& g, const SmoothnessReport& r);

}  // namespace schub
