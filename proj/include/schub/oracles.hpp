#pragma once

#include <string>
#include <vector>

#include "schub/smoothness.hpp"

namespace schub {

// Carrell-Peterson edge-count criterion: true iff degree(y) = l(w) for
// every y in [x, w].
bool rationally_smooth_at(const BruhatGraph& g, const WeylElement& x);

// Type A bridge: s_i <-> the adjacent transposition (i, i+1); one-line
// notation, w(i) = perm[i-1].
std::vector<int> to_permutation(const RootSystem& rs, const WeylElement& x);
WeylElement from_permutation(const RootSystem& rs, const std::vector<int>& perm);

// True iff the permutation avoids the patterns 3412 and 4231.
bool pattern_smooth_typeA(const std::vector<int>& perm);

WeylElement longest_element(const RootSystem& rs);
std::vector<WeylElement> all_elements(const RootSystem& rs);

// Ground truth for weyl::bruhat_leq: reachability in the cover digraph.
bool bruhat_leq_bruteforce(const RootSystem& rs, const WeylElement& x,
                           const WeylElement& w);

// Precomputed cover-digraph reachability over all of W, for pair scans.
class BruhatOrderTable {
 public:
  explicit BruhatOrderTable(const RootSystem& rs);
  const std::vector<WeylElement>& elements() const { return elements_; }
  bool leq(const WeylElement& x, const WeylElement& w) const;

 private:
  std::vector<WeylElement> elements_;
  std::map<WeylElement, int> index_;
  std::vector<std::vector<bool>> leq_;
};

// Exact convex-hull membership in simple-root coordinates (Caratheodory
// subsets solved by rational Gaussian elimination).
bool in_convex_hull(const std::vector<Root>& points, const Root& p);

struct Discrepancy {
  std::string w;
  std::string x;
  std::string algorithm_verdict;
  std::string oracle_verdict;
  std::string context;
};

struct ScanResult {
  std::string system;
  int elements_scanned = 0;
  int singular_w = 0;
  std::vector<Discrepancy> discrepancies;
  double elapsed_seconds = 0.0;

  std::string to_json() const;
  std::string summary() const;
};

// For every w in W: run the singular-locus driver, compare against the
// rational-smoothness oracle (equality when simply laced, implication
// otherwise) and check the translate/theta/B2-pair invariants.
ScanResult exhaustive_verify(Family family, int rank, int jobs = 1);

}  // namespace schub
