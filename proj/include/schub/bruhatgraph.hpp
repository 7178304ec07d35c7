#pragma once

#include <map>
#include <string>
#include <vector>

#include "schub/weyl.hpp"

namespace schub {

// One T-curve at a fixed point. The tangent weight at `base` is the element
// of {gamma, -gamma} sent negative by base^{-1}; it is -gamma exactly on the
// UP side (curve written U_{-gamma} base with r_gamma base > base).
struct CurveRecord {
  WeylElement base;
  WeylElement other;
  Root gamma_pos;
  Root tangent_weight;
  bool up = false;
  bool long_curve = false;
};

// The Bruhat graph of [e, w]: edges join x and r_gamma x when both lie in
// the interval. Immutable after build; queries are read-only.
class BruhatGraph {
 public:
  BruhatGraph(const RootSystem& rs, const WeylElement& w);
  // Same, but with the interval [e, w] already enumerated (e.g. from a cache).
  BruhatGraph(const RootSystem& rs, const WeylElement& w,
              const std::vector<WeylElement>& interval);

  const RootSystem& system() const { return *rs_; }
  const WeylElement& top() const { return w_; }
  int top_length() const { return lw_; }

  const std::vector<WeylElement>& vertices() const { return verts_; }
  bool contains(const WeylElement& x) const { return index_.count(x) > 0; }
  int vertex_index(const WeylElement& x) const;
  int vertex_length(const WeylElement& x) const { return lengths_[vertex_index(x)]; }
  const std::vector<int>& vertex_word(int i) const { return words_[i]; }

  int degree(const WeylElement& x) const;
  std::vector<CurveRecord> curves_at(const WeylElement& x) const;

  std::string export_dot() const;
  std::string export_json() const;

 private:
  struct Edge {
    int lo, hi;  // vertex indices, length(lo) < length(hi)
    Root gamma;
  };

  const RootSystem* rs_;
  WeylElement w_;
  int lw_;
  std::vector<WeylElement> verts_;
  std::map<WeylElement, int> index_;
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

}  // namespace schub
