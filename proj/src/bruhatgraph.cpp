#include "schub/bruhatgraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "schub/format.hpp"

namespace schub {

BruhatGraph::BruhatGraph(const RootSystem& rs, const WeylElement& w)
    : BruhatGraph(rs, w, enumerate_interval(rs, w)) {}

BruhatGraph::BruhatGraph(const RootSystem& rs, const WeylElement& w,
                         const std::vector<WeylElement>& interval)
    : rs_(&rs), w_(w), lw_(length(rs, w)) {
  // Deterministic vertex order: (length, canonical word lexicographic).
  std::vector<std::pair<std::vector<int>, WeylElement>> keyed;
  for (const WeylElement& x : interval) keyed.push_back({canonical_word(rs, x), x});
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (const auto& [word, x] : keyed) {
    index_[x] = static_cast<int>(verts_.size());
    verts_.push_back(x);
    words_.push_back(word);
    lengths_.push_back(static_cast<int>(word.size()));
  }

  incident_.resize(verts_.size());
  for (int i = 0; i < static_cast<int>(verts_.size()); ++i) {
    for (const Root& g : rs.positive_roots()) {
      WeylElement y = compose(reflection(rs, g), verts_[i]);
      auto it = index_.find(y);
      if (it == index_.end()) continue;
      int j = it->second;
      if (lengths_[j] <= lengths_[i]) continue;  // record each edge from its low end
      edges_.push_back({i, j, g});
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.gamma < b.gamma;
  });
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    incident_[edges_[e].lo].push_back(e);
    incident_[edges_[e].hi].push_back(e);
  }
}

int BruhatGraph::vertex_index(const WeylElement& x) const {
  auto it = index_.find(x);
  if (it == index_.end())
    throw std::invalid_argument("vertex not in the interval [e, w]");
  return it->second;
}

int BruhatGraph::degree(const WeylElement& x) const {
  return static_cast<int>(incident_[vertex_index(x)].size());
}

std::vector<CurveRecord> BruhatGraph::curves_at(const WeylElement& x) const {
  int i = vertex_index(x);
  std::vector<CurveRecord> out;
  for (int e : incident_[i]) {
    const Edge& edge = edges_[e];
    CurveRecord rec;
    rec.base = x;
    rec.up = (edge.lo == i);
    rec.other = verts_[rec.up ? edge.hi : edge.lo];
    rec.gamma_pos = edge.gamma;
    rec.tangent_weight = rec.up ? -edge.gamma : edge.gamma;
    rec.long_curve = rs_->is_long(edge.gamma);
    out.push_back(rec);
  }
  std::sort(out.begin(), out.end(), [](const CurveRecord& a, const CurveRecord& b) {
    return a.gamma_pos < b.gamma_pos;
  });
  return out;
}

std::string BruhatGraph::export_dot() const {
  std::ostringstream out;
  out << "graph bruhat {\n";
  for (size_t i = 0; i < verts_.size(); ++i)
    out << "  v" << i << " [label=\"" << render_word(words_[i]) << "\"];\n";
  for (const Edge& e : edges_)
    out << "  v" << e.lo << " -- v" << e.hi << " [label=\"" << render_root(e.gamma)
        << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string BruhatGraph::export_json() const {
  nlohmann::json j;
  j["schema"] = "schub-graph/1";
  j["system"] = family_name(rs_->family()) + std::to_string(rs_->rank());
  j["w"] = render_word(canonical_word(*rs_, w_));
  auto vs = nlohmann::json::array();
  for (size_t i = 0; i < verts_.size(); ++i)
    vs.push_back({{"word", render_word(words_[i])}, {"length", lengths_[i]}});
  j["vertices"] = vs;
  auto es = nlohmann::json::array();
  for (const Edge& e : edges_)
    es.push_back({{"from", e.lo}, {"to", e.hi}, {"gamma", e.gamma.c}});
  j["edges"] = es;
  return j.dump(2);
}

}  // namespace schub
