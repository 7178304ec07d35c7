#include "schub/oracles.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>
#include <stdexcept>

#include "json.hpp"

#include "schub/format.hpp"

namespace schub {

bool rationally_smooth_at(const BruhatGraph& g, const WeylElement& x) {
  g.vertex_index(x);
  const RootSystem& rs = g.system();
  for (const WeylElement& y : g.vertices()) {
    if (!bruhat_leq(rs, x, y)) continue;
    if (g.degree(y) != g.top_length()) return false;
  }
  return true;
}

std::vector<int> to_permutation(const RootSystem& rs, const WeylElement& x) {
  if (rs.family() != Family::A)
    throw std::invalid_argument("permutation bridge needs a type A system");
  int n = rs.rank() + 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (int idx : canonical_word(rs, x)) {
    // right-to-left application: w = s_{i1} ... s_{ik}, (uv)(i) = u(v(i))
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      int j = i;
      if (i == idx - 1) j = idx;
      else if (i == idx) j = idx - 1;
      next[i] = perm[j];
    }
    std::swap(perm, next);
  }
  return perm;
}

WeylElement from_permutation(const RootSystem& rs, const std::vector<int>& perm) {
  if (rs.family() != Family::A)
    throw std::invalid_argument("permutation bridge needs a type A system");
  int n = rs.rank() + 1;
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation length must be rank + 1");
  std::vector<int> p = perm;
  std::vector<int> suffix;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);  // p = p * s_{i+1}
        suffix.push_back(i + 1);
        moved = true;
        break;
      }
    }
  }
  std::reverse(suffix.begin(), suffix.end());
  return from_word(rs, suffix);
}

bool pattern_smooth_typeA(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  auto matches = [&](int a, int b, int c, int d, const std::array<int, 4>& pat) {
    std::array<int, 4> v{perm[a], perm[b], perm[c], perm[d]};
    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int i, int j) { return v[i] < v[j]; });
    std::array<int, 4> rank{};
    for (int r = 0; r < 4; ++r) rank[order[r]] = r + 1;
    return std::equal(rank.begin(), rank.end(), pat.begin());
  };
  static const std::array<int, 4> kP3412{3, 4, 1, 2};
  static const std::array<int, 4> kP4231{4, 2, 3, 1};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (matches(a, b, c, d, kP3412) || matches(a, b, c, d, kP4231))
            return false;
  return true;
}

WeylElement longest_element(const RootSystem& rs) {
  WeylElement x = identity_element(rs.rank());
  int len = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= rs.rank(); ++i) {
      WeylElement next = compose(simple_reflection(rs, i), x);
      int nl = length(rs, next);
      if (nl > len) {
        x = next;
        len = nl;
        moved = true;
        break;
      }
    }
  }
  return x;
}

std::vector<WeylElement> all_elements(const RootSystem& rs) {
  return enumerate_interval(rs, longest_element(rs));
}

bool bruhat_leq_bruteforce(const RootSystem& rs, const WeylElement& x,
                           const WeylElement& w) {
  // Upward BFS through covers (length jump exactly one) from x.
  int lw = length(rs, w);
  std::set<WeylElement> seen{x};
  std::vector<WeylElement> frontier{x};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& z : frontier) {
      if (z == w) return true;
      int lz = length(rs, z);
      if (lz >= lw) continue;
      for (const Root& g : rs.positive_roots()) {
        WeylElement y = compose(reflection(rs, g), z);
        if (length(rs, y) != lz + 1) continue;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return false;
}

BruhatOrderTable::BruhatOrderTable(const RootSystem& rs) {
  elements_ = all_elements(rs);  // sorted by (length, matrix)
  int n = static_cast<int>(elements_.size());
  for (int i = 0; i < n; ++i) index_[elements_[i]] = i;
  std::vector<int> len(n);
  for (int i = 0; i < n; ++i) len[i] = length(rs, elements_[i]);

  std::vector<std::vector<int>> covers_up(n);
  for (int i = 0; i < n; ++i)
    for (const Root& g : rs.positive_roots()) {
      WeylElement y = compose(reflection(rs, g), elements_[i]);
      auto it = index_.find(y);
      if (it != index_.end() && len[it->second] == len[i] + 1)
        covers_up[i].push_back(it->second);
    }

  leq_.assign(n, std::vector<bool>(n, false));
  // Process from the top down: reach(i) = {i} union reach of upper covers.
  for (int i = n - 1; i >= 0; --i) {
    leq_[i][i] = true;
    for (int j : covers_up[i])
      for (int k = 0; k < n; ++k)
        if (leq_[j][k]) leq_[i][k] = true;
  }
}

bool BruhatOrderTable::leq(const WeylElement& x, const WeylElement& w) const {
  return leq_.at(index_.at(x)).at(index_.at(w));
}

bool in_convex_hull(const std::vector<Root>& points, const Root& p) {
  int d = p.rank();
  int rows = d + 1;
  int npts = static_cast<int>(points.size());
  int max_k = std::min(npts, d + 1);

  std::vector<int> idx;
  auto try_subset = [&](const std::vector<int>& sub) {
    int k = static_cast<int>(sub.size());
    // Solve sum lambda_c * points[sub[c]] = p with sum lambda = 1, exactly.
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(k + 1, Rat(0)));
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < k; ++c) a[r][c] = Rat(points[sub[c]].c[r]);
      a[r][k] = Rat(p.c[r]);
    }
    for (int c = 0; c < k; ++c) a[d][c] = Rat(1);
    a[d][k] = Rat(1);

    std::vector<int> pivot_row(k, -1);
    int row = 0;
    for (int col = 0; col < k && row < rows; ++col) {
      int pr = -1;
      for (int r = row; r < rows; ++r)
        if (a[r][col] != Rat(0)) { pr = r; break; }
      if (pr < 0) continue;
      std::swap(a[pr], a[row]);
      Rat dv = a[row][col];
      for (int c2 = col; c2 <= k; ++c2) a[row][c2] /= dv;
      for (int r = 0; r < rows; ++r) {
        if (r == row || a[r][col] == Rat(0)) continue;
        Rat f = a[r][col];
        for (int c2 = col; c2 <= k; ++c2) a[r][c2] -= f * a[row][c2];
      }
      pivot_row[col] = row;
      ++row;
    }
    for (int c = 0; c < k; ++c)
      if (pivot_row[c] < 0) return false;  // affinely dependent subset; skip
    for (int r = row; r < rows; ++r)
      if (a[r][k] != Rat(0)) return false;  // inconsistent
    for (int c = 0; c < k; ++c)
      if (a[pivot_row[c]][k] < Rat(0)) return false;
    return true;
  };

  // Caratheodory: a hull member lies in the hull of some affinely
  // independent subset of size <= d + 1.
  std::vector<int> sub;
  std::function<bool(int, int)> rec = [&](int start, int need) {
    if (need == 0) return try_subset(sub);
    for (int i = start; i <= npts - need; ++i) {
      sub.push_back(i);
      if (rec(i + 1, need - 1)) return true;
      sub.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= max_k; ++k) {
    sub.clear();
    if (rec(0, k)) return true;
  }
  return false;
}

std::string ScanResult::to_json() const {
  nlohmann::json j;
  j["schema"] = "schub-scan/1";
  j["system"] = system;
  j["elements_scanned"] = elements_scanned;
  j["singular_w"] = singular_w;
  j["elapsed_seconds"] = elapsed_seconds;
  auto ds = nlohmann::json::array();
  for (const Discrepancy& d : discrepancies)
    ds.push_back({{"w", d.w},
                  {"x", d.x},
                  {"algorithm", d.algorithm_verdict},
                  {"oracle", d.oracle_verdict},
                  {"context", d.context}});
  j["discrepancies"] = ds;
  return j.dump(2);
}

std::string ScanResult::summary() const {
  std::ostringstream out;
  out << "system " << system << ": " << elements_scanned << " elements, "
      << singular_w << " singular Schubert varieties, " << discrepancies.size()
      << " discrepancies, " << elapsed_seconds << " s";
  return out.str();
}

namespace {

void check_invariants(const BruhatGraph& g, const SmoothnessReport& report,
                      const std::string& w_word, ScanResult& result) {
  const RootSystem& rs = g.system();
  auto flag = [&](const WeylElement& x, const std::string& alg,
                  const std::string& oracle, const std::string& ctx) {
    result.discrepancies.push_back(
        {w_word, render_word(canonical_word(rs, x)), alg, oracle, ctx});
  };

  std::set<WeylElement> smooth = smooth_points(report);

  for (const WeylElement& x : g.vertices()) {
    bool x_smooth = smooth.count(x) > 0;
    bool x_maximal = report.maximal_singularities.count(x) > 0;

    WeightModule te = te_module(g, x);
    WeightModule full = full_tangent_weights(rs, x);

    // Full-string and one-step isotropy closures must coincide.
    WeightModule iso = isotropy_closure(rs, x, te);
    WeightModule iso1 = isotropy_closure_one_step(rs, x, te);
    if (iso.weights != iso1.weights)
      flag(x, "full-string closure", "one-step closure", "isotropy closure mismatch");

    // Per-curve translate invariants along good UP curves.
    for (const CurveRecord& c : g.curves_at(x)) {
      if (!c.up || !smooth.count(c.other)) continue;
      WeightModule tau = peterson_translate(g, x, c.gamma_pos, true);
      if (tau.size() != g.top_length())
        flag(x, std::to_string(tau.size()), std::to_string(g.top_length()),
             "translate size != l(w), mu=" + render_root(c.gamma_pos));
      for (const Root& t : tau.weights)
        if (!full.contains(t))
          flag(x, render_root(t), "in T_x(G/B)", "translate weight outside T_x(G/B)");
      if (!c.long_curve)
        for (const Root& t : tau.weights)
          if (!te.contains(t))
            flag(x, render_root(t), "in TE", "short-curve translate not inside TE");
      for (const Root& t : tau.weights) {
        Root up = t + c.gamma_pos;
        if (rs.is_root(up) && full.contains(up) && !tau.contains(up))
          flag(x, render_root(up), "in translate", "g_mu-submodule property violated");
      }
      // Structure of translate weights outside TE.
      for (const Root& t : tau.weights) {
        if (te.contains(t)) continue;
        bool neg = !rs.is_positive(t);
        bool sh = rs.is_short(t);
        bool inner_neg = rs.inner(t, c.gamma_pos) < Rat(0);
        Root phi = -(t + t + c.gamma_pos);
        bool phi_pos = rs.is_root(phi) && rs.is_positive(phi);
        if (!(neg && sh && inner_neg && phi_pos))
          flag(x, render_root(t), "short/negative/(.,mu)<0/phi>0",
               "translate weight structure, mu=" + render_root(c.gamma_pos));
      }
    }

    if (!(x_smooth || x_maximal)) continue;

    ThetaResult theta = theta_span(g, x, true);
    std::vector<Root> te_list(te.weights.begin(), te.weights.end());
    std::vector<B2Pair> pairs = b2_pairs(g, x);

    for (const Root& t : theta.weights.weights) {
      if (rs.is_long(t) && !te.contains(t))
        flag(x, render_root(t), "in TE", "long theta weight outside TE");
      if (rs.is_short(t)) {
        bool avg = false;
        for (const Root& a : te_list) {
          Root b = t + t - a;  // omega = (a + b)/2
          if (te.contains(b)) { avg = true; break; }
        }
        if (!avg)
          flag(x, render_root(t), "average of TE weights",
               "short theta weight is not (a+b)/2 over TE");
      }
      if (!in_convex_hull(te_list, t))
        flag(x, render_root(t), "in hull(TE)", "theta weight outside convex hull");
    }

    if (x_maximal) {
      for (const Root& t : theta.weights.weights) {
        if (iso.contains(t)) continue;
        bool from_pair = false;
        for (const B2Pair& pr : pairs)
          if (pr.gamma == t) { from_pair = true; break; }
        if (!from_pair)
          flag(x, render_root(t), "B2-pair weight",
               "theta weight outside isotropy module with no B2-pair");
      }
    }

    // Converse: every pair weight shows up in the translates along both of
    // its curves.
    for (const B2Pair& pr : pairs) {
      for (const Root& mu : {pr.mu, pr.phi}) {
        WeylElement y = compose(reflection(rs, mu), x);
        if (!smooth.count(y)) continue;
        WeightModule tau = peterson_translate(g, x, mu, true);
        if (!tau.contains(pr.gamma))
          flag(x, render_root(pr.gamma), "in translate",
               "B2-pair weight missing from translate, mu=" + render_root(mu));
      }
    }
  }

  // SINGULAR downward closed, checked along cover edges from the smooth side.
  for (const WeylElement& x : g.vertices()) {
    if (!smooth.count(x)) continue;
    for (const CurveRecord& c : g.curves_at(x))
      if (c.up && !smooth.count(c.other))
        flag(x, "SMOOTH", "SINGULAR above",
             "singular point above a smooth one (closure violated)");
  }
}

}  // namespace

ScanResult exhaustive_verify(Family family, int rank, int jobs) {
  RootSystem rs = RootSystem::build(family, rank);
  if (rs.is_g2())
    throw std::invalid_argument("exhaustive_verify is not available in G2");

  ScanResult result;
  result.system = family_name(family) + std::to_string(rank);
  auto t0 = std::chrono::steady_clock::now();

  std::vector<WeylElement> elements = all_elements(rs);
  int n = static_cast<int>(elements.size());
  result.elements_scanned = n;

  std::vector<ScanResult> per_w(n);
  std::vector<char> singular(n, 0);
  auto scan_one = [&](int i) {
    const WeylElement& w = elements[i];
    BruhatGraph g(rs, w);
    SmoothnessReport report = singular_locus(g);
    std::string w_word = render_word(canonical_word(rs, w));
    singular[i] = report.globally_smooth() ? 0 : 1;

    std::set<WeylElement> smooth = smooth_points(report);
    for (const WeylElement& x : g.vertices()) {
      bool alg = smooth.count(x) > 0;
      bool oracle = rationally_smooth_at(g, x);
      if (rs.simply_laced()) {
        if (alg != oracle)
          per_w[i].discrepancies.push_back(
              {w_word, render_word(canonical_word(rs, x)),
               alg ? "SMOOTH" : "SINGULAR",
               oracle ? "rationally smooth" : "not rationally smooth",
               "simply-laced equivalence"});
      } else if (alg && !oracle) {
        per_w[i].discrepancies.push_back(
            {w_word, render_word(canonical_word(rs, x)), "SMOOTH",
             "not rationally smooth", "smooth must imply rationally smooth"});
      }
    }
    check_invariants(g, report, w_word, per_w[i]);
  };

  if (jobs <= 1) {
    for (int i = 0; i < n; ++i) scan_one(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) scan_one(i);
      });
    for (auto& th : pool) th.join();
  }

  // Deterministic merge in element order, independent of scheduling.
  for (int i = 0; i < n; ++i) {
    result.singular_w += singular[i];
    for (auto& d : per_w[i].discrepancies)
      result.discrepancies.push_back(std::move(d));
  }

  auto t1 = std::chrono::steady_clock::now();
  result.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
  return result;
}

}  // namespace schub
