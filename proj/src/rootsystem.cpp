#include "schub/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace schub {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

Root Root::operator-() const {
  Root r(*this);
  for (int& v : r.c) v = -v;
  return r;
}

Root Root::operator+(const Root& o) const {
  Root r(*this);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r(*this);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

Root Root::scaled(int k) const {
  Root r(*this);
  for (int& v : r.c) v *= k;
  return r;
}

bool Root::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
}

namespace {

struct FamilyData {
  std::vector<std::pair<int, int>> edges;   // Dynkin diagram, 1-based nodes
  std::vector<int> sq_len;                  // squared lengths of simple roots
};

// Bourbaki numbering throughout, except B2 where s1 is the short simple
// root and s2 the long one (matching the C2 presentation of the same
// system; see README).
FamilyData family_data(Family family, int rank) {
  FamilyData d;
  auto chain = [&](int n) {
    for (int i = 1; i < n; ++i) d.edges.push_back({i, i + 1});
  };
  switch (family) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
      chain(rank);
      d.sq_len.assign(rank, 2);
      break;
    case Family::B:
      if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
      chain(rank);
      if (rank == 2) {
        d.sq_len = {1, 2};  // s1 short, s2 long
      } else {
        d.sq_len.assign(rank, 2);
        d.sq_len[rank - 1] = 1;
      }
      break;
    case Family::C:
      if (rank < 2) throw std::invalid_argument("type C requires rank >= 2");
      chain(rank);
      d.sq_len.assign(rank, 1);
      d.sq_len[rank - 1] = 2;
      break;
    case Family::D:
      if (rank < 3) throw std::invalid_argument("type D requires rank >= 3");
      chain(rank - 1);
      d.edges.push_back({rank - 2, rank});
      d.sq_len.assign(rank, 2);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      int n = family == Family::E6 ? 6 : family == Family::E7 ? 7 : 8;
      if (rank != n)
        throw std::invalid_argument("type " + family_name(family) +
                                    " requires rank " + std::to_string(n));
      d.edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
      for (int i = 5; i < n; ++i) d.edges.push_back({i, i + 1});
      d.sq_len.assign(n, 2);
      break;
    }
    case Family::F4:
      if (rank != 4) throw std::invalid_argument("type F4 requires rank 4");
      chain(4);
      d.sq_len = {2, 2, 1, 1};
      break;
    case Family::G2:
      if (rank != 2) throw std::invalid_argument("type G2 requires rank 2");
      chain(2);
      d.sq_len = {1, 3};  // s1 = alpha short, s2 = beta long
      break;
  }
  return d;
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  static const int kMaxRank = [] {
    if (const char* env = std::getenv("SCHUB_MAX_RANK")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 8;
  }();
  if (rank > kMaxRank)
    throw std::invalid_argument("rank " + std::to_string(rank) +
                                " exceeds bound " + std::to_string(kMaxRank) +
                                " (set SCHUB_MAX_RANK to raise)");
  FamilyData fd = family_data(family, rank);

  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;

  // Form: diagonal = squared lengths, edge entries = -max(len_i, len_j)/2.
  rs.form_.assign(rank * rank, Rat(0));
  for (int i = 0; i < rank; ++i) rs.form_[i * rank + i] = Rat(fd.sq_len[i]);
  for (auto [a, b] : fd.edges) {
    int i = a - 1, j = b - 1;
    Rat v(-std::max(fd.sq_len[i], fd.sq_len[j]), 2);
    rs.form_[i * rank + j] = v;
    rs.form_[j * rank + i] = v;
  }

  rs.cartan_.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat v = Rat(2) * rs.form_[i * rank + j] / rs.form_[i * rank + i];
      if (v.denominator() != 1)
        throw std::logic_error("non-integral Cartan entry");
      rs.cartan_[i * rank + j] = static_cast<int>(v.numerator());
    }

  for (int i = 0; i < rank; ++i) {
    Root a(std::vector<int>(rank, 0));
    a.c[i] = 1;
    rs.simple_.push_back(a);
  }

  // Close the simple roots under simple reflections.
  std::set<Root> closed(rs.simple_.begin(), rs.simple_.end());
  std::queue<Root> work;
  for (const Root& a : rs.simple_) work.push(a);
  while (!work.empty()) {
    Root v = work.front();
    work.pop();
    for (int i = 0; i < rank; ++i) {
      int p = 0;
      for (int j = 0; j < rank; ++j) p += rs.cartan_[i * rank + j] * v.c[j];
      Root r = v;
      r.c[i] -= p;
      if (closed.insert(r).second) work.push(r);
    }
  }
  rs.roots_.assign(closed.begin(), closed.end());
  rs.root_set_ = std::move(closed);
  for (const Root& a : rs.roots_)
    if (rs.is_positive(a)) rs.positive_.push_back(a);
  if (2 * rs.positive_.size() != rs.roots_.size())
    throw std::logic_error("positive/negative partition failed");

  std::set<Rat> lengths;
  for (const Root& a : rs.roots_) lengths.insert(rs.inner(a, a));
  rs.length_classes_ = static_cast<int>(lengths.size());
  if (rs.length_classes_ > 2) throw std::logic_error("more than two root lengths");
  rs.short_len_ = *lengths.begin();
  rs.long_len_ = *lengths.rbegin();
  return rs;
}

bool RootSystem::is_root(const Root& a) const {
  return a.rank() == rank_ && root_set_.count(a) > 0;
}

bool RootSystem::is_positive(const Root& a) const {
  bool pos = false, neg = false;
  for (int v : a.c) {
    if (v > 0) pos = true;
    if (v < 0) neg = true;
  }
  if (pos == neg) throw std::invalid_argument("mixed-sign coordinate vector is not a root");
  return pos;
}

Rat RootSystem::inner(const Root& a, const Root& b) const {
  Rat s(0);
  for (int i = 0; i < rank_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      if (b.c[j] != 0) s += Rat(a.c[i]) * form_[i * rank_ + j] * Rat(b.c[j]);
  }
  return s;
}

int RootSystem::pairing(const Root& b, const Root& a) const {
  Rat v = Rat(2) * inner(b, a) / inner(a, a);
  if (v.denominator() != 1) throw std::logic_error("non-integral pairing");
  return static_cast<int>(v.numerator());
}

Root RootSystem::reflect(const Root& a, const Root& b) const {
  return b - a.scaled(pairing(b, a));
}

bool RootSystem::is_long(const Root& a) const {
  // Single length class: every root counts as long.
  if (length_classes_ == 1) return true;
  return inner(a, a) == long_len_;
}

std::optional<B2Basis> RootSystem::b2_subsystem(const Root& mu, const Root& phi) const {
  if (!is_root(mu) || !is_root(phi))
    throw std::invalid_argument("b2_subsystem: inputs must be roots");

  // Check linear independence and collect Phi intersect span{mu, phi} by
  // solving s*mu + t*phi = rho exactly.
  int r0 = -1, r1 = -1;
  for (int i = 0; i < rank_ && r1 < 0; ++i) {
    if (r0 < 0) {
      if (mu.c[i] != 0 || phi.c[i] != 0) r0 = i;
    } else {
      long long det = static_cast<long long>(mu.c[r0]) * phi.c[i] -
                      static_cast<long long>(mu.c[i]) * phi.c[r0];
      if (det != 0) r1 = i;
    }
  }
  if (r1 < 0) throw std::invalid_argument("b2_subsystem: proportional inputs");
  Rat det = Rat(mu.c[r0]) * Rat(phi.c[r1]) - Rat(mu.c[r1]) * Rat(phi.c[r0]);

  std::vector<Root> sub;
  for (const Root& rho : roots_) {
    Rat s = (Rat(rho.c[r0]) * Rat(phi.c[r1]) - Rat(rho.c[r1]) * Rat(phi.c[r0])) / det;
    Rat t = (Rat(mu.c[r0]) * Rat(rho.c[r1]) - Rat(mu.c[r1]) * Rat(rho.c[r0])) / det;
    bool in_span = true;
    for (int i = 0; i < rank_ && in_span; ++i)
      in_span = (s * Rat(mu.c[i]) + t * Rat(phi.c[i])) == Rat(rho.c[i]);
    if (in_span) sub.push_back(rho);
  }

  if (sub.size() != 8) return std::nullopt;
  std::set<Rat> lens;
  for (const Root& rho : sub) lens.insert(inner(rho, rho));
  if (lens.size() != 2) return std::nullopt;

  std::vector<Root> pos;
  for (const Root& rho : sub)
    if (is_positive(rho)) pos.push_back(rho);
  // Basis = positive elements not expressible as a sum of two positives.
  B2Basis basis;
  int found = 0;
  for (const Root& rho : pos) {
    bool sum = false;
    for (const Root& a : pos)
      for (const Root& b : pos)
        if (a + b == rho) sum = true;
    if (!sum) {
      ++found;
      if (inner(rho, rho) == *lens.begin())
        basis.short_simple = rho;
      else
        basis.long_simple = rho;
    }
  }
  if (found != 2 || basis.short_simple.c.empty() || basis.long_simple.c.empty())
    return std::nullopt;
  return basis;
}

std::string RootSystem::to_json() const {
  nlohmann::json j;
  j["schema"] = "schub-rootsystem/1";
  j["family"] = family_name(family_);
  j["rank"] = rank_;
  auto cart = nlohmann::json::array();
  for (int i = 0; i < rank_; ++i) {
    auto row = nlohmann::json::array();
    for (int jj = 0; jj < rank_; ++jj) row.push_back(cartan_[i * rank_ + jj]);
    cart.push_back(row);
  }
  j["cartan"] = cart;
  auto roots = nlohmann::json::array();
  for (const Root& a : roots_) roots.push_back(a.c);
  j["roots"] = roots;
  return j.dump(2);
}

}  // namespace schub
