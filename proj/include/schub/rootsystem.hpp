#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace schub {

using Rat = boost::rational<long long>;

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

std::string family_name(Family f);

// A root, written in coordinates over the simple roots.
struct Root {
  std::vector<int> c;

  Root() = default;
  explicit Root(std::vector<int> coords) : c(std::move(coords)) {}

  int rank() const { return static_cast<int>(c.size()); }
  Root operator-() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  Root scaled(int k) const;
  bool is_zero() const;

  friend bool operator==(const Root& a, const Root& b) { return a.c == b.c; }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  friend bool operator<(const Root& a, const Root& b) { return a.c < b.c; }
};

// The unique positive basis of a B2 subsystem: alpha short, beta long.
struct B2Basis {
  Root short_simple;  // alpha
  Root long_simple;   // beta
};

// A finite crystallographic root system with the W-invariant form,
// short-root squared length normalized to 1 (in the two-length families).
// Immutable after construction.
class RootSystem {
 public:
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool is_g2() const { return family_ == Family::G2; }
  bool simply_laced() const { return length_classes_ == 1; }

  const std::vector<Root>& simple_roots() const { return simple_; }
  const std::vector<Root>& all_roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  // cartan(i,j) = <alpha_j, alpha_i^vee>, 0-based.
  int cartan(int i, int j) const { return cartan_[i * rank_ + j]; }

  bool is_root(const Root& a) const;
  bool is_positive(const Root& a) const;

  Rat inner(const Root& a, const Root& b) const;
  // <b, a^vee> = 2(b,a)/(a,a); always an integer for roots.
  int pairing(const Root& b, const Root& a) const;
  Root reflect(const Root& a, const Root& b) const;  // r_a(b)

  bool is_long(const Root& a) const;
  bool is_short(const Root& a) const { return !is_long(a); }

  // Phi' = Phi intersected with the rational span of {mu, phi}; returns the
  // positive basis when Phi' has type B2, absent otherwise.
  std::optional<B2Basis> b2_subsystem(const Root& mu, const Root& phi) const;

  std::string to_json() const;

 private:
  RootSystem() = default;

  Family family_;
  int rank_ = 0;
  std::vector<Root> simple_;
  std::vector<Root> roots_;      // sorted
  std::vector<Root> positive_;   // sorted
  std::set<Root> root_set_;
  std::vector<int> cartan_;      // row-major
  std::vector<Rat> form_;        // row-major, symmetric
  int length_classes_ = 1;
  Rat short_len_, long_len_;     // squared lengths
};

}  // namespace schub
