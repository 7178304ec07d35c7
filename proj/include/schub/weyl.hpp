#pragma once

#include <vector>

#include "schub/rootsystem.hpp"

namespace schub {

// An element of the Weyl group, represented by the integer matrix of its
// action on simple-root coordinates (column j = image of the j-th simple
// root). Canonical: two words give equal elements iff the matrices match.
struct WeylElement {
  int rank = 0;
  std::vector<int> m;  // row-major rank x rank

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.m == b.m;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) {
    return !(a == b);
  }
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return a.m < b.m;
  }
};

WeylElement identity_element(int rank);
WeylElement simple_reflection(const RootSystem& rs, int i);  // 1-based
WeylElement reflection(const RootSystem& rs, const Root& g);
WeylElement from_word(const RootSystem& rs, const std::vector<int>& indices);

Root apply(const WeylElement& x, const Root& g);
WeylElement compose(const WeylElement& x, const WeylElement& y);  // x then y applied: (xy)(v) = x(y(v))
WeylElement inverse(const WeylElement& x);

// {gamma > 0 : x^{-1}(gamma) < 0}; length is its cardinality.
std::vector<Root> inversion_set(const RootSystem& rs, const WeylElement& x);
int length(const RootSystem& rs, const WeylElement& x);

// Lexicographically least reduced word (leftmost descent at each step).
std::vector<int> canonical_word(const RootSystem& rs, const WeylElement& x);

// Bruhat-Chevalley order via the left descent recursion.
bool bruhat_leq(const RootSystem& rs, const WeylElement& x, const WeylElement& w);

// The full interval [e, w], sorted by (length, matrix).
std::vector<WeylElement> enumerate_interval(const RootSystem& rs, const WeylElement& w);

}  // namespace schub
