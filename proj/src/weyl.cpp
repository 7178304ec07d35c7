#include "schub/weyl.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace schub {

WeylElement identity_element(int rank) {
  WeylElement x;
  x.rank = rank;
  x.m.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i) x.m[i * rank + i] = 1;
  return x;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  int n = rs.rank();
  if (i < 1 || i > n)
    throw std::invalid_argument("simple reflection index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(n));
  // r_i(alpha_j) = alpha_j - cartan(i,j) alpha_i
  WeylElement x = identity_element(n);
  for (int j = 0; j < n; ++j) x.m[(i - 1) * n + j] -= rs.cartan(i - 1, j);
  return x;
}

WeylElement reflection(const RootSystem& rs, const Root& g) {
  if (!rs.is_root(g)) throw std::invalid_argument("reflection: not a root");
  int n = rs.rank();
  WeylElement x;
  x.rank = n;
  x.m.assign(n * n, 0);
  for (int j = 0; j < n; ++j) {
    Root img = rs.reflect(g, rs.simple_roots()[j]);
    for (int i = 0; i < n; ++i) x.m[i * n + j] = img.c[i];
  }
  return x;
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& indices) {
  WeylElement x = identity_element(rs.rank());
  for (int i : indices) x = compose(x, simple_reflection(rs, i));
  return x;
}

Root apply(const WeylElement& x, const Root& g) {
  Root out(std::vector<int>(x.rank, 0));
  for (int i = 0; i < x.rank; ++i) {
    long long s = 0;
    for (int j = 0; j < x.rank; ++j) s += static_cast<long long>(x.m[i * x.rank + j]) * g.c[j];
    out.c[i] = static_cast<int>(s);
  }
  return out;
}

WeylElement compose(const WeylElement& x, const WeylElement& y) {
  int n = x.rank;
  WeylElement z;
  z.rank = n;
  z.m.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int a = x.m[i * n + k];
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) z.m[i * n + j] += a * y.m[k * n + j];
    }
  return z;
}

WeylElement inverse(const WeylElement& x) {
  int n = x.rank;
  // Gauss-Jordan over the rationals; the result is integral (det = +-1).
  std::vector<Rat> a(n * 2 * n, Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i * 2 * n + j] = Rat(x.m[i * n + j]);
    a[i * 2 * n + n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r * 2 * n + col] != Rat(0)) { piv = r; break; }
    if (piv < 0) throw std::logic_error("singular Weyl matrix");
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(a[piv * 2 * n + j], a[col * 2 * n + j]);
    Rat d = a[col * 2 * n + col];
    for (int j = 0; j < 2 * n; ++j) a[col * 2 * n + j] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = a[r * 2 * n + col];
      if (f == Rat(0)) continue;
      for (int j = 0; j < 2 * n; ++j) a[r * 2 * n + j] -= f * a[col * 2 * n + j];
    }
  }
  WeylElement inv;
  inv.rank = n;
  inv.m.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = a[i * 2 * n + n + j];
      if (v.denominator() != 1) throw std::logic_error("non-integral inverse");
      inv.m[i * n + j] = static_cast<int>(v.numerator());
    }
  return inv;
}

std::vector<Root> inversion_set(const RootSystem& rs, const WeylElement& x) {
  // {gamma > 0 : x^{-1}(gamma) < 0} = x(Phi^-) intersect Phi^+
  std::vector<Root> out;
  for (const Root& g : rs.positive_roots()) {
    Root img = apply(x, -g);
    if (rs.is_positive(img)) out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int length(const RootSystem& rs, const WeylElement& x) {
  int n = 0;
  for (const Root& g : rs.positive_roots())
    if (rs.is_positive(apply(x, -g))) ++n;
  return n;
}

std::vector<int> canonical_word(const RootSystem& rs, const WeylElement& x) {
  std::vector<int> word;
  WeylElement cur = x;
  int len = length(rs, cur);
  while (len > 0) {
    bool found = false;
    for (int i = 1; i <= rs.rank() && !found; ++i) {
      WeylElement next = compose(simple_reflection(rs, i), cur);
      int nl = length(rs, next);
      if (nl < len) {
        word.push_back(i);
        cur = next;
        len = nl;
        found = true;
      }
    }
    if (!found) throw std::logic_error("no descent on a non-identity element");
  }
  return word;
}

bool bruhat_leq(const RootSystem& rs, const WeylElement& x, const WeylElement& w) {
  if (x.rank != w.rank) throw std::invalid_argument("bruhat_leq: mismatched ranks");
  int lw = length(rs, w);
  int lx = length(rs, x);
  WeylElement cx = x, cw = w;
  while (true) {
    if (lx > lw) return false;
    if (lw == 0) return lx == 0;
    if (cx == cw) return true;
    // Left descent of w: smallest i with l(s_i w) < l(w).
    int desc = -1;
    WeylElement sw;
    for (int i = 1; i <= rs.rank(); ++i) {
      WeylElement cand = compose(simple_reflection(rs, i), cw);
      if (length(rs, cand) < lw) {
        desc = i;
        sw = cand;
        break;
      }
    }
    WeylElement sx = compose(simple_reflection(rs, desc), cx);
    int lsx = length(rs, sx);
    if (lsx < lx) {
      cx = sx;
      lx = lsx;
    }
    cw = sw;
    --lw;
  }
}

std::vector<WeylElement> enumerate_interval(const RootSystem& rs, const WeylElement& w) {
  std::vector<WeylElement> refl;
  for (const Root& g : rs.positive_roots()) refl.push_back(reflection(rs, g));

  std::set<WeylElement> seen{w};
  std::queue<std::pair<WeylElement, int>> work;
  work.push({w, length(rs, w)});
  while (!work.empty()) {
    auto [x, lx] = work.front();
    work.pop();
    for (const WeylElement& t : refl) {
      WeylElement y = compose(t, x);
      int ly = length(rs, y);
      if (ly < lx && seen.insert(y).second) work.push({y, ly});
    }
  }
  std::vector<WeylElement> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [&](const WeylElement& a, const WeylElement& b) {
    int la = length(rs, a), lb = length(rs, b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

}  // namespace schub
