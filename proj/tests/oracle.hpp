#pragma once

// Brute-force reference implementations working on plain tables. Nothing
// here calls into the library except for converting results to Subset.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "effalg/effect_algebra.hpp"

namespace oracle {

using effalg::Element;

struct Table {
  std::vector<std::string> labels;
  int zero = 0;
  int one = 0;
  std::vector<int> sum;  // -1 = undefined

  int n() const { return static_cast<int>(labels.size()); }
  int at(int x, int y) const { return sum[x * n() + y]; }
};

// Example tables written out in full, both orientations.
inline Table e9() {
  Table t{{"0", "a", "b", "c", "d", "e", "f", "g", "1"}, 0, 8, std::vector<int>(81, -1)};
  auto set = [&](int x, int y, int z) { t.sum[x * 9 + y] = z; };
  // 0 a b c d e f g 1 -> 0..8
  const int rows[9][9] = {
      {0, 1, 2, 3, 4, 5, 6, 7, 8},        {1, -1, 5, 6, -1, -1, -1, 8, -1}, {2, 5, 4, 7, 6, -1, 8, -1, -1},
      {3, 6, 7, -1, -1, 8, -1, -1, -1},   {4, -1, 6, -1, 8, -1, -1, -1, -1}, {5, -1, -1, 8, -1, -1, -1, -1, -1},
      {6, -1, 8, -1, -1, -1, -1, -1, -1}, {7, 8, -1, -1, -1, -1, -1, -1, -1}, {8, -1, -1, -1, -1, -1, -1, -1, -1}};
  for (int x = 0; x < 9; ++x)
    for (int y = 0; y < 9; ++y) set(x, y, rows[x][y]);
  return t;
}

inline Table e6() {
  Table t{{"0", "a", "a'", "b", "b'", "1"}, 0, 5, std::vector<int>(36, -1)};
  for (int x = 0; x < 6; ++x) {
    t.sum[x] = x;
    t.sum[x * 6] = x;
  }
  auto pair = [&](int x, int y) { t.sum[x * 6 + y] = t.sum[y * 6 + x] = 5; };
  pair(1, 2);
  pair(3, 4);
  return t;
}

inline Table from(const effalg::EffectAlgebra& e) {
  Table t{e.labels(), static_cast<int>(e.zero()), static_cast<int>(e.one()), {}};
  for (Element x = 0; x < e.size(); ++x)
    for (Element y = 0; y < e.size(); ++y) {
      auto z = e.sum(x, y);
      t.sum.push_back(z ? static_cast<int>(*z) : -1);
    }
  return t;
}

inline effalg::PartialTable to_partial(const Table& t) {
  effalg::PartialTable p;
  p.labels = t.labels;
  p.zero = static_cast<Element>(t.zero);
  p.one = static_cast<Element>(t.one);
  for (int v : t.sum) p.sum.push_back(v < 0 ? std::nullopt : std::optional<Element>(static_cast<Element>(v)));
  return p;
}

inline bool leq(const Table& t, int x, int y) {
  for (int z = 0; z < t.n(); ++z)
    if (t.at(x, z) == y) return true;
  return false;
}

inline int comp(const Table& t, int x) {
  for (int u = 0; u < t.n(); ++u)
    if (t.at(x, u) == t.one) return u;
  return -1;
}

// Straight from the axioms, every quantifier spelled out.
inline bool is_effect_algebra(const Table& t) {
  const int n = t.n();
  if (t.zero == t.one && n > 1) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t.at(x, y) != t.at(y, x)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int xy = t.at(x, y), yz = t.at(y, z);
        const bool l = xy >= 0 && t.at(xy, z) >= 0;
        const bool r = yz >= 0 && t.at(x, yz) >= 0;
        if (r && !l) return false;
        if (r && t.at(xy, z) != t.at(x, yz)) return false;
      }
  for (int x = 0; x < n; ++x) {
    int c = 0;
    for (int u = 0; u < n; ++u) c += t.at(x, u) == t.one ? 1 : 0;
    if (c != 1) return false;
  }
  for (int x = 0; x < n; ++x)
    if (t.at(t.one, x) >= 0 && x != t.zero) return false;
  // the designated zero is 1' and neutral
  if (comp(t, t.one) != t.zero) return false;
  for (int x = 0; x < n; ++x)
    if (t.at(x, t.zero) != x) return false;
  return true;
}

inline std::vector<bool> lower(const Table& t, const std::vector<bool>& a) {
  std::vector<bool> out(t.n(), true);
  for (int x = 0; x < t.n(); ++x)
    for (int y = 0; y < t.n(); ++y)
      if (a[y] && !leq(t, x, y)) out[x] = false;
  return out;
}

inline std::vector<bool> upper(const Table& t, const std::vector<bool>& a) {
  std::vector<bool> out(t.n(), true);
  for (int x = 0; x < t.n(); ++x)
    for (int y = 0; y < t.n(); ++y)
      if (a[y] && !leq(t, y, x)) out[x] = false;
  return out;
}

inline std::vector<bool> set_of(const Table& t, std::initializer_list<int> xs) {
  std::vector<bool> s(t.n(), false);
  for (int x : xs) s[x] = true;
  return s;
}

// x -> y = { x' + w | w <= x, w <= y }
inline std::vector<bool> implies(const Table& t, int x, int y) {
  std::vector<bool> out(t.n(), false);
  const int xc = comp(t, x);
  for (int w = 0; w < t.n(); ++w)
    if (leq(t, w, x) && leq(t, w, y)) out[t.at(xc, w)] = true;
  return out;
}

inline std::uint64_t bits(const std::vector<bool>& s) {
  std::uint64_t b = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) b |= std::uint64_t{1} << i;
  return b;
}

inline effalg::Subset subset(const std::vector<bool>& s) { return effalg::Subset(s.size(), bits(s)); }

// Covering pairs by definition: x < y and no z strictly between.
inline std::vector<std::pair<Element, Element>> hasse(const Table& t) {
  std::vector<std::pair<Element, Element>> out;
  for (int x = 0; x < t.n(); ++x)
    for (int y = 0; y < t.n(); ++y) {
      if (x == y || !leq(t, x, y)) continue;
      bool cover = true;
      for (int z = 0; z < t.n(); ++z)
        if (z != x && z != y && leq(t, x, z) && leq(t, z, y)) cover = false;
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

// Greatest lower bound or -1.
inline int meet(const Table& t, int x, int y) {
  for (int m = 0; m < t.n(); ++m) {
    if (!leq(t, m, x) || !leq(t, m, y)) continue;
    bool greatest = true;
    for (int w = 0; w < t.n(); ++w)
      if (leq(t, w, x) && leq(t, w, y) && !leq(t, w, m)) greatest = false;
    if (greatest) return m;
  }
  return -1;
}

// Membership of 1 and Modus Ponens closure, by definition.
inline bool deductive(const Table& t, const std::vector<bool>& d) {
  if (!d[t.one]) return false;
  for (int x = 0; x < t.n(); ++x)
    for (int y = 0; y < t.n(); ++y) {
      if (!d[x] || d[y]) continue;
      auto imp = implies(t, x, y);
      bool inside = true;
      for (int w = 0; w < t.n(); ++w)
        if (imp[w] && !d[w]) inside = false;
      if (inside) return false;
    }
  return true;
}

// Applies sigma to indices; sigma fixes 0 and 1.
inline Table permuted(const Table& t, const std::vector<int>& sigma) {
  Table out{std::vector<std::string>(t.n()), sigma[t.zero], sigma[t.one], std::vector<int>(t.n() * t.n(), -1)};
  for (int x = 0; x < t.n(); ++x) out.labels[sigma[x]] = t.labels[x];
  for (int x = 0; x < t.n(); ++x)
    for (int y = 0; y < t.n(); ++y)
      if (t.at(x, y) >= 0) out.sum[sigma[x] * t.n() + sigma[y]] = sigma[t.at(x, y)];
  return out;
}

// Isomorphic by trying every permutation of the middle elements.
inline bool isomorphic(const Table& a, const Table& b) {
  if (a.n() != b.n()) return false;
  std::vector<int> mid;
  for (int x = 0; x < a.n(); ++x)
    if (x != a.zero && x != a.one) mid.push_back(x);
  std::vector<int> target;
  for (int x = 0; x < b.n(); ++x)
    if (x != b.zero && x != b.one) target.push_back(x);
  std::sort(target.begin(), target.end());
  do {
    std::vector<int> sigma(a.n());
    sigma[a.zero] = b.zero;
    sigma[a.one] = b.one;
    for (std::size_t i = 0; i < mid.size(); ++i) sigma[mid[i]] = target[i];
    bool ok = true;
    for (int x = 0; x < a.n() && ok; ++x)
      for (int y = 0; y < a.n() && ok; ++y) {
        const int u = a.at(x, y), v = b.at(sigma[x], sigma[y]);
        ok = (u < 0) == (v < 0) && (u < 0 || sigma[u] == v);
      }
    if (ok) return true;
  } while (std::next_permutation(target.begin(), target.end()));
  return false;
}

// Every table on {0..n-1} with 0 at index 0 and 1 at index n-1, filtered
// by the axioms. Each ordered cell independently ranges over undefined and
// all n values; with free_zero_row the zero row and column are free too.
inline std::vector<Table> all_effect_algebras(int n, bool free_zero_row) {
  std::vector<Table> out;
  std::vector<int> cells;
  const int lo = free_zero_row ? 0 : 1;
  for (int x = lo; x < n; ++x)
    for (int y = lo; y < n; ++y) cells.push_back(x * n + y);
  std::vector<int> value(cells.size(), -1);
  Table t{std::vector<std::string>(n), 0, n - 1, std::vector<int>(n * n, -1)};
  for (int x = 0; x < n; ++x) {
    t.labels[x] = std::to_string(x);
    t.sum[x] = t.sum[x * n] = x;
  }
  while (true) {
    for (std::size_t i = 0; i < cells.size(); ++i) t.sum[cells[i]] = value[i];
    if (is_effect_algebra(t)) out.push_back(t);
    std::size_t i = 0;
    while (i < cells.size() && value[i] == n - 1) value[i++] = -1;
    if (i == cells.size()) break;
    ++value[i];
  }
  return out;
}

}  // namespace oracle
