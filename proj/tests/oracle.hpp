#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// library; the tests compare the two.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;

// Every sequence in [1, hi]^len, in lexicographic order.
inline void sequences(int len, int hi, const std::function<void(const Seq&)>& visit) {
  Seq s(static_cast<std::size_t>(len), 1);
  if (len == 0) {
    visit(s);
    return;
  }
  if (hi < 1) return;
  while (true) {
    visit(s);
    int i = len - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == hi) {
      s[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
  }
}

struct Run {
  bool ok = true;
  bool contained = true;
  Seq spot;                                    // 0 for cars that never parked
  std::vector<std::pair<int, int>> path;       // traverse interval per parked car
};

// Classical rule with an optional blocked range [blo, bhi] (empty when blo > bhi).
inline Run park_blocked(const Seq& prefs, int total, int blo = 1, int bhi = 0) {
  std::set<int> taken;
  for (int v = blo; v <= bhi; ++v) taken.insert(v);
  Run r;
  for (int a : prefs) {
    int v = a;
    while (v <= total && taken.count(v)) ++v;
    if (v > total) {
      r.ok = false;
      return r;
    }
    taken.insert(v);
    r.spot.push_back(v);
    r.path.emplace_back(a, v);
  }
  return r;
}

inline Run park_classical(const Seq& prefs, int n) { return park_blocked(prefs, n); }

inline Run park_naples(const Seq& prefs, int n, int k) {
  std::set<int> taken;
  Run r;
  for (int a : prefs) {
    if (!taken.count(a)) {
      taken.insert(a);
      r.spot.push_back(a);
      r.path.emplace_back(a, a);
      continue;
    }
    int found = 0;
    for (int step = 1; step <= k; ++step) {
      const int v = a - step;
      if (v < 1) {
        r.contained = false;
        break;
      }
      if (!taken.count(v)) {
        found = v;
        break;
      }
    }
    if (found) {
      taken.insert(found);
      r.spot.push_back(found);
      r.path.emplace_back(found, a);
      continue;
    }
    int v = a + 1;
    while (v <= n && taken.count(v)) ++v;
    if (v > n) {
      r.ok = false;
      r.contained = false;
      return r;
    }
    taken.insert(v);
    r.spot.push_back(v);
    r.path.emplace_back(std::max(1, a - k), v);
  }
  return r;
}

// Components by union-find over vertices: v and v + 1 are joined when one
// traverse path covers both. Singletons come from paths of length one.
inline std::vector<std::pair<int, int>> components(const std::vector<std::pair<int, int>>& paths,
                                                   int total) {
  std::vector<int> parent(static_cast<std::size_t>(total + 2));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x
               ? x
               : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  std::vector<bool> used(static_cast<std::size_t>(total + 2), false);
  for (auto [lo, hi] : paths) {
    for (int v = lo; v <= hi; ++v) used[static_cast<std::size_t>(v)] = true;
    for (int v = lo; v < hi; ++v) parent[static_cast<std::size_t>(find(v))] = find(v + 1);
  }
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v <= total; ++v) {
    if (!used[static_cast<std::size_t>(v)]) continue;
    if (!out.empty() && find(out.back().second) == find(v)) {
      out.back().second = v;
    } else {
      out.emplace_back(v, v);
    }
  }
  return out;
}

// Mirror each component of the classical outcome, keeping offsets.
inline Seq phi(const Seq& prefs, int n) {
  const auto run = park_classical(prefs, n);
  const auto comps = components(run.path, n);
  Seq out;
  for (int a : prefs) {
    for (auto [lo, hi] : comps) {
      if (lo <= a && a <= hi) out.push_back(n + 1 - hi + (a - lo));
    }
  }
  return out;
}

inline int ties(const Seq& s) {
  int t = 0;
  for (std::size_t i = 1; i < s.size(); ++i) t += s[i - 1] == s[i];
  return t;
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace oracle
