#pragma once

// Reference implementations for the toric modules, written from the
// definitions rather than from the library's shortcuts.

#include "oracles.hpp"
#include "toric/fan.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using toric::Cone;
using toric::Fan;

inline bool share_cone(const Fan& fan, std::size_t a, std::size_t b) {
  for (const Cone& c : fan.max_cones)
    if (std::count(c.begin(), c.end(), a) && std::count(c.begin(), c.end(), b)) return true;
  return false;
}

/// Connected components by depth-first search, each sorted.
inline std::set<Cone> components(const Fan& fan, const std::vector<std::size_t>& vertices) {
  std::set<Cone> out;
  std::vector<bool> seen(vertices.size(), false);
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    if (seen[s]) continue;
    Cone comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(vertices[v]);
      for (std::size_t w = 0; w < vertices.size(); ++w)
        if (!seen[w] && share_cone(fan, vertices[v], vertices[w])) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.insert(comp);
  }
  return out;
}

struct Triple {
  IntVec m;
  std::size_t rho;
  Cone c;
  bool operator<(const Triple& o) const {
    return std::tie(m, rho, c) < std::tie(o.m, o.rho, o.c);
  }
};

/// Admissible triples for a 2-dimensional fan containing the rays e1, e2,
/// with m ranging over the coordinate box [-B, B]^2 filtered by the ray box.
inline std::set<Triple> brute_triples_2d(const Fan& fan, long long B) {
  std::set<Triple> out;
  for (long long x = -B; x <= B; ++x)
    for (long long y = -B; y <= B; ++y) {
      const IntVec m = toric::make_vec({x, y});
      std::vector<Integer> vals;
      bool inside = true;
      for (const IntVec& v : fan.rays) {
        vals.push_back(toric::dot(m, v));
        if (vals.back() < -B || vals.back() > B) inside = false;
      }
      if (!inside) continue;
      for (std::size_t rho = 0; rho < vals.size(); ++rho) {
        if (vals[rho] != -1) continue;
        std::vector<std::size_t> verts;
        for (std::size_t i = 0; i < vals.size(); ++i)
          if (i != rho && vals[i] < 0) verts.push_back(i);
        const auto comps = components(fan, verts);
        if (comps.size() < 2) continue;
        for (const Cone& c : comps) out.insert({m, rho, c});
      }
    }
  return out;
}

/// Degree-m derivations regular on the chart of `cone`: v such that
/// u(v) = 0 for every u in the dual cone (sampled in a box) with u + m
/// outside the dual cone. Returned as a basis of that subspace.
inline std::vector<IntVec> brute_sections(const Fan& fan, const Cone& cone, const IntVec& m,
                                          long long box = 3) {
  const std::size_t n = fan.dim;
  std::vector<IntVec> bad;
  IntVec u(n, Integer(-box));
  for (;;) {
    bool in_dual = true, shifted_in_dual = true;
    for (std::size_t i : cone) {
      const Integer a = toric::dot(u, fan.rays[i]);
      if (a < 0) in_dual = false;
      if (a + toric::dot(m, fan.rays[i]) < 0) shifted_in_dual = false;
    }
    if (in_dual && !shifted_in_dual) bad.push_back(u);
    std::size_t k = 0;
    while (k < n && u[k] == box) u[k++] = -box;
    if (k == n) break;
    ++u[k];
  }
  if (bad.empty()) {
    std::vector<IntVec> basis;
    for (std::size_t k = 0; k < n; ++k) {
      IntVec e(n, Integer(0));
      e[k] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  return toric::kernel_basis(IntMat::from_rows(bad));
}

/// dim H^1 in degree m from ambient-coordinate Cech matrices with brute
/// force local sections.
inline std::size_t brute_h1(const Fan& fan, const IntVec& m) {
  const std::size_t n = fan.dim, k = fan.max_cones.size();
  auto meet = [](Cone a, const Cone& b) {
    Cone out;
    for (std::size_t x : a)
      if (std::count(b.begin(), b.end(), x)) out.push_back(x);
    return out;
  };
  std::vector<std::vector<IntVec>> s0;
  for (const Cone& c : fan.max_cones) s0.push_back(brute_sections(fan, c, m));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<IntVec>> s1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      pairs.emplace_back(i, j);
      s1.push_back(brute_sections(fan, meet(fan.max_cones[i], fan.max_cones[j]), m));
    }
  auto pair_pos = [&](std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::pair{i, j}) -
                                    pairs.begin());
  };
  // d0 columns in ambient coordinates (pairs x n)
  std::vector<IntVec> d0cols;
  for (std::size_t c = 0; c < k; ++c)
    for (const IntVec& b : s0[c]) {
      IntVec col(pairs.size() * n, Integer(0));
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const int sign = pairs[p].second == c ? 1 : pairs[p].first == c ? -1 : 0;
        for (std::size_t r = 0; r < n; ++r) col[p * n + r] += sign * b[r];
      }
      d0cols.push_back(col);
    }
  std::size_t dim1 = 0;
  std::vector<IntVec> d1cols;
  std::vector<std::array<std::size_t, 3>> tri;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) tri.push_back({i, j, l});
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (const IntVec& b : s1[p]) {
      ++dim1;
      IntVec col(tri.size() * n, Integer(0));
      for (std::size_t t = 0; t < tri.size(); ++t) {
        const auto [i, j, l] = tri[t];
        int sign = 0;
        if (p == pair_pos(j, l)) sign = 1;
        if (p == pair_pos(i, l)) sign = -1;
        if (p == pair_pos(i, j)) sign = 1;
        for (std::size_t r = 0; r < n; ++r) col[t * n + r] += sign * b[r];
      }
      d1cols.push_back(col);
    }
  const std::size_t r0 =
      d0cols.empty() ? 0 : rational_rank(IntMat::from_columns(d0cols, pairs.size() * n));
  const std::size_t r1 =
      d1cols.empty() ? 0 : rational_rank(IntMat::from_columns(d1cols, tri.size() * n));
  return dim1 - r1 - r0;
}

}  // namespace oracle
