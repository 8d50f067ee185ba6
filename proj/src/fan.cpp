#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace toric {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

bool contains_all(const Cone& big, const Cone& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Exact angular order in the plane starting from the positive x-axis.
bool angle_less(const IntVec& a, const IntVec& b) {
  auto half = [](const IntVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

bool complete_dim1(const Fan& fan) {
  if (fan.num_rays() != 2 || fan.max_cones.size() != 2) return false;
  if (fan.rays[0][0] != -fan.rays[1][0]) return false;
  return std::all_of(fan.max_cones.begin(), fan.max_cones.end(),
                     [](const Cone& c) { return c.size() == 1; });
}

bool complete_dim2(const Fan& fan) {
  const std::size_t r = fan.num_rays();
  if (r < 3 || fan.max_cones.size() != r) return false;
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return angle_less(fan.rays[a], fan.rays[b]); });
  std::set<Cone> expected;
  for (std::size_t k = 0; k < r; ++k) {
    const IntVec& a = fan.rays[order[k]];
    const IntVec& b = fan.rays[order[(k + 1) % r]];
    if (a[0] * b[1] - a[1] * b[0] <= 0) return false;  // gap of angle >= pi
    expected.insert(Cone{std::min(order[k], order[(k + 1) % r]),
                         std::max(order[k], order[(k + 1) % r])});
  }
  return expected == std::set<Cone>(fan.max_cones.begin(), fan.max_cones.end());
}

// Facet pairing plus side test and dual-graph connectivity.
bool complete_pseudomanifold(const Fan& fan) {
  const std::size_t n = fan.dim;
  std::map<Cone, std::vector<std::pair<std::size_t, std::size_t>>> facets;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const Cone& cone = fan.max_cones[c];
    if (cone.size() != n) return false;
    for (std::size_t drop = 0; drop < n; ++drop) {
      Cone facet;
      for (std::size_t k = 0; k < n; ++k)
        if (k != drop) facet.push_back(cone[k]);
      facets[facet].emplace_back(c, cone[drop]);
    }
  }
  std::vector<std::vector<std::size_t>> adj(fan.max_cones.size());
  for (const auto& [facet, owners] : facets) {
    if (owners.size() != 2) return false;
    std::vector<IntVec> cols;
    for (std::size_t i : facet) cols.push_back(fan.rays[i]);
    cols.push_back(fan.rays[owners[0].second]);
    const Integer d0 = determinant(IntMat::from_columns(cols, n));
    cols.back() = fan.rays[owners[1].second];
    const Integer d1 = determinant(IntMat::from_columns(cols, n));
    if (d0 * d1 >= 0) return false;
    adj[owners[0].first].push_back(owners[1].first);
    adj[owners[1].first].push_back(owners[0].first);
  }
  std::vector<bool> seen(fan.max_cones.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    const std::size_t c = stack.back();
    stack.pop_back();
    ++count;
    for (std::size_t d : adj[c])
      if (!seen[d]) {
        seen[d] = true;
        stack.push_back(d);
      }
  }
  return count == fan.max_cones.size();
}

}  // namespace

Fan checked_fan(Fan fan) {
  if (fan.dim == 0) throw FanError("fan dimension must be positive");
  std::set<IntVec> seen;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const IntVec& v = fan.rays[i];
    if (v.size() != fan.dim) throw FanError("ray " + idx(i) + " has wrong length");
    if (is_zero(v)) throw FanError("zero ray " + idx(i));
    if (gcd_of(v) != 1) throw FanError("non-primitive ray " + idx(i));
    if (!seen.insert(v).second) throw FanError("duplicate ray " + idx(i));
  }
  std::vector<bool> used(fan.rays.size(), false);
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    Cone& cone = fan.max_cones[c];
    if (cone.empty()) throw FanError("empty cone " + idx(c));
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw FanError("repeated ray index in cone " + idx(c));
    for (std::size_t i : cone) {
      if (i >= fan.rays.size()) throw FanError("bad ray index " + idx(i) + " in cone " + idx(c));
      used[i] = true;
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw FanError("ray " + idx(i) + " lies in no maximal cone");
  return fan;
}

IntMat ray_matrix(const Fan& fan, const Cone& cone) {
  std::vector<IntVec> cols;
  for (std::size_t i : cone) cols.push_back(fan.rays[i]);
  return IntMat::from_columns(cols, fan.dim);
}

IntMat ray_matrix(const Fan& fan) { return IntMat::from_columns(fan.rays, fan.dim); }

FanReport validate(const Fan& fan) {
  FanReport rep;
  rep.simplicial = true;
  rep.smooth = true;
  for (const Cone& c : fan.max_cones) {
    const IntMat m = ray_matrix(fan, c);
    const SmithResult s = smith_normal_form(m);
    if (s.rank != c.size()) {
      rep.simplicial = false;
      rep.smooth = false;
      continue;
    }
    for (std::size_t i = 0; i < s.rank; ++i)
      if (s.S(i, i) != 1) rep.smooth = false;
  }
  if (!rep.simplicial || fan.max_cones.empty()) return rep;
  if (fan.dim == 1)
    rep.complete = complete_dim1(fan);
  else if (fan.dim == 2)
    rep.complete = complete_dim2(fan) && complete_pseudomanifold(fan);
  else
    rep.complete = complete_pseudomanifold(fan);
  return rep;
}

CoxData cox_data(const Fan& fan) {
  const FanReport rep = validate(fan);
  if (!rep.smooth) throw FanError("fan is not smooth");
  if (!rep.complete) throw FanError("fan is not complete");
  CoxData cox;
  cox.P = ray_matrix(fan);
  const Cokernel cok = cokernel_map(cox.P.transpose());
  if (!cok.torsion_free()) throw FanError("class group has torsion");
  cox.Q = cok.grading;
  cox.cl_rank = cok.free_rank;
  for (const Cone& c : fan.max_cones) {
    Cone comp;
    for (std::size_t i = 0; i < fan.num_rays(); ++i)
      if (!std::binary_search(c.begin(), c.end(), i)) comp.push_back(i);
    cox.irrelevant_components.push_back(std::move(comp));
  }
  return cox;
}

std::optional<std::size_t> cone_containing(const Fan& fan, const Cone& rays) {
  Cone sorted = rays;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
    if (contains_all(fan.max_cones[c], sorted)) return c;
  return std::nullopt;
}

std::vector<Cone> primitive_collections(const Fan& fan) {
  const std::size_t r = fan.num_rays();
  if (r > 24) throw FanError("primitive_collections: too many rays");
  std::vector<std::uint32_t> cone_masks;
  for (const Cone& c : fan.max_cones) {
    std::uint32_t mask = 0;
    for (std::size_t i : c) mask |= 1u << i;
    cone_masks.push_back(mask);
  }
  auto is_face = [&](std::uint32_t s) {
    return std::any_of(cone_masks.begin(), cone_masks.end(),
                       [s](std::uint32_t c) { return (s & c) == s; });
  };
  std::vector<Cone> out;
  for (std::uint32_t s = 1; s < (1u << r); ++s) {
    if (is_face(s)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < r && minimal; ++i)
      if ((s >> i) & 1u) minimal = is_face(s & ~(1u << i));
    if (!minimal) continue;
    Cone c;
    for (std::size_t i = 0; i < r; ++i)
      if ((s >> i) & 1u) c.push_back(i);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fan projective_space_fan(std::size_t n) {
  Fan fan;
  fan.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Integer(0));
    e[i] = 1;
    fan.rays.push_back(std::move(e));
  }
  fan.rays.push_back(IntVec(n, Integer(-1)));
  for (std::size_t skip = 0; skip <= n; ++skip) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    fan.max_cones.push_back(std::move(c));
  }
  std::sort(fan.max_cones.begin(), fan.max_cones.end());
  return fan;
}

Fan hirzebruch_fan(long long n) {
  Fan fan;
  fan.dim = 2;
  fan.rays = {make_vec({1, 0}), make_vec({0, 1}), make_vec({-1, n}), make_vec({0, -1})};
  fan.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return fan;
}

Fan product_fan(const Fan& a, const Fan& b) {
  Fan fan;
  fan.dim = a.dim + b.dim;
  for (const IntVec& v : a.rays) {
    IntVec w = v;
    w.resize(fan.dim, Integer(0));
    fan.rays.push_back(std::move(w));
  }
  for (const IntVec& v : b.rays) {
    IntVec w(a.dim, Integer(0));
    w.insert(w.end(), v.begin(), v.end());
    fan.rays.push_back(std::move(w));
  }
  for (const Cone& ca : a.max_cones)
    for (const Cone& cb : b.max_cones) {
      Cone c = ca;
      for (std::size_t i : cb) c.push_back(i + a.num_rays());
      fan.max_cones.push_back(std::move(c));
    }
  return fan;
}

}  // namespace toric
