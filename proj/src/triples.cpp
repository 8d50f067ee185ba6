#include "toric/triples.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

IntVec ray_values(const Fan& fan, const IntVec& m) {
  if (m.size() != fan.dim) throw std::invalid_argument("degree has wrong length");
  IntVec out;
  out.reserve(fan.num_rays());
  for (const IntVec& v : fan.rays) out.push_back(dot(m, v));
  return out;
}

MarkerGraph marker_graph(const Fan& fan, const IntVec& m, std::size_t rho) {
  if (rho >= fan.num_rays()) throw std::invalid_argument("ray index out of range");
  const IntVec a = ray_values(fan, m);
  if (a[rho] != -1) throw std::invalid_argument("m(rho) must equal -1");
  MarkerGraph g;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != rho && a[i] < 0) g.vertices.push_back(i);

  const std::size_t k = g.vertices.size();
  std::vector<std::size_t> parent(k);
  for (std::size_t i = 0; i < k; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (cone_containing(fan, {g.vertices[i], g.vertices[j]})) {
        g.edges.emplace_back(g.vertices[i], g.vertices[j]);
        parent[find(j)] = find(i);
      }
  // Vertices are ascending, so the first time a root is seen fixes the
  // component order by smallest vertex.
  std::vector<std::size_t> slot(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == k) {
      slot[root] = g.components.size();
      g.components.emplace_back();
    }
    g.components[slot[root]].push_back(g.vertices[i]);
  }
  return g;
}

std::vector<Cone> admissible_components(const MarkerGraph& g) {
  if (g.components.size() < 2) return {};
  return g.components;
}

bool is_admissible(const Fan& fan, const AdmissibleTriple& t) {
  if (t.rho >= fan.num_rays() || t.m.size() != fan.dim) return false;
  if (dot(t.m, fan.rays[t.rho]) != -1) return false;
  const MarkerGraph g = marker_graph(fan, t.m, t.rho);
  const auto comps = admissible_components(g);
  return std::find(comps.begin(), comps.end(), t.component) != comps.end();
}

long long default_bound(const Fan& fan) {
  Integer mx = 0;
  for (const IntVec& v : fan.rays)
    for (const Integer& x : v) mx = std::max(mx, x < 0 ? Integer(-x) : x);
  return 2 * (1 + static_cast<long long>(mx));
}

std::vector<IntVec> degree_box(const Fan& fan, long long bound) {
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  // Values on a unimodular maximal cone determine m; enumerate those values.
  const Cone* basis = nullptr;
  for (const Cone& c : fan.max_cones)
    if (c.size() == fan.dim && is_unimodular(ray_matrix(fan, c))) {
      basis = &c;
      break;
    }
  if (!basis) throw std::invalid_argument("degree_box needs a unimodular maximal cone");
  const IntMat B = ray_matrix(fan, *basis);
  const SmithResult s = smith_normal_form(B.transpose());  // U Bt V = I
  const IntMat inv = s.V * s.U;                          // (Bt)^-1

  std::vector<IntVec> out;
  const std::size_t n = fan.dim;
  IntVec vals(n, Integer(-bound));
  for (;;) {
    IntVec m = inv * vals;
    bool inside = true;
    for (const IntVec& v : fan.rays) {
      const Integer x = dot(m, v);
      if (x < -bound || x > bound) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(std::move(m));
    std::size_t k = 0;
    while (k < n && vals[k] == bound) vals[k++] = -bound;
    if (k == n) break;
    ++vals[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AdmissibleTriple> triples_at(const Fan& fan, const IntVec& m) {
  std::vector<AdmissibleTriple> out;
  const IntVec a = ray_values(fan, m);
  for (std::size_t rho = 0; rho < a.size(); ++rho) {
    if (a[rho] != -1) continue;
    for (Cone& c : admissible_components(marker_graph(fan, m, rho)))
      out.push_back({m, rho, std::move(c)});
  }
  return out;
}

std::vector<AdmissibleTriple> enumerate_triples(const Fan& fan, long long bound) {
  std::vector<AdmissibleTriple> out;
  for (const IntVec& m : degree_box(fan, bound)) {
    auto ts = triples_at(fan, m);
    out.insert(out.end(), std::make_move_iterator(ts.begin()), std::make_move_iterator(ts.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toric
