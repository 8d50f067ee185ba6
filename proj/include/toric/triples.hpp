#pragma once

#include "toric/fan.hpp"

#include <cstddef>
#include <vector>

namespace toric {

/// Graph on the rays tau != rho with m(tau) < 0; two rays are joined when
/// they lie in a common cone.
struct MarkerGraph {
  std::vector<std::size_t> vertices;  // ascending
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<Cone> components;  // ascending, ordered by smallest vertex
};

struct AdmissibleTriple {
  IntVec m;
  std::size_t rho = 0;
  Cone component;

  auto operator<=>(const AdmissibleTriple&) const = default;
};

/// Values m(v) on every ray, in ray order.
IntVec ray_values(const Fan& fan, const IntVec& m);

/// Throws std::invalid_argument unless m(rho) = -1.
MarkerGraph marker_graph(const Fan& fan, const IntVec& m, std::size_t rho);

/// Components strictly smaller than the vertex set.
std::vector<Cone> admissible_components(const MarkerGraph& g);

bool is_admissible(const Fan& fan, const AdmissibleTriple& t);

/// 2 * (1 + largest absolute ray coordinate).
long long default_bound(const Fan& fan);

/// Every m in M with -bound <= m(v) <= bound on all rays, in lexicographic
/// order. The fan must contain a unimodular full-dimensional cone.
std::vector<IntVec> degree_box(const Fan& fan, long long bound);

/// All admissible triples with degree in the box, sorted.
std::vector<AdmissibleTriple> enumerate_triples(const Fan& fan, long long bound);

/// Triples of one fixed degree.
std::vector<AdmissibleTriple> triples_at(const Fan& fan, const IntVec& m);

}  // namespace toric
