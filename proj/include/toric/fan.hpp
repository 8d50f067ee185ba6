#pragma once

#include "toric/integer_matrix.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// Sorted list of ray indices.
using Cone = std::vector<std::size_t>;

/// A fan in N = Z^dim given by primitive ray generators and its maximal
/// cones. Ray order is significant: every derived matrix uses it.
struct Fan {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<Cone> max_cones;

  std::size_t num_rays() const { return rays.size(); }
};

class FanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws FanError naming the offending index when a structural invariant
/// fails: wrong ray length, zero or non-primitive ray, duplicate ray, empty
/// cone, bad cone index, or a ray used by no maximal cone. Cones are
/// normalized to sorted order on the returned copy.
Fan checked_fan(Fan fan);

struct FanReport {
  bool smooth = false;
  bool complete = false;
  bool simplicial = false;
};

// Completeness uses the facet-pairing test: pure full-dimensional, every
// facet of a maximal cone shared by exactly two maximal cones whose opposite
// rays lie on opposite sides of it, and a connected dual graph. In
// dimension <= 2 the angular ordering of the rays is checked directly.
FanReport validate(const Fan& fan);

struct CoxData {
  IntMat P;  // dim x r, columns are the rays
  IntMat Q;  // grading Z^r -> Cl(X), in Hermite normal form
  std::size_t cl_rank = 0;
  std::vector<Cone> irrelevant_components;  // complements of maximal cones
};

/// Requires a smooth complete fan; throws FanError otherwise.
CoxData cox_data(const Fan& fan);

/// Index of the first maximal cone whose ray set contains `rays`.
std::optional<std::size_t> cone_containing(const Fan& fan, const Cone& rays);

/// Matrix with the given rays as columns.
IntMat ray_matrix(const Fan& fan, const Cone& cone);
IntMat ray_matrix(const Fan& fan);

/// Minimal subsets of rays that lie in no common cone. These generate the
/// prime components of the irrelevant ideal.
std::vector<Cone> primitive_collections(const Fan& fan);

/// Standard fans used throughout the tests and the CLI.
Fan projective_space_fan(std::size_t n);
Fan hirzebruch_fan(long long n);
Fan product_fan(const Fan& a, const Fan& b);

}  // namespace toric
