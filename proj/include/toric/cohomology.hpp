#pragma once

#include "toric/fan.hpp"
#include "toric/triples.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace toric {

/// Degree-m sections of the tangent sheaf on the affine chart of a cone,
/// as a subspace of N_Q. On a smooth cone this is all of N_Q when m >= 0 on
/// the cone's rays, the line through rho when rho is the only ray with
/// m(rho) = -1 and the others are >= 0, and zero otherwise.
struct LocalSections {
  Cone cone;
  IntVec degree;
  std::vector<IntVec> basis;

  std::size_t dim() const { return basis.size(); }
  bool contains(const IntVec& v) const;
};

LocalSections local_sections(const Fan& fan, const Cone& cone, const IntVec& m);

/// Alternating Cech complex of the maximal-cone cover in one degree, over
/// strictly increasing cone tuples. Matrices act on coordinates with
/// respect to the concatenated local bases.
struct CechComplex {
  IntVec degree;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::array<std::size_t, 3>> triples;
  std::vector<LocalSections> c0, c1, c2;
  std::vector<std::size_t> c1_offset;  // start of each pair's block
  IntMat d0;                           // dim C1 x dim C0
  IntMat d1;                           // dim C2 x dim C1

  std::size_t dim_c0() const { return d0.cols(); }
  std::size_t dim_c1() const { return d0.rows(); }
  std::size_t dim_c2() const { return d1.rows(); }
};

CechComplex cech_complex(const Fan& fan, const IntVec& m);

/// dim ker d1 - rank d0.
std::size_t h1_dimension(const CechComplex& cx);
std::size_t h1_dimension(const Fan& fan, const IntVec& m);

/// Intersection sigma cap tau of two maximal cones, as the common rays.
Cone cone_intersection(const Cone& a, const Cone& b);

/// One-cocycle attached to an admissible triple: the entry on (sigma, tau)
/// is alpha(sigma, tau) times rho, with alpha = 1 when only sigma meets C,
/// -1 when only tau does, 0 otherwise.
struct Cocycle {
  IntVec degree;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sigma < tau
  std::vector<IntVec> entries;                             // one per pair
  std::vector<int> alpha;                                  // one per pair

  /// Entry on an ordered pair; antisymmetric in its arguments.
  IntVec entry(std::size_t sigma, std::size_t tau) const;
  /// Coordinates in the C1 basis of `cx`.
  IntVec coordinates(const CechComplex& cx) const;
};

/// Throws std::logic_error if an entry leaves the local sections or the
/// cocycle condition fails.
Cocycle triple_cocycle(const Fan& fan, const AdmissibleTriple& t);

struct SpanReport {
  std::size_t h1_dim = 0;
  std::size_t span_rank = 0;
  bool spans = false;
};

SpanReport span_check(const Fan& fan, const IntVec& m, const std::vector<AdmissibleTriple>& triples);

}  // namespace toric
