#pragma once

#include "toric/fan.hpp"
#include "toric/triples.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace toric {

/// Splitting of 0 -> K -> N -> Z -> 0 given by m, with gamma(-1) = v_rho.
struct Splitting {
  IntVec m;
  std::size_t rho = 0;
  std::vector<IntVec> K_basis;  // HNF basis of ker m
  IntVec gamma;                 // gamma(1) = -v_rho
  IntMat proj;                  // rank K x dim N, v -> v - gamma(m(v)) in K_basis coordinates

  IntVec project(const IntVec& v) const { return proj * v; }
};

Splitting make_splitting(const Fan& fan, const IntVec& m, std::size_t rho);

/// A variable T_(block, ray). Blocks are 1..4, rays 0-based.
struct UColumn {
  int block = 0;
  std::size_t ray = 0;
  auto operator<=>(const UColumn&) const = default;
};

/// "T(k,i)" with i counted from 1, or "T1" for the base coordinate.
std::string variable_label(const UColumn& c);

struct UIndex {
  std::vector<UColumn> U1, U2, U3, U4;
  /// U1, U2, U3, U4 concatenated: the column order of P after T1.
  std::vector<UColumn> columns() const;
};

UIndex u_index(const IntVec& ray_vals, const Cone& component, std::size_t rho);

struct Monomial {
  int sign = 1;
  IntVec exponent;  // over [T1, U columns...]
};

struct DeformationData {
  AdmissibleTriple triple;
  IntVec a;  // m on every ray
  Splitting split;
  UIndex u;
  std::vector<UColumn> columns;  // U columns in P order (P column k + 1)
  CoxData cox;                   // of X
  IntMat P;                      // (n + 2) x (1 + |U|)
  IntMat Ptilde;                 // (n + 1) x |U|
  IntMat Qtilde;
  std::vector<Cone> ambient_cones;  // indices of P columns, 0 is T1
  std::array<Monomial, 3> trinomial;
  IntMat psi;  // |U| x r
  IntMat nu;   // r x |U|

  /// Position of (block, ray) among the U columns.
  std::optional<std::size_t> column_of(int block, std::size_t ray) const;
  /// Labels for every column of P, starting with "T1".
  std::vector<std::string> labels() const;
};

/// Throws std::invalid_argument for a non-admissible triple and FanError for
/// a fan that is not smooth and complete.
DeformationData build_deformation(const Fan& fan, const AdmissibleTriple& t);

/// Image of each variable: nullopt for T1 (sent to 0), otherwise the
/// exponent vector in S_1..S_r. Entry k + 1 belongs to U column k.
std::vector<std::optional<IntVec>> eta_map(const DeformationData& d);

/// Embedding of N into the ambient lattice: v -> (m(v), m(v), pi(v), 0).
IntVec iota(const DeformationData& d, const IntVec& v);

struct Check {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
};

bool all_passed(const std::vector<Check>& checks);

/// Combinatorial checks on the central fiber: cone membership of iota,
/// fiber fan round trip, iota(N) = N_0, commutativity of the square relating
/// psi and iota, psi on Cox cones, the kernel binomial of eta, deg T1 = 0,
/// and the induced map on class groups.
std::vector<Check> verify_central_fiber(const Fan& fan, const DeformationData& d);

/// Rays are the columns of P, maximal cones the ambient cones. Throws
/// std::logic_error if some ambient cone is not unimodular.
Fan ambient_fan(const DeformationData& d);

}  // namespace toric
