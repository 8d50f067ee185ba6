#pragma once

#include "toric/deformation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

struct Term {
  Integer coefficient;
  IntVec exponent;
  bool operator==(const Term&) const = default;
};

/// Parses sums of terms like "2*S1^3*S4 - S2*S3" over variables S1..S_nvars.
/// Like terms are merged and zero terms dropped; the result is sorted by
/// exponent. Throws std::invalid_argument with the offending position.
std::vector<Term> parse_polynomial(const std::string& text, std::size_t nvars);

/// Inverse of parse_polynomial for arbitrary variable labels.
std::string format_polynomial(const std::vector<Term>& terms, const std::vector<std::string>& vars);

class InfiniteFiber : public std::runtime_error {
 public:
  InfiniteFiber() : std::runtime_error("fiber of the grading map is infinite") {}
};

/// All e >= 0 with Q_X e = w, sorted. Throws InfiniteFiber when the set is
/// unbounded.
std::vector<IntVec> riemann_roch_points(const Fan& fan, const IntVec& w);

/// Some x >= 0 with nu x = e, or nullopt.
std::optional<IntVec> is_liftable(const DeformationData& d, const IntVec& e);

struct LiftProblem {
  const DeformationData* deformation = nullptr;
  IntVec w;
  std::vector<Term> monomials;
};

struct LiftResult {
  std::vector<std::optional<IntVec>> preimages;  // one per monomial, over the U columns
  std::optional<std::size_t> first_failure;
  std::vector<Term> lifted;  // over [T1, U columns...] with T1 exponent 0; empty on failure
  bool liftable() const { return !first_failure.has_value(); }
};

/// Throws std::invalid_argument if some monomial does not have class w.
LiftResult lift_polynomial(const LiftProblem& p);

struct HilbertReport {
  Integer det_without_2rho;
  Integer det_without_3rho;
  bool passed = false;
};

/// Determinants of nu with column (2, rho), resp. (3, rho), deleted.
HilbertReport hilbert_basis_check(const DeformationData& d);

}  // namespace toric
