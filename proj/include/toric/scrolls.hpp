#pragma once

#include "toric/fan.hpp"
#include "toric/triples.hpp"

#include <vector>

namespace toric {

/// The projective bundle over P^1 of O(a_1) + ... + O(a_n).
struct ScrollSpec {
  std::vector<long long> a;
  auto operator<=>(const ScrollSpec&) const = default;
};

struct ScrollMove {
  ScrollSpec from;
  ScrollSpec to;
  std::size_t i = 0, j = 0;  // entries moved, 0-based
  long long step = 0;        // amount taken from a_i and given to a_j
  AdmissibleTriple triple;   // on scroll_fan(from)
};

/// Rays in order: base rays rho1 = (1,0,...), rho2 = (-1, a_1 - a_n, ...,
/// a_{n-1} - a_n), then fiber rays e_1, ..., e_{n-1}, -(e_1 + ... + e_{n-1})
/// in the last n - 1 coordinates. Maximal cones pair one base ray with all
/// but one fiber ray. Throws std::invalid_argument when n < 2.
Fan scroll_fan(const ScrollSpec& s);

/// Subtract the minimum and sort non-increasing.
ScrollSpec normalize(const ScrollSpec& s);

bool is_rigid(const ScrollSpec& s);

/// Moves `step` from a_i to a_j. Requires a_i - a_j >= 2 and
/// 1 <= step <= a_i - a_j - 1; throws std::invalid_argument otherwise.
/// The triple has m = -1 on fiber ray i, +1 on fiber ray j, -step on rho1,
/// step - (a_i - a_j) on rho2, and C = {rho1}.
ScrollMove one_step(const ScrollSpec& s, std::size_t i, std::size_t j, long long step);

/// Unit moves from the largest entry to a zero of the normalized spec until
/// the normalized result has entries in {0, 1}.
std::vector<ScrollMove> path_to_rigid(const ScrollSpec& s);

/// (1^r, 0^(n-r)) with r = sum a_i mod n.
ScrollSpec rigid_target(const ScrollSpec& s);

}  // namespace toric
