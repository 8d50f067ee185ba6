#include "toric/scrolls.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toric {

Fan scroll_fan(const ScrollSpec& s) {
  const std::size_t n = s.a.size();
  if (n < 2) throw std::invalid_argument("a scroll needs at least two entries");
  Fan fan;
  fan.dim = n;
  IntVec r1(n, Integer(0)), r2(n, Integer(0));
  r1[0] = 1;
  r2[0] = -1;
  for (std::size_t i = 0; i + 1 < n; ++i) r2[i + 1] = Integer(s.a[i]) - s.a[n - 1];
  fan.rays = {r1, r2};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntVec f(n, Integer(0));
    f[i + 1] = 1;
    fan.rays.push_back(std::move(f));
  }
  IntVec last(n, Integer(-1));
  last[0] = 0;
  fan.rays.push_back(std::move(last));
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t skip = 0; skip < n; ++skip) {
      Cone c{b};
      for (std::size_t f = 0; f < n; ++f)
        if (f != skip) c.push_back(2 + f);
      fan.max_cones.push_back(std::move(c));
    }
  return fan;
}

ScrollSpec normalize(const ScrollSpec& s) {
  ScrollSpec out = s;
  if (out.a.empty()) return out;
  const long long lo = *std::min_element(out.a.begin(), out.a.end());
  for (long long& x : out.a) x -= lo;
  std::sort(out.a.begin(), out.a.end(), std::greater<>());
  return out;
}

bool is_rigid(const ScrollSpec& s) {
  const ScrollSpec n = normalize(s);
  return std::all_of(n.a.begin(), n.a.end(), [](long long x) { return x == 0 || x == 1; });
}

ScrollMove one_step(const ScrollSpec& s, std::size_t i, std::size_t j, long long step) {
  const std::size_t n = s.a.size();
  if (i >= n || j >= n || i == j) throw std::invalid_argument("bad entry indices");
  const long long gap = s.a[i] - s.a[j];
  if (gap < 2) throw std::invalid_argument("entries must differ by at least 2");
  if (step < 1 || step > gap - 1) throw std::invalid_argument("step must lie in [1, gap - 1]");

  ScrollMove mv;
  mv.from = s;
  mv.to = s;
  mv.to.a[i] -= step;
  mv.to.a[j] += step;
  mv.i = i;
  mv.j = j;
  mv.step = step;

  const Fan fan = scroll_fan(s);
  IntVec u(n + 2, Integer(0));
  u[0] = -step;
  u[1] = step - gap;
  u[2 + i] = -1;
  u[2 + j] = 1;
  const auto m = solve_integer(ray_matrix(fan).transpose(), u);
  if (!m) throw std::logic_error("degree of the move is not integral");
  mv.triple = {*m, 2 + i, {0}};
  if (!is_admissible(fan, mv.triple)) throw std::logic_error("move triple is not admissible");
  return mv;
}

std::vector<ScrollMove> path_to_rigid(const ScrollSpec& s) {
  std::vector<ScrollMove> path;
  ScrollSpec cur = normalize(s);
  while (!is_rigid(cur)) {
    path.push_back(one_step(cur, 0, cur.a.size() - 1, 1));
    cur = normalize(path.back().to);
  }
  return path;
}

ScrollSpec rigid_target(const ScrollSpec& s) {
  const long long n = static_cast<long long>(s.a.size());
  const long long sum = std::accumulate(s.a.begin(), s.a.end(), 0LL);
  const long long r = ((sum % n) + n) % n;
  ScrollSpec out;
  out.a.assign(static_cast<std::size_t>(n), 0);
  std::fill(out.a.begin(), out.a.begin() + r, 1);
  return out;
}

}  // namespace toric
