#include "toric/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

bool parallel(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) return false;
  return true;
}

// Coordinates of v with respect to the basis of `ls`; throws if v is not a
// section there.
IntVec coords(const LocalSections& ls, const IntVec& v, std::size_t n) {
  if (ls.dim() == n) return v;
  if (ls.dim() == 0) {
    if (!is_zero(v)) throw std::logic_error("restriction leaves the local sections");
    return {};
  }
  const IntVec& g = ls.basis.front();
  if (!parallel(g, v)) throw std::logic_error("restriction leaves the local sections");
  for (std::size_t i = 0; i < n; ++i)
    if (g[i] != 0) {
      if (v[i] % g[i] != 0) throw std::logic_error("non-integral restriction coordinate");
      return IntVec{v[i] / g[i]};
    }
  return IntVec{0};
}

}  // namespace

bool LocalSections::contains(const IntVec& v) const {
  if (basis.empty()) return is_zero(v);
  if (basis.size() == v.size()) return true;
  return parallel(basis.front(), v);
}

LocalSections local_sections(const Fan& fan, const Cone& cone, const IntVec& m) {
  LocalSections ls{cone, m, {}};
  std::size_t minus_one = 0;
  std::size_t which = 0;
  for (std::size_t i : cone) {
    const Integer a = dot(m, fan.rays[i]);
    if (a <= -2) return ls;
    if (a == -1) {
      ++minus_one;
      which = i;
    }
  }
  if (minus_one > 1) return ls;
  if (minus_one == 1) {
    ls.basis.push_back(fan.rays[which]);
    return ls;
  }
  for (std::size_t k = 0; k < fan.dim; ++k) {
    IntVec e(fan.dim, Integer(0));
    e[k] = 1;
    ls.basis.push_back(std::move(e));
  }
  return ls;
}

Cone cone_intersection(const Cone& a, const Cone& b) {
  Cone out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

CechComplex cech_complex(const Fan& fan, const IntVec& m) {
  const std::size_t n = fan.dim;
  const std::size_t k = fan.max_cones.size();
  CechComplex cx;
  cx.degree = m;

  std::vector<std::size_t> c0_offset;
  std::size_t dim0 = 0;
  for (const Cone& c : fan.max_cones) {
    cx.c0.push_back(local_sections(fan, c, m));
    c0_offset.push_back(dim0);
    dim0 += cx.c0.back().dim();
  }
  std::size_t dim1 = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      cx.pairs.emplace_back(i, j);
      cx.c1.push_back(
          local_sections(fan, cone_intersection(fan.max_cones[i], fan.max_cones[j]), m));
      cx.c1_offset.push_back(dim1);
      dim1 += cx.c1.back().dim();
    }
  std::vector<std::size_t> c2_offset;
  std::size_t dim2 = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        cx.triples.push_back({i, j, l});
        const Cone face = cone_intersection(
            cone_intersection(fan.max_cones[i], fan.max_cones[j]), fan.max_cones[l]);
        cx.c2.push_back(local_sections(fan, face, m));
        c2_offset.push_back(dim2);
        dim2 += cx.c2.back().dim();
      }

  auto pair_index = [k](std::size_t i, std::size_t j) {
    // position of (i, j), i < j, in row-major strict upper triangle
    return i * k - i * (i + 1) / 2 + (j - i - 1);
  };

  // (d0 s)_{ij} = s_j - s_i
  cx.d0 = IntMat(dim1, dim0);
  for (std::size_t p = 0; p < cx.pairs.size(); ++p) {
    const auto [i, j] = cx.pairs[p];
    const LocalSections& target = cx.c1[p];
    for (const auto& [src, sign] : {std::pair{j, 1}, std::pair{i, -1}}) {
      for (std::size_t b = 0; b < cx.c0[src].dim(); ++b) {
        const IntVec c = coords(target, cx.c0[src].basis[b], n);
        for (std::size_t r = 0; r < c.size(); ++r)
          cx.d0(cx.c1_offset[p] + r, c0_offset[src] + b) += sign * c[r];
      }
    }
  }

  // (d1 c)_{ijl} = c_{jl} - c_{il} + c_{ij}
  cx.d1 = IntMat(dim2, dim1);
  for (std::size_t t = 0; t < cx.triples.size(); ++t) {
    const auto [i, j, l] = cx.triples[t];
    const LocalSections& target = cx.c2[t];
    for (const auto& [p, sign] : {std::pair{pair_index(j, l), 1}, std::pair{pair_index(i, l), -1},
                                  std::pair{pair_index(i, j), 1}}) {
      for (std::size_t b = 0; b < cx.c1[p].dim(); ++b) {
        const IntVec c = coords(target, cx.c1[p].basis[b], n);
        for (std::size_t r = 0; r < c.size(); ++r)
          cx.d1(c2_offset[t] + r, cx.c1_offset[p] + b) += sign * c[r];
      }
    }
  }
  if (dim0 && dim2 && !(cx.d1 * cx.d0).is_zero())
    throw std::logic_error("Cech differentials do not compose to zero");
  return cx;
}

std::size_t h1_dimension(const CechComplex& cx) {
  return cx.dim_c1() - rank(cx.d1) - rank(cx.d0);
}

std::size_t h1_dimension(const Fan& fan, const IntVec& m) {
  return h1_dimension(cech_complex(fan, m));
}

IntVec Cocycle::entry(std::size_t sigma, std::size_t tau) const {
  const bool flip = sigma > tau;
  const auto key = flip ? std::pair{tau, sigma} : std::pair{sigma, tau};
  const auto it = std::find(pairs.begin(), pairs.end(), key);
  if (it == pairs.end()) throw std::out_of_range("no such cone pair");
  IntVec v = entries[static_cast<std::size_t>(it - pairs.begin())];
  if (flip)
    for (auto& x : v) x = -x;
  return v;
}

IntVec Cocycle::coordinates(const CechComplex& cx) const {
  IntVec out(cx.dim_c1(), Integer(0));
  const std::size_t n = degree.size();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const IntVec c = coords(cx.c1[p], entries[p], n);
    for (std::size_t r = 0; r < c.size(); ++r) out[cx.c1_offset[p] + r] = c[r];
  }
  return out;
}

Cocycle triple_cocycle(const Fan& fan, const AdmissibleTriple& t) {
  if (!is_admissible(fan, t)) throw std::invalid_argument("triple is not admissible");
  auto meets = [&](const Cone& c) {
    return std::any_of(c.begin(), c.end(), [&](std::size_t i) {
      return std::binary_search(t.component.begin(), t.component.end(), i);
    });
  };
  const CechComplex cx = cech_complex(fan, t.m);
  Cocycle xi;
  xi.degree = t.m;
  xi.pairs = cx.pairs;
  for (std::size_t p = 0; p < cx.pairs.size(); ++p) {
    const auto [i, j] = cx.pairs[p];
    const bool mi = meets(fan.max_cones[i]);
    const bool mj = meets(fan.max_cones[j]);
    const int alpha = (mi && !mj) ? 1 : (!mi && mj) ? -1 : 0;
    IntVec v = fan.rays[t.rho];
    for (auto& x : v) x *= alpha;
    if (!cx.c1[p].contains(v))
      throw std::logic_error("cocycle entry on pair (" + std::to_string(i) + "," +
                             std::to_string(j) + ") is not a local section");
    xi.alpha.push_back(alpha);
    xi.entries.push_back(std::move(v));
  }
  if (!is_zero(cx.d1 * xi.coordinates(cx))) throw std::logic_error("cocycle condition fails");
  return xi;
}

SpanReport span_check(const Fan& fan, const IntVec& m,
                      const std::vector<AdmissibleTriple>& triples) {
  const CechComplex cx = cech_complex(fan, m);
  SpanReport rep;
  rep.h1_dim = h1_dimension(cx);
  std::vector<IntVec> cols;
  for (std::size_t j = 0; j < cx.d0.cols(); ++j) cols.push_back(cx.d0.col(j));
  const std::size_t base = rank(cx.d0);
  for (const AdmissibleTriple& t : triples) {
    if (t.m != m) throw std::invalid_argument("triple degree differs from m");
    cols.push_back(triple_cocycle(fan, t).coordinates(cx));
  }
  rep.span_rank = cols.empty() ? 0 : rank(IntMat::from_columns(cols, cx.dim_c1())) - base;
  rep.spans = rep.span_rank == rep.h1_dim;
  return rep;
}

}  // namespace toric
