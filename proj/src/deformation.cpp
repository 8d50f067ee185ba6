#include "toric/deformation.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

bool in_cone(const Cone& c, std::size_t i) { return std::binary_search(c.begin(), c.end(), i); }

std::vector<IntVec> hnf_rows(const IntMat& A) {
  const HermiteResult h = hermite_normal_form(A);
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < h.rank; ++i) out.push_back(h.H.row(i));
  return out;
}

IntVec unit(std::size_t n, std::size_t i) {
  IntVec e(n, Integer(0));
  e[i] = 1;
  return e;
}

Check pass(std::string name) { return Check{std::move(name), true, {}}; }
Check fail(std::string name, std::string witness) {
  return Check{std::move(name), false, std::move(witness)};
}

}  // namespace

Splitting make_splitting(const Fan& fan, const IntVec& m, std::size_t rho) {
  Splitting s;
  s.m = m;
  s.rho = rho;
  const IntVec& vr = fan.rays.at(rho);
  if (dot(m, vr) != -1) throw std::invalid_argument("m(rho) must be -1");
  s.K_basis = kernel_basis(IntMat::from_rows({m}, fan.dim));
  s.gamma = vr;
  for (Integer& x : s.gamma) x = -x;
  const IntMat K = IntMat::from_columns(s.K_basis, fan.dim);
  s.proj = IntMat(s.K_basis.size(), fan.dim);
  for (std::size_t i = 0; i < fan.dim; ++i) {
    IntVec w = unit(fan.dim, i);
    const Integer mi = m[i];
    for (std::size_t k = 0; k < fan.dim; ++k) w[k] += mi * vr[k];
    const auto c = solve_integer(K, w);
    if (!c) throw std::logic_error("projection leaves the kernel lattice");
    for (std::size_t k = 0; k < c->size(); ++k) s.proj(k, i) = (*c)[k];
  }
  return s;
}

std::string variable_label(const UColumn& c) {
  return "T(" + std::to_string(c.block) + "," + std::to_string(c.ray + 1) + ")";
}

std::vector<UColumn> UIndex::columns() const {
  std::vector<UColumn> out = U1;
  out.insert(out.end(), U2.begin(), U2.end());
  out.insert(out.end(), U3.begin(), U3.end());
  out.insert(out.end(), U4.begin(), U4.end());
  return out;
}

UIndex u_index(const IntVec& a, const Cone& component, std::size_t rho) {
  UIndex u;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) u.U1.push_back({1, i});
    if (a[i] == 0) u.U4.push_back({4, i});
    if (a[i] < 0) {
      if (i == rho || in_cone(component, i)) u.U2.push_back({2, i});
      if (!in_cone(component, i)) u.U3.push_back({3, i});
    }
  }
  return u;
}

std::optional<std::size_t> DeformationData::column_of(int block, std::size_t ray) const {
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (columns[k].block == block && columns[k].ray == ray) return k;
  return std::nullopt;
}

std::vector<std::string> DeformationData::labels() const {
  std::vector<std::string> out{"T1"};
  for (const UColumn& c : columns) out.push_back(variable_label(c));
  return out;
}

DeformationData build_deformation(const Fan& fan, const AdmissibleTriple& t) {
  if (!is_admissible(fan, t)) throw std::invalid_argument("triple is not admissible");
  DeformationData d;
  d.triple = t;
  d.cox = cox_data(fan);
  d.a = ray_values(fan, t.m);
  d.split = make_splitting(fan, t.m, t.rho);
  d.u = u_index(d.a, t.component, t.rho);
  d.columns = d.u.columns();

  const std::size_t r = fan.num_rays(), kdim = d.split.K_basis.size();
  const std::size_t U = d.columns.size();
  const std::size_t rows = 2 + kdim + 1;

  d.P = IntMat(rows, U + 1);
  d.P(0, 0) = 1;
  d.P(1, 0) = 1;
  d.P(rows - 1, 0) = 1;
  for (std::size_t k = 0; k < U; ++k) {
    const UColumn& c = d.columns[k];
    const Integer& ai = d.a[c.ray];
    if (c.block != 3) d.P(0, k + 1) = ai;
    if (c.block != 2) d.P(1, k + 1) = ai;
    const IntVec pi = d.split.project(fan.rays[c.ray]);
    for (std::size_t q = 0; q < kdim; ++q) d.P(2 + q, k + 1) = pi[q];
  }
  d.Ptilde = IntMat(rows - 1, U);
  for (std::size_t i = 0; i + 1 < rows; ++i)
    for (std::size_t k = 0; k < U; ++k) d.Ptilde(i, k) = d.P(i, k + 1);
  d.Qtilde = cokernel_map(d.Ptilde.transpose()).grading;

  const std::size_t c2rho = *d.column_of(2, t.rho), c3rho = *d.column_of(3, t.rho);

  for (const Cone& sigma : fan.max_cones) {
    const bool meets_c = std::any_of(sigma.begin(), sigma.end(),
                                     [&](std::size_t i) { return in_cone(t.component, i); });
    Cone amb{0, 1 + (meets_c ? c3rho : c2rho)};
    for (std::size_t s : sigma) {
      int block = d.a[s] > 0 ? 1 : d.a[s] == 0 ? 4 : meets_c ? 2 : 3;
      amb.push_back(1 + *d.column_of(block, s));
    }
    std::sort(amb.begin(), amb.end());
    d.ambient_cones.push_back(std::move(amb));
  }

  for (Monomial& mono : d.trinomial) mono.exponent.assign(U + 1, Integer(0));
  d.trinomial[0].exponent[0] = 1;
  d.trinomial[1].sign = -1;
  for (std::size_t k = 0; k < U; ++k) {
    const UColumn& c = d.columns[k];
    const Integer& ai = d.a[c.ray];
    if (c.block == 1) d.trinomial[0].exponent[k + 1] = ai;
    if (c.block == 2) d.trinomial[1].exponent[k + 1] = -ai;
    if (c.block == 3) d.trinomial[2].exponent[k + 1] = -ai;
  }

  d.psi = IntMat(U, r);
  for (std::size_t j = 0; j < r; ++j) {
    const Integer& aj = d.a[j];
    if (j == t.rho) {
      d.psi(c2rho, j) = 1;
      d.psi(c3rho, j) = 1;
    } else if (aj > 0) {
      d.psi(*d.column_of(1, j), j) = 1;
    } else if (aj == 0) {
      d.psi(*d.column_of(4, j), j) = 1;
    } else if (in_cone(t.component, j)) {
      d.psi(*d.column_of(2, j), j) = 1;
      d.psi(c3rho, j) = -aj;
    } else {
      d.psi(*d.column_of(3, j), j) = 1;
      d.psi(c2rho, j) = -aj;
    }
  }
  d.nu = d.psi.transpose();
  return d;
}

std::vector<std::optional<IntVec>> eta_map(const DeformationData& d) {
  std::vector<std::optional<IntVec>> out{std::nullopt};
  for (std::size_t k = 0; k < d.columns.size(); ++k) out.push_back(d.nu.col(k));
  return out;
}

IntVec iota(const DeformationData& d, const IntVec& v) {
  const Integer mv = dot(d.triple.m, v);
  IntVec out{mv, mv};
  for (const Integer& x : d.split.project(v)) out.push_back(x);
  out.push_back(0);
  return out;
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<Check> verify_central_fiber(const Fan& fan, const DeformationData& d) {
  std::vector<Check> out;
  const std::size_t r = fan.num_rays(), n = fan.dim;

  // (i) iota(v) in the ambient cone, and the round trip back to sigma.
  {
    Check member = pass("iota_cone_membership");
    Check round = pass("fiber_fan_round_trip");
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
      const IntMat M = d.P.select_columns(d.ambient_cones[c]);
      if (!is_unimodular(M)) {
        member = fail(member.name, "sigma=" + std::to_string(c) + " ambient cone not unimodular");
        break;
      }
      for (std::size_t j = 0; j < r; ++j) {
        const auto x = solve_integer(M, iota(d, fan.rays[j]));
        const bool nonneg =
            x && std::all_of(x->begin(), x->end(), [](const Integer& y) { return y >= 0; });
        const bool in_sigma = in_cone(fan.max_cones[c], j);
        const std::string w = "sigma=" + std::to_string(c) + " v=" + std::to_string(j);
        if (in_sigma && !nonneg && member.passed) member = fail(member.name, w);
        if (!in_sigma && nonneg && round.passed) round = fail(round.name, w);
      }
    }
    out.push_back(member);
    out.push_back(round);
  }

  const IntVec& x2 = d.trinomial[1].exponent;
  const IntVec& x3 = d.trinomial[2].exponent;
  IntVec diff(x2.size());
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = x2[k] - x3[k];

  // (ii) iota(N) = N_0 = u-perp cap e_last-perp with P^t u = diff.
  {
    Check c = pass("iota_image_is_N0");
    std::optional<IntVec> u;
    try {
      u = solve_integer(d.P.transpose(), diff);
    } catch (const NoRationalSolution&) {
    }
    if (!u) {
      c = fail(c.name, "no u with P^t u = binomial exponent difference");
    } else {
      IntVec last(d.P.rows(), Integer(0));
      last.back() = 1;
      const auto n0 = kernel_basis(IntMat::from_rows({*u, last}, d.P.rows()));
      std::vector<IntVec> images;
      for (std::size_t i = 0; i < n; ++i) images.push_back(iota(d, unit(n, i)));
      const IntMat I = IntMat::from_rows(images, d.P.rows());
      if (rank(I) != n)
        c = fail(c.name, "iota not injective");
      else if (hnf_rows(I) != n0)
        c = fail(c.name, "u=" + to_string(*u));
    }
    out.push_back(c);
  }

  // (iii) Ptilde psi = iota' P_X.
  {
    Check c = pass("diagram_commutes");
    const IntMat left = d.Ptilde * d.psi;
    for (std::size_t j = 0; j < r && c.passed; ++j) {
      IntVec right = iota(d, fan.rays[j]);
      right.pop_back();
      if (left.col(j) != right) c = fail(c.name, "e_" + std::to_string(j));
    }
    out.push_back(c);
  }

  // (iv) psi sends the Cox cone of sigma into the Cox cone of its lift.
  {
    Check c = pass("cox_cones_map");
    for (std::size_t s = 0; s < fan.max_cones.size() && c.passed; ++s)
      for (std::size_t j : fan.max_cones[s]) {
        bool ok = true;
        for (std::size_t k = 0; k < d.columns.size(); ++k) {
          const Integer& x = d.psi(k, j);
          if (x < 0 || (x != 0 && !in_cone(d.ambient_cones[s], k + 1))) ok = false;
        }
        if (!ok) {
          c = fail(c.name, "sigma=" + std::to_string(s) + " v=" + std::to_string(j));
          break;
        }
      }
    out.push_back(c);
  }

  // Kernel binomial of eta: both terms share an image, and their exponent
  // difference generates ker nu.
  {
    Check c = pass("kernel_binomial");
    const IntVec du(diff.begin() + 1, diff.end());
    const IntVec neg = [&] {
      IntVec v = du;
      for (Integer& x : v) x = -x;
      return v;
    }();
    const auto ker = kernel_basis(d.nu);
    if (!is_zero(d.nu * du))
      c = fail(c.name, "nu does not kill " + to_string(du));
    else if (!is_zero(d.Qtilde * du))
      c = fail(c.name, "Qtilde does not kill " + to_string(du));
    else if (ker.size() != 1 || (ker[0] != du && ker[0] != neg))
      c = fail(c.name, "ker nu differs from " + to_string(du));
    out.push_back(c);
  }

  {
    Check c = pass("T1_degree_zero");
    const IntMat Q = cokernel_map(d.P.transpose()).grading;
    if (!is_zero(Q.col(0))) c = fail(c.name, "deg T1 = " + to_string(Q.col(0)));
    out.push_back(c);
  }

  // Q_X nu = B Qtilde with B unimodular.
  {
    Check c = pass("class_group_iso");
    const Cokernel cok = cokernel_map(d.Ptilde.transpose());
    const std::size_t k = cok.free_rank;
    if (!cok.torsion_free()) {
      c = fail(c.name, "ambient class group has torsion");
    } else if (k != d.cox.cl_rank) {
      c = fail(c.name, "class group ranks differ");
    } else {
      const IntMat QN = d.cox.Q * d.nu;
      std::vector<IntVec> bcols;
      for (std::size_t i = 0; i < k; ++i) {
        const auto y = solve_integer(d.Qtilde, unit(k, i));
        if (!y) throw std::logic_error("grading map not surjective");
        bcols.push_back(QN * *y);
      }
      const IntMat B = IntMat::from_columns(bcols, d.cox.cl_rank);
      if (B * d.Qtilde != QN)
        c = fail(c.name, "nu does not descend to class groups");
      else if (!is_unimodular(B))
        c = fail(c.name, "induced map " + B.to_string() + " not invertible");
    }
    out.push_back(c);
  }
  return out;
}

Fan ambient_fan(const DeformationData& d) {
  Fan fan;
  fan.dim = d.P.rows();
  for (std::size_t k = 0; k < d.P.cols(); ++k) fan.rays.push_back(d.P.col(k));
  fan.max_cones = d.ambient_cones;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const IntMat M = d.P.select_columns(fan.max_cones[c]);
    if (M.cols() != fan.dim || !is_unimodular(M))
      throw std::logic_error("ambient cone " + std::to_string(c) + " is not unimodular");
  }
  return fan;
}

}  // namespace toric
