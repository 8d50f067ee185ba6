#include "doctest.h"
#include "toric/deformation.hpp"

using namespace toric;

namespace {

AdmissibleTriple hirzebruch_triple(long long alpha) { return {make_vec({-alpha, -1}), 1, {0}}; }

IntMat golden_ptilde(long long n, long long alpha) {
  return IntMat{{1, -alpha, -1, 0, 0}, {1, 0, 0, -1, alpha - n}, {0, 1, 0, 0, -1}};
}

IntMat golden_nu(long long n, long long alpha) {
  return IntMat{{0, 1, 0, alpha, 0}, {0, 0, 1, 1, 0}, {0, 0, n - alpha, 0, 1}, {1, 0, 0, 0, 0}};
}

std::string labels_of(const DeformationData& d) {
  std::string s;
  for (const std::string& l : d.labels()) s += l + " ";
  return s;
}

}  // namespace

TEST_CASE("Hirzebruch golden matrices") {
  for (auto [n, alpha] : {std::pair{2LL, 1LL}, {3, 1}, {3, 2}, {5, 2}}) {
    CAPTURE(n);
    CAPTURE(alpha);
    const DeformationData d = build_deformation(hirzebruch_fan(n), hirzebruch_triple(alpha));
    CHECK(labels_of(d) == "T1 T(1,4) T(2,1) T(2,2) T(3,2) T(3,3) ");
    CHECK(d.Ptilde == golden_ptilde(n, alpha));
    CHECK(d.nu == golden_nu(n, alpha));
    CHECK(d.P.rows() == 4);
    CHECK(d.P.cols() == 6);
    CHECK(d.P.col(0) == make_vec({1, 1, 0, 1}));
    CHECK(d.P.row(3) == make_vec({1, 0, 0, 0, 0, 0}));
  }
}

TEST_CASE("splitting and index sets") {
  const DeformationData d = build_deformation(hirzebruch_fan(3), hirzebruch_triple(1));
  CHECK(d.a == make_vec({-1, -1, -2, 1}));
  CHECK(d.split.K_basis == std::vector<IntVec>{make_vec({1, -1})});
  CHECK(d.split.gamma == make_vec({0, -1}));
  // m o gamma = id, proj o gamma = 0
  CHECK(dot(d.split.m, d.split.gamma) == 1);
  CHECK(is_zero(d.split.project(d.split.gamma)));
  CHECK(d.u.U1 == std::vector<UColumn>{{1, 3}});
  CHECK(d.u.U2 == std::vector<UColumn>{{2, 0}, {2, 1}});
  CHECK(d.u.U3 == std::vector<UColumn>{{3, 1}, {3, 2}});
  CHECK(d.u.U4.empty());
  CHECK(d.columns.size() == hirzebruch_fan(3).num_rays() + 1);
}

TEST_CASE("trinomial of the Hirzebruch deformation") {
  for (long long n = 2; n <= 5; ++n)
    for (long long alpha = 1; alpha < n; ++alpha) {
      const DeformationData d = build_deformation(hirzebruch_fan(n), hirzebruch_triple(alpha));
      // T1 T(1,4) - T(2,1)^alpha T(2,2) + T(3,2) T(3,3)^(n-alpha)
      CHECK(d.trinomial[0].sign == 1);
      CHECK(d.trinomial[0].exponent == make_vec({1, 1, 0, 0, 0, 0}));
      CHECK(d.trinomial[1].sign == -1);
      CHECK(d.trinomial[1].exponent == make_vec({0, 0, alpha, 1, 0, 0}));
      CHECK(d.trinomial[2].sign == 1);
      CHECK(d.trinomial[2].exponent == make_vec({0, 0, 0, 0, 1, n - alpha}));

      // Homogeneous for the grading of the full ambient matrix.
      const IntMat Q = cokernel_map(d.P.transpose()).grading;
      CHECK(Q * d.trinomial[0].exponent == Q * d.trinomial[1].exponent);
      CHECK(Q * d.trinomial[1].exponent == Q * d.trinomial[2].exponent);
    }
}

TEST_CASE("eta substitution") {
  const long long n = 3, alpha = 1;
  const DeformationData d = build_deformation(hirzebruch_fan(n), hirzebruch_triple(alpha));
  const auto eta = eta_map(d);
  REQUIRE(eta.size() == 6);
  CHECK_FALSE(eta[0].has_value());
  CHECK(*eta[1] == make_vec({0, 0, 0, 1}));              // T(1,4) -> S4
  CHECK(*eta[2] == make_vec({1, 0, 0, 0}));              // T(2,1) -> S1
  CHECK(*eta[3] == make_vec({0, 1, n - alpha, 0}));      // T(2,2) -> S2 S3^(n-alpha)
  CHECK(*eta[4] == make_vec({alpha, 1, 0, 0}));          // T(3,2) -> S2 S1^alpha
  CHECK(*eta[5] == make_vec({0, 0, 1, 0}));              // T(3,3) -> S3

  // Images of the two binomial terms agree.
  auto image = [&](const IntVec& x) {
    IntVec s(4, Integer(0));
    for (std::size_t k = 1; k < x.size(); ++k)
      for (std::size_t j = 0; j < 4; ++j) s[j] += x[k] * (*eta[k])[j];
    return s;
  };
  CHECK(image(d.trinomial[1].exponent) == image(d.trinomial[2].exponent));
}

TEST_CASE("iota and the commutative square") {
  const DeformationData d = build_deformation(hirzebruch_fan(2), hirzebruch_triple(1));
  CHECK(iota(d, make_vec({0, 1})) == make_vec({-1, -1, 0, 0}));
  CHECK(iota(d, make_vec({0, -1})) == make_vec({1, 1, 0, 0}));
  // Bottom path on e4 through -psi.
  const IntVec lhs = -(d.Ptilde * d.psi) * make_vec({0, 0, 0, 1});
  CHECK(lhs == make_vec({-1, -1, 0}));
}

TEST_CASE("ambient cones and ambient fan") {
  const Fan f2 = hirzebruch_fan(2);
  const DeformationData d = build_deformation(f2, hirzebruch_triple(1));
  REQUIRE(d.ambient_cones.size() == 4);
  for (const Cone& c : d.ambient_cones) {
    CHECK(c.size() == 4);
    CHECK(c.front() == 0);
  }
  // sigma = rays {2,3} misses C: first, (2,2), (3,3), (1,4).
  CHECK(d.ambient_cones[2] == Cone{0, 1, 3, 5});
  const Fan amb = ambient_fan(d);
  CHECK(amb.dim == 4);
  CHECK(amb.num_rays() == 6);
  CHECK(validate(amb).smooth);
  CHECK_NOTHROW(checked_fan(amb));
}

TEST_CASE("central fiber checks on Hirzebruch triples") {
  for (long long n = 1; n <= 5; ++n) {
    const Fan fan = hirzebruch_fan(n);
    for (const AdmissibleTriple& t : enumerate_triples(fan, default_bound(fan))) {
      const DeformationData d = build_deformation(fan, t);
      const auto checks = verify_central_fiber(fan, d);
      CHECK(checks.size() == 8);
      for (const Check& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.witness);
        CHECK(c.passed);
      }
    }
  }
}

TEST_CASE("central fiber checks on a threefold") {
  const Fan fan = product_fan(hirzebruch_fan(2), projective_space_fan(1));
  const auto ts = enumerate_triples(fan, 3);
  CHECK_FALSE(ts.empty());
  for (const AdmissibleTriple& t : ts) {
    const DeformationData d = build_deformation(fan, t);
    CHECK(d.columns.size() == fan.num_rays() + 1);
    CHECK(all_passed(verify_central_fiber(fan, d)));
    CHECK_NOTHROW(ambient_fan(d));
  }
}

TEST_CASE("a corrupted deformation is caught") {
  const Fan f2 = hirzebruch_fan(2);
  DeformationData d = build_deformation(f2, hirzebruch_triple(1));
  d.psi(0, 3) = 2;
  auto checks = verify_central_fiber(f2, d);
  CHECK_FALSE(all_passed(checks));

  d = build_deformation(f2, hirzebruch_triple(1));
  std::swap(d.ambient_cones[0], d.ambient_cones[2]);
  checks = verify_central_fiber(f2, d);
  CHECK_FALSE(checks[0].passed);
  CHECK(checks[0].witness.find("sigma=0") != std::string::npos);
}

TEST_CASE("build rejects bad triples") {
  const Fan f2 = hirzebruch_fan(2);
  CHECK_THROWS_AS(build_deformation(f2, {make_vec({-1, -1}), 1, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_deformation(f2, {make_vec({0, 0}), 1, {0}}), std::invalid_argument);
}
