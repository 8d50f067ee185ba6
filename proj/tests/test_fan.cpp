#include "doctest.h"
#include "toric/fan.hpp"

using namespace toric;

namespace {

Fan p2_without_cone() {
  Fan fan = projective_space_fan(2);
  fan.max_cones = {{0, 1}, {0, 2}};  // drop the cone on rays 2, 3
  return fan;
}

}  // namespace

TEST_CASE("validate standard fans") {
  const FanReport p2 = validate(projective_space_fan(2));
  CHECK(p2.smooth);
  CHECK(p2.complete);
  CHECK(p2.simplicial);

  const FanReport f2 = validate(hirzebruch_fan(2));
  CHECK(f2.smooth);
  CHECK(f2.complete);

  const FanReport holed = validate(p2_without_cone());
  CHECK(holed.smooth);
  CHECK_FALSE(holed.complete);
}

TEST_CASE("validate higher-dimensional fans") {
  CHECK(validate(projective_space_fan(3)).complete);
  const Fan p1 = projective_space_fan(1);
  CHECK(validate(p1).complete);
  const Fan cube = product_fan(product_fan(p1, p1), p1);
  const FanReport rep = validate(cube);
  CHECK(rep.smooth);
  CHECK(rep.complete);

  Fan holed = projective_space_fan(3);
  holed.max_cones.pop_back();
  CHECK_FALSE(validate(holed).complete);
}

TEST_CASE("validate detects non-smooth and wrapped fans") {
  Fan singular;
  singular.dim = 2;
  singular.rays = {make_vec({1, 0}), make_vec({1, 2}), make_vec({-1, -1})};
  singular.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  const FanReport rep = validate(singular);
  CHECK(rep.simplicial);
  CHECK_FALSE(rep.smooth);
  CHECK(rep.complete);
  CHECK_THROWS_AS(cox_data(singular), FanError);

  // Cones that overlap: angular gaps do not close up.
  Fan wrapped;
  wrapped.dim = 2;
  wrapped.rays = {make_vec({1, 0}), make_vec({0, 1}), make_vec({-1, 0}), make_vec({0, -1})};
  wrapped.max_cones = {{0, 2}, {1, 2}, {1, 3}, {0, 3}};
  CHECK_FALSE(validate(wrapped).complete);
}

TEST_CASE("structural errors name the offending index") {
  Fan fan = hirzebruch_fan(2);
  fan.rays[0] = make_vec({2, 4});
  CHECK_THROWS_WITH_AS(checked_fan(fan), "non-primitive ray 0", FanError);

  fan = hirzebruch_fan(2);
  fan.rays[3] = make_vec({0, 1});
  CHECK_THROWS_WITH_AS(checked_fan(fan), "duplicate ray 3", FanError);

  fan = hirzebruch_fan(2);
  fan.max_cones.push_back({});
  CHECK_THROWS_WITH_AS(checked_fan(fan), "empty cone 4", FanError);

  fan = hirzebruch_fan(2);
  fan.max_cones[1] = {1, 7};
  CHECK_THROWS_WITH_AS(checked_fan(fan), "bad ray index 7 in cone 1", FanError);

  fan = hirzebruch_fan(2);
  fan.rays.push_back(make_vec({1, 1}));
  CHECK_THROWS_WITH_AS(checked_fan(fan), "ray 4 lies in no maximal cone", FanError);

  fan = hirzebruch_fan(2);
  fan.rays[2] = make_vec({0, 0});
  CHECK_THROWS_AS(checked_fan(fan), FanError);

  CHECK_NOTHROW(checked_fan(hirzebruch_fan(3)));
}

TEST_CASE("cox data") {
  for (long long n = 0; n <= 5; ++n) {
    const CoxData cox = cox_data(hirzebruch_fan(n));
    CHECK(cox.Q == IntMat{{1, 0, 1, n}, {0, 1, 0, 1}});
    CHECK(cox.cl_rank == 2);
    CHECK((cox.Q * cox.P.transpose()).is_zero());
    CHECK(cox.P == IntMat{{1, 0, -1, 0}, {0, 1, n, -1}});
  }
  const CoxData line = cox_data(projective_space_fan(1));
  CHECK(line.Q == IntMat{{1, 1}});

  const CoxData p2 = cox_data(projective_space_fan(2));
  CHECK(p2.Q == IntMat{{1, 1, 1}});
  CHECK(p2.irrelevant_components == std::vector<Cone>{{2}, {1}, {0}});

  const Fan p1 = projective_space_fan(1);
  const Fan cube = product_fan(product_fan(p1, p1), p1);
  const CoxData c3 = cox_data(cube);
  CHECK(c3.cl_rank == cube.num_rays() - cube.dim);
  CHECK((c3.Q * c3.P.transpose()).is_zero());

  CHECK_THROWS_AS(cox_data(p2_without_cone()), FanError);
}

TEST_CASE("cone_containing") {
  const Fan f2 = hirzebruch_fan(2);
  CHECK(cone_containing(f2, {0, 1}) == std::optional<std::size_t>{0});
  CHECK_FALSE(cone_containing(f2, {0, 2}).has_value());
  CHECK_FALSE(cone_containing(f2, {1, 3}).has_value());
  const Fan p2 = projective_space_fan(2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(cone_containing(p2, {i, j}).has_value());

  // Monotone: a cone found for a set is found for each subset.
  const Fan p3 = projective_space_fan(3);
  for (unsigned mask = 0; mask < 16; ++mask) {
    Cone s;
    for (std::size_t i = 0; i < 4; ++i)
      if ((mask >> i) & 1u) s.push_back(i);
    if (!cone_containing(p3, s)) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Cone sub = s;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(cone_containing(p3, sub).has_value());
    }
  }
}

TEST_CASE("primitive collections") {
  CHECK(primitive_collections(hirzebruch_fan(2)) == std::vector<Cone>{{0, 2}, {1, 3}});
  CHECK(primitive_collections(projective_space_fan(2)) == std::vector<Cone>{{0, 1, 2}});
}
