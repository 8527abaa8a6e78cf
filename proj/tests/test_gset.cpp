#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqmon/error.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace eqmon;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("example 1 orbits and stabilizers") {
  GSet const X = fixtures::example1();
  CHECK(X.size() == 4);
  CHECK(X.orbit_count() == 3);
  CHECK(X.orbit_points() == std::vector<std::vector<Point>>{{0}, {1, 2}, {3}});
  CHECK(X.orbit_representatives() == std::vector<Point>{0, 1, 3});
  CHECK(X.stabilizer(0) == whole_group(X.group()));
  CHECK(X.stabilizer(1) == trivial_subgroup());
  CHECK(orbit(X, 2) == Orbit{{1, 2}, 1});
  CHECK(orbits(X).size() == 3);

  auto const bs = boxes(X);
  REQUIRE(bs.size() == 2);
  CHECK(bs[0].points == std::vector<Point>{0, 3});
  CHECK(bs[1].points == std::vector<Point>{1, 2});
  CHECK(box_representatives(X, bs[0]) == std::vector<Point>{0, 3});
  CHECK(box_leq(X, bs[1], bs[0]));
  CHECK_FALSE(box_leq(X, bs[0], bs[1]));
  CHECK(stabilizer_classes(X).size() == 2);

  CHECK(is_invariant_subset(X, std::vector<Point>{1, 2}));
  CHECK_FALSE(is_invariant_subset(X, std::vector<Point>{1}));
}

TEST_CASE("action validation") {
  Group const Z2 = build_named_group(GroupSpec::cyclic(2));
  CHECK(code_of([&] { build_gset(Z2, {{0, 1, 2}, {1, 2, 0}}); }) ==
        ErrorCode::CompatibilityViolated);
  CHECK(code_of([&] { build_gset(Z2, {{1, 0}, {1, 0}}); }) == ErrorCode::IdentityAxiomViolated);
  CHECK(code_of([&] { build_gset(Z2, {{0, 1}}); }) == ErrorCode::BadDimensions);
  CHECK(code_of([&] { build_gset(Z2, {{0, 1}, {1}}); }) == ErrorCode::BadDimensions);
  CHECK(code_of([&] { build_gset(Z2, {{}, {}}); }) == ErrorCode::EmptyPointSet);
  CHECK(code_of([&] { build_gset(Z2, {{0, 5}, {5, 0}}); }) == ErrorCode::BadDimensions);
}

TEST_CASE("coset spaces") {
  Group const Z2 = build_named_group(GroupSpec::cyclic(2));
  GSet const X = build_coset_gset(Z2, {whole_group(Z2), trivial_subgroup(), whole_group(Z2)});
  CHECK(X.size() == 4);
  std::vector<std::size_t> sizes;
  for (auto const& o : X.orbit_points()) {
    sizes.push_back(o.size());
  }
  CHECK(sizes == std::vector<std::size_t>{1, 2, 1});

  Group const S3 = build_named_group(GroupSpec::symmetric(3));
  Subgroup const T = subgroup_generated(S3, std::vector<Element>{*S3.find("(0 1)")});
  GSet const Y = build_coset_gset(S3, {T});
  CHECK(Y.size() == 3);
  CHECK(Y.stabilizer(0) == T);
}

TEST_CASE("orbit-stabilizer and action axioms on the corpus") {
  for (GSet const& X : fixtures::small_corpus(40, 12)) {
    auto const a = oracle::action_of(X);
    Group const& G = X.group();
    for (Point x = 0; x < X.size(); ++x) {
      auto const orb = oracle::orbit(a, x);
      auto const stab = oracle::stabilizer(a, x);
      CHECK(orb.size() * stab.size() == G.order());
      CHECK(X.stabilizer(x).members() == std::vector<Element>(stab.begin(), stab.end()));
      CHECK(X.orbit_points()[X.orbit_index(x)] == std::vector<Point>(orb.begin(), orb.end()));
      for (Element g = 0; g < G.order(); ++g) {
        for (Element h = 0; h < G.order(); ++h) {
          CHECK(X.act(g, X.act(h, x)) == X.act(G.mul(g, h), x));
        }
        // G_{g.x} = g G_x g^-1
        CHECK(X.stabilizer(X.act(g, x)) == conjugate_subgroup(G, X.stabilizer(x), G.inv(g)));
      }
    }
    std::size_t covered = 0;
    for (auto const& b : boxes(X)) {
      covered += b.points.size();
      for (Point p : box_representatives(X, b)) {
        CHECK(X.stabilizer(p) == X.stabilizer(box_representatives(X, b).front()));
      }
    }
    CHECK(covered == X.size());
  }
}
