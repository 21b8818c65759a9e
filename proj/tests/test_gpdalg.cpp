#include <numeric>
#include <random>

#include "doctest.h"
#include "iscp/corpus.hpp"
#include "iscp/gpdalg.hpp"

using namespace iscp;
using namespace iscp::gpd;
namespace cp = iscp::corpus;

namespace {

act::SpaceAction z2_trivial_on_point() {
  return cp::trivial_group_action(cp::z2(), topo::FiniteSpace::discrete(1));
}

// the classical transformation groupoid of a global group action on a
// discrete point set: arrows are (point, group element) pairs
FiniteGroupoid classical_transformation_groupoid(const act::SpaceAction& a) {
  const auto& S = a.S();
  int nx = a.X().points(), ng = S.size();
  int n = nx * ng;
  auto id = [&](int x, int g) { return x * ng + g; };
  SubSet units(n);
  std::vector<int> src(n), rng(n), inv(n);
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  int one = *S.unit();
  for (int x = 0; x < nx; ++x) units.set(id(x, one));
  for (int x = 0; x < nx; ++x)
    for (int g = 0; g < ng; ++g) {
      src[id(x, g)] = id(x, one);
      rng[id(x, g)] = id(a.apply(g, x), one);
      inv[id(x, g)] = id(a.apply(g, x), S.inv(g));
    }
  for (int x = 0; x < nx; ++x)
    for (int g = 0; g < ng; ++g)
      for (int y = 0; y < nx; ++y)
        for (int h = 0; h < ng; ++h)
          if (x == a.apply(h, y)) comp[id(x, g)][id(y, h)] = id(y, S.mul(g, h));
  return FiniteGroupoid(n, units, src, rng, comp, inv);
}

}  // namespace

TEST_SUITE("gpdalg") {
  TEST_CASE("transformation groupoid of the trivial group action on a point") {
    auto gg = from_discrete_action(z2_trivial_on_point());
    CHECK(gg.G.arrows() == 2);
    CHECK(gg.G.units().count() == 1);
    int other = gg.G.units().complement().elements()[0];
    CHECK(gg.G.compose(other, other) == gg.unit_at[0]);
  }

  TEST_CASE("grading of the {0,1,-1} groupoid on two discrete points") {
    auto a = cp::action_01m1(topo::FiniteSpace::discrete(2), SubSet::of(2, {0}));
    auto gg = from_discrete_action(a);
    CHECK(gg.G.arrows() == 3);
    // the group slots intersect exactly in the glued unit at the first point
    SubSet common = gg.grading[0] & gg.grading[1];
    CHECK(common.count() == 1);
    CHECK(common.test(gg.unit_at[0]));
    CHECK(gg.grading[2] == common);
  }

  TEST_CASE("non-discrete spaces are rejected") {
    auto a = cp::action_01m1(cp::sierpinski(), SubSet::of(2, {0}));
    CHECK_THROWS_AS(from_discrete_action(a), precondition_error);
  }

  TEST_CASE("convolution algebra block structures") {
    // the two-element group gives two scalar blocks
    auto z2g = from_discrete_action(z2_trivial_on_point());
    auto conv = convolution_algebra(z2g.G, 3);
    CHECK(conv.presentation.blocks == std::vector<int>{1, 1});

    // the full pair groupoid on two points gives one 2x2 block
    auto i2 = cp::defining_action(cp::symmetric_inverse_monoid(2));
    auto pair = from_discrete_action(i2);
    CHECK(pair.G.arrows() == 4);
    auto conv2 = convolution_algebra(pair.G, 5);
    CHECK(conv2.presentation.blocks == std::vector<int>{2});

    // isolated units give scalar blocks
    auto trivial = std::make_shared<isg::InverseSemigroup>(
        1, std::vector<int>{0}, std::vector<int>{0}, 0, std::nullopt,
        std::vector<std::string>{"1"});
    auto units_only = from_discrete_action(
        cp::trivial_group_action(trivial, topo::FiniteSpace::discrete(2)));
    auto conv3 = convolution_algebra(units_only.G, 7);
    CHECK(conv3.presentation.blocks == std::vector<int>{1, 1});
  }

  TEST_CASE("convolution is associative with an involutive star") {
    auto a = cp::action_01m1(topo::FiniteSpace::discrete(2), SubSet::of(2, {0}));
    auto gg = from_discrete_action(a);
    auto conv = convolution_algebra(gg.G, 11);
    std::mt19937_64 rng(13);
    std::normal_distribution<double> g;
    for (int i = 0; i < 5; ++i) {
      la::Vec f1(gg.G.arrows()), f2(gg.G.arrows()), f3(gg.G.arrows());
      for (int j = 0; j < gg.G.arrows(); ++j) {
        f1(j) = fd::cd(g(rng), g(rng));
        f2(j) = fd::cd(g(rng), g(rng));
        f3(j) = fd::cd(g(rng), g(rng));
      }
      auto lhs = conv.convolve(gg.G, conv.convolve(gg.G, f1, f2), f3);
      auto rhs = conv.convolve(gg.G, f1, conv.convolve(gg.G, f2, f3));
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
      CHECK((conv.involution(gg.G, conv.involution(gg.G, f1)) - f1).cwiseAbs().maxCoeff() <
            1e-12);
      auto star_prod = conv.involution(gg.G, conv.convolve(gg.G, f1, f2));
      auto prod_stars =
          conv.convolve(gg.G, conv.involution(gg.G, f2), conv.involution(gg.G, f1));
      CHECK((star_prod - prod_stars).cwiseAbs().maxCoeff() < 1e-10);
    }
    // dimension equals the number of arrows
    std::vector<la::Vec> vecs;
    for (auto& m : conv.basis) vecs.push_back(Eigen::Map<const la::Vec>(m.data(), m.size()));
    CHECK(la::span_rank(vecs) == gg.G.arrows());
  }

  TEST_CASE("regular representations are jointly faithful") {
    for (auto name_action : {std::string("z2"), std::string("pair"), std::string("units")}) {
      GradedGroupoid gg = [&] {
        if (name_action == "z2") return from_discrete_action(z2_trivial_on_point());
        if (name_action == "pair")
          return from_discrete_action(cp::defining_action(cp::symmetric_inverse_monoid(2)));
        auto trivial = std::make_shared<isg::InverseSemigroup>(
            1, std::vector<int>{0}, std::vector<int>{0}, 0, std::nullopt,
            std::vector<std::string>{"1"});
        return from_discrete_action(
            cp::trivial_group_action(trivial, topo::FiniteSpace::discrete(2)));
      }();
      auto fam = regular_representations(gg.G);
      CHECK(fam.direct_sum_faithful);
    }
    // the pair groupoid fiber representation is the defining one
    auto pair = from_discrete_action(cp::defining_action(cp::symmetric_inverse_monoid(2)));
    auto fam = regular_representations(pair.G);
    REQUIRE(fam.fiber.size() == 2);
    CHECK(fam.fiber[0].size() == 2);
    std::vector<la::Vec> vecs;
    for (auto& m : fam.lambda[0]) vecs.push_back(Eigen::Map<const la::Vec>(m.data(), m.size()));
    CHECK(la::span_rank(vecs) == 4);  // all of the 2x2 matrices
  }

  TEST_CASE("inner exactness of restriction sequences") {
    auto a = cp::action_01m1(topo::FiniteSpace::discrete(2), SubSet::of(2, {0}));
    auto gg = from_discrete_action(a);
    int n = gg.G.arrows();

    SubSet empty(n);
    auto r0 = inner_exactness_check(gg.G, empty);
    CHECK(r0.exact);
    CHECK(r0.dim_over_u == 0);

    auto rfull = inner_exactness_check(gg.G, gg.G.units());
    CHECK(rfull.exact);
    CHECK(rfull.dim_over_f == 0);

    // the invariant subset consisting of the glued point
    SubSet u(n);
    u.set(gg.unit_at[0]);
    auto r1 = inner_exactness_check(gg.G, u);
    CHECK(r1.invariant);
    CHECK(r1.exact);
    CHECK(r1.dim_over_u == 1);
    CHECK(r1.dim_over_f == 2);

    // a non-invariant subset is reported as such
    auto swap = cp::defining_action(cp::symmetric_inverse_monoid(2));
    auto gswap = from_discrete_action(swap);
    SubSet not_inv(gswap.G.arrows());
    not_inv.set(gswap.unit_at[0]);
    CHECK(!inner_exactness_check(gswap.G, not_inv).invariant);
  }

  TEST_CASE("iterated isomorphism on the point with the two-element group") {
    auto rep = verify_iterated_iso(z2_trivial_on_point(), 17);
    CHECK(rep.dim_crossed == 2);
    CHECK(rep.dim_convolution == 2);
    CHECK(rep.iso);
  }

  TEST_CASE("iterated isomorphism on the {0,1,-1} two-point model") {
    auto a = cp::action_01m1(topo::FiniteSpace::discrete(2), SubSet::of(2, {0}));
    auto rep = verify_iterated_iso(a, 19);
    CHECK(rep.dim_crossed == 3);
    CHECK(rep.dim_convolution == 3);
    CHECK(rep.rep_axiom_defect < 1e-12);
    CHECK(rep.expectation_defect < 1e-12);
    CHECK(rep.iso);
  }

  TEST_CASE("global group actions match the classical transformation groupoid") {
    std::vector<std::vector<int>> maps = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    act::SpaceAction rot(cp::z3(), topo::FiniteSpace::discrete(3), maps, false);
    auto rep = verify_iterated_iso(rot, 23);
    CHECK(rep.iso);

    auto classical = classical_transformation_groupoid(rot);
    CHECK(classical.arrows() == rep.dim_convolution);
    auto ours = from_discrete_action(rot);
    auto conv_ours = convolution_algebra(ours.G, 29);
    auto conv_classical = convolution_algebra(classical, 29);
    CHECK(conv_ours.presentation.blocks == conv_classical.presentation.blocks);
  }

  TEST_CASE("iterated isomorphism across the discrete corpus") {
    auto corpus = cp::discrete_action_corpus();
    REQUIRE(corpus.size() >= 15);
    for (auto& na : corpus) {
      auto rep = verify_iterated_iso(na.action, 31);
      CHECK(rep.iso);
      CHECK(rep.dim_crossed == rep.dim_convolution);
    }
  }
}
