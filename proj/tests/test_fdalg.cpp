#include <random>

#include "doctest.h"
#include "iscp/fdalg.hpp"

using namespace iscp;
using namespace iscp::fd;

namespace {

std::shared_ptr<const isg::InverseSemigroup> z2() {
  return std::make_shared<isg::InverseSemigroup>(
      2, std::vector<int>{0, 1, 1, 0}, std::vector<int>{0, 1}, 0, std::nullopt,
      std::vector<std::string>{"1", "-1"});
}

std::shared_ptr<const isg::InverseSemigroup> s01m1() {
  return std::make_shared<isg::InverseSemigroup>(z2()->adjoin_zero());
}

Mat rand_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cd(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(m);
  Mat q = qr.householderQ();
  return q;
}

AlgElement rand_element(const FdAlgebra& a, const Ideal& support, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  AlgElement e(a);
  for (int b : support.elements())
    for (int i = 0; i < a.blocks[b]; ++i)
      for (int j = 0; j < a.blocks[b]; ++j) e.block(b)(i, j) = cd(g(rng), g(rng));
  return e;
}

// the {0,1,-1} action on A with both group elements acting identically and
// 0 acting as the identity on the ideal
PartialIsoAction trivial01m1(FdAlgebra a, const Ideal& ideal) {
  int k = a.num_blocks();
  std::vector<PartialIsoAction::ElementData> data(3);
  auto ident = [&](const Ideal& src) {
    PartialIsoAction::ElementData d;
    d.source = src;
    d.beta.assign(k, -1);
    d.u.assign(k, Mat());
    for (int b : src.elements()) {
      d.beta[b] = b;
      d.u[b] = Mat::Identity(a.blocks[b], a.blocks[b]);
    }
    return d;
  };
  data[0] = ident(SubSet::full(k));
  data[1] = ident(SubSet::full(k));
  data[2] = ident(ideal);
  return PartialIsoAction(s01m1(), std::move(a), std::move(data));
}

// Z/2 on a single matrix block by conjugation with a selfadjoint unitary
PartialIsoAction z2_ad(FdAlgebra a, const Mat& u) {
  std::vector<PartialIsoAction::ElementData> data(2);
  int k = a.num_blocks();
  data[0].source = SubSet::full(k);
  data[1].source = SubSet::full(k);
  for (int b = 0; b < k; ++b) {
    data[0].beta.push_back(b);
    data[0].u.push_back(Mat::Identity(a.blocks[b], a.blocks[b]));
    data[1].beta.push_back(b);
  }
  data[1].u.assign(1, u);
  return PartialIsoAction(z2(), std::move(a), std::move(data));
}

// action induced from a point action: blocks indexed by points, block maps
// from the point maps, unitaries from a coboundary so the composite law
// holds exactly
PartialIsoAction coboundary_action(std::shared_ptr<const isg::InverseSemigroup> S,
                                   const std::vector<isg::PartialBijection>& elems,
                                   const std::vector<int>& dims, unsigned seed) {
  std::mt19937_64 rng(seed);
  int k = (int)dims.size();
  FdAlgebra a{dims};
  std::vector<Mat> chart;
  for (int b = 0; b < k; ++b) chart.push_back(rand_unitary(dims[b], rng));
  std::vector<PartialIsoAction::ElementData> data;
  for (auto& p : elems) {
    PartialIsoAction::ElementData d;
    d.source = SubSet(k);
    d.beta.assign(k, -1);
    d.u.assign(k, Mat());
    for (int b = 0; b < k; ++b) {
      if (p.map[b] < 0) continue;
      d.source.set(b);
      d.beta[b] = p.map[b];
      d.u[b] = chart[p.map[b]] * chart[b].adjoint();
    }
    data.push_back(std::move(d));
  }
  return PartialIsoAction(std::move(S), std::move(a), std::move(data));
}

struct I2Model {
  std::shared_ptr<const isg::InverseSemigroup> S;
  std::vector<isg::PartialBijection> elems;
};

I2Model i2_model() {
  std::vector<isg::PartialBijection> gens;
  gens.push_back(isg::PartialBijection::identity(2));
  auto sw = isg::PartialBijection::identity(2);
  sw.map[0] = 1;
  sw.map[1] = 0;
  gens.push_back(sw);
  auto drop = isg::PartialBijection::identity(2);
  drop.map[1] = -1;
  gens.push_back(drop);
  auto g = isg::from_partial_bijections(2, gens);
  return {std::make_shared<isg::InverseSemigroup>(g.semigroup), g.elements};
}

}  // namespace

TEST_SUITE("fdalg") {
  TEST_CASE("validate accepts the standard models") {
    auto a = trivial01m1(FdAlgebra{{1, 1}}, SubSet::of(2, {0}));
    CHECK(a.source_ideal(2) == SubSet::of(2, {0}));

    Mat u(2, 2);
    u << 1, 0, 0, -1;
    auto m2 = z2_ad(FdAlgebra{{2}}, u);
    CHECK(m2.target_ideal(1) == SubSet::full(1));
  }

  TEST_CASE("non-unitary implementer is rejected") {
    Mat bad(2, 2);
    bad << 1, 0, 0, 2;
    CHECK_THROWS_AS(z2_ad(FdAlgebra{{2}}, bad), axiom_error);
  }

  TEST_CASE("validate catches maps that break the restriction law") {
    int k = 2;
    FdAlgebra a{{2, 1}};
    std::vector<PartialIsoAction::ElementData> data(3);
    for (int t = 0; t < 3; ++t) {
      data[t].source = (t == 2) ? SubSet::of(k, {0}) : SubSet::full(k);
      data[t].beta.assign(k, -1);
      data[t].u.assign(k, Mat());
      for (int b : data[t].source.elements()) {
        data[t].beta[b] = b;
        data[t].u[b] = Mat::Identity(a.blocks[b], a.blocks[b]);
      }
    }
    Mat w(2, 2);
    w << 0, 1, 1, 0;
    data[2].u[0] = w;  // zero no longer restricts the identity
    auto rep = PartialIsoAction::validate(*s01m1(), a, data);
    CHECK(!rep.valid);
  }

  TEST_CASE("ideal_I_tu") {
    auto a = trivial01m1(FdAlgebra{{1, 1}}, SubSet::of(2, {0}));
    CHECK(a.ideal_I_tu(0, 1) == SubSet::of(2, {0}));  // only v = 0 below 1,-1
    for (int t = 0; t < 3; ++t) CHECK(a.ideal_I_tu(t, t) == a.source_ideal(t));

    Mat u(2, 2);
    u << 1, 0, 0, -1;
    auto grp = z2_ad(FdAlgebra{{2}}, u);
    CHECK(grp.ideal_I_tu(0, 1).empty());  // no idempotent below the flip
  }

  TEST_CASE("theta is the identity on the common ideal") {
    auto a = trivial01m1(FdAlgebra{{2, 3}}, SubSet::of(2, {0}));
    std::mt19937_64 rng(7);
    auto xi = rand_element(a.A(), SubSet::of(2, {0}), rng);
    auto out = a.theta(1, 0, xi);
    CHECK((out - xi).max_abs() == 0.0);
    auto full = rand_element(a.A(), SubSet::full(2), rng);
    CHECK((a.theta(0, 0, full) - full).max_abs() == 0.0);
    CHECK_THROWS_AS(a.theta(1, 0, full), precondition_error);
  }

  TEST_CASE("theta cocycle law on a model with nontrivial lower bounds") {
    auto m = i2_model();
    std::mt19937_64 rng(11);
    auto act = coboundary_action(m.S, m.elems, {2, 2}, 17);
    for (int t = 0; t < m.S->size(); ++t)
      for (int u = 0; u < m.S->size(); ++u)
        for (int w = 0; w < m.S->size(); ++w) {
          Ideal common = act.ideal_I_tu(t, u) & act.ideal_I_tu(w, u) & act.source_ideal(u);
          if (common.empty()) continue;
          auto xi = rand_element(act.A(), common, rng);
          auto lhs = act.theta(w, t, act.theta(t, u, xi));
          auto rhs = act.theta(w, u, xi);
          CHECK((lhs - rhs).max_abs() < 1e-10);
        }
  }

  TEST_CASE("involution") {
    auto a = trivial01m1(FdAlgebra{{2, 2}}, SubSet::of(2, {0}));
    std::mt19937_64 rng(3);
    auto xi = rand_element(a.A(), SubSet::of(2, {0}), rng);
    CHECK((a.involution_J(2, xi) - xi.star()).max_abs() < 1e-12);

    Mat u(2, 2);
    u << 1, 0, 0, -1;
    auto m2 = z2_ad(FdAlgebra{{2}}, u);
    auto e12 = AlgElement::unit_matrix(m2.A(), 0, 0, 1);
    auto j = m2.involution_J(1, e12);
    auto expected = AlgElement::unit_matrix(m2.A(), 0, 1, 0) * cd(-1.0, 0.0);
    CHECK((j - expected).max_abs() < 1e-12);

    auto m = i2_model();
    auto act = coboundary_action(m.S, m.elems, {2, 2}, 23);
    for (int t = 0; t < m.S->size(); ++t) {
      auto x = rand_element(act.A(), act.source_ideal(t), rng);
      auto back = act.involution_J(m.S->inv(t), act.involution_J(t, x));
      CHECK((back - x).max_abs() < 1e-10);
    }
  }

  TEST_CASE("complement of block ideals") {
    Ideal j = SubSet::of(3, {0, 1});
    CHECK(complement_in(SubSet(3), j) == j);
    CHECK(complement_in(j, j).empty());
    CHECK(complement_in(SubSet::of(3, {0}), SubSet::of(3, {0, 1})) == SubSet::of(3, {1}));
    CHECK_THROWS_AS(complement_in(SubSet::of(3, {2}), SubSet::of(3, {0})), precondition_error);
  }

  TEST_CASE("bimodule identities of the multiplication maps") {
    auto m = i2_model();
    std::mt19937_64 rng(29);
    auto act = coboundary_action(m.S, m.elems, {2, 2}, 31);
    int n = m.S->size();
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u) {
        int tu = m.S->mul(t, u);
        auto xi1 = rand_element(act.A(), act.source_ideal(t), rng);
        auto xi2 = rand_element(act.A(), act.source_ideal(t), rng);
        auto eta1 = rand_element(act.A(), act.source_ideal(u), rng);
        auto eta2 = rand_element(act.A(), act.source_ideal(u), rng);
        auto p1 = act.mu(t, u, xi1, eta1);
        auto p2 = act.mu(t, u, xi2, eta2);

        auto lhs = act.right_inner(tu, p1, p2);
        auto rhs = act.right_inner(u, eta1, act.lmul(u, act.right_inner(t, xi1, xi2), eta2));
        CHECK((lhs - rhs).max_abs() < 1e-9);

        auto lhs2 = act.left_inner(tu, p1, p2);
        auto rhs2 = act.left_inner(t, act.rmul(t, xi1, act.left_inner(u, eta1, eta2)), xi2);
        CHECK((lhs2 - rhs2).max_abs() < 1e-9);
      }
  }

  TEST_CASE("inner products are linked") {
    auto m = i2_model();
    std::mt19937_64 rng(41);
    auto act = coboundary_action(m.S, m.elems, {3, 3}, 43);
    for (int t = 0; t < m.S->size(); ++t) {
      auto zeta = rand_element(act.A(), act.source_ideal(t), rng);
      auto xi = rand_element(act.A(), act.source_ideal(t), rng);
      auto eta = rand_element(act.A(), act.source_ideal(t), rng);
      auto lhs = act.rmul(t, zeta, act.right_inner(t, xi, eta));
      auto rhs = act.lmul(t, act.left_inner(t, zeta, xi), eta);
      CHECK((lhs - rhs).max_abs() < 1e-10);
    }
  }

  TEST_CASE("support projection lattice laws") {
    FdAlgebra a{{2, 1, 3}};
    for (int mi = 0; mi < 8; ++mi)
      for (int mj = 0; mj < 8; ++mj) {
        Ideal i(3), j(3);
        for (int b = 0; b < 3; ++b) {
          if ((mi >> b) & 1) i.set(b);
          if ((mj >> b) & 1) j.set(b);
        }
        auto pi = AlgElement::support_projection(a, i);
        auto pj = AlgElement::support_projection(a, j);
        CHECK((pi * pj - AlgElement::support_projection(a, i & j)).max_abs() == 0.0);
        auto lhs = pi + pj;
        auto rhs = AlgElement::support_projection(a, i | j) +
                   AlgElement::support_projection(a, i & j);
        CHECK((lhs - rhs).max_abs() == 0.0);
      }
  }

  TEST_CASE("canonical phase and norms") {
    Mat u(2, 2);
    u << cd(0, 1), 0, 0, cd(0, 1);
    Mat c = canonical_phase(u);
    CHECK(std::abs(c(0, 0).real() - 1.0) < 1e-12);
    CHECK(std::abs(c(0, 0).imag()) < 1e-12);

    FdAlgebra a{{2, 1}};
    AlgElement e(a);
    e.block(0) << 3, 0, 0, 1;
    e.block(1) << 2;
    CHECK(e.norm() == doctest::Approx(3.0));
    CHECK(e.min_eigenvalue() == doctest::Approx(1.0));
  }
}
