#include "iscp/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace iscp::corpus {

using fd::AlgElement;
using fd::FdAlgebra;
using fd::Mat;
using fd::cd;

std::shared_ptr<const isg::InverseSemigroup> z2() {
  return std::make_shared<isg::InverseSemigroup>(
      2, std::vector<int>{0, 1, 1, 0}, std::vector<int>{0, 1}, 0, std::nullopt,
      std::vector<std::string>{"1", "-1"});
}

std::shared_ptr<const isg::InverseSemigroup> z2_with_zero() {
  return std::make_shared<isg::InverseSemigroup>(z2()->adjoin_zero());
}

std::shared_ptr<const isg::InverseSemigroup> z3() {
  return std::make_shared<isg::InverseSemigroup>(
      3, std::vector<int>{0, 1, 2, 1, 2, 0, 2, 0, 1}, std::vector<int>{0, 2, 1}, 0, std::nullopt,
      std::vector<std::string>{"1", "g", "gg"});
}

std::shared_ptr<const isg::InverseSemigroup> z3_with_zero() {
  return std::make_shared<isg::InverseSemigroup>(z3()->adjoin_zero());
}

Generated symmetric_inverse_monoid(int n) {
  std::vector<isg::PartialBijection> gens;
  gens.push_back(isg::PartialBijection::identity(n));
  if (n >= 2) {
    auto sw = isg::PartialBijection::identity(n);
    sw.map[0] = 1;
    sw.map[1] = 0;
    gens.push_back(sw);
    auto cyc = isg::PartialBijection::empty_map(n);
    for (int i = 0; i < n; ++i) cyc.map[i] = (i + 1) % n;
    gens.push_back(cyc);
  }
  auto drop = isg::PartialBijection::identity(n);
  drop.map[n - 1] = -1;
  gens.push_back(drop);
  auto g = isg::from_partial_bijections(n, gens);
  return {std::make_shared<isg::InverseSemigroup>(g.semigroup), g.elements};
}

Generated generated_monoid(int n, std::vector<isg::PartialBijection> extra) {
  std::vector<isg::PartialBijection> gens;
  gens.push_back(isg::PartialBijection::identity(n));
  for (auto& p : extra) gens.push_back(p);
  auto g = isg::from_partial_bijections(n, gens);
  return {std::make_shared<isg::InverseSemigroup>(g.semigroup), g.elements};
}

topo::FiniteSpace sierpinski() {
  return topo::FiniteSpace(2, {SubSet(2), SubSet::of(2, {0}), SubSet::full(2)}, {"a", "b"});
}

topo::FiniteSpace chain3() {
  return topo::FiniteSpace(
      3, {SubSet(3), SubSet::of(3, {0}), SubSet::of(3, {0, 1}), SubSet::full(3)}, {"a", "b", "c"});
}

act::SpaceAction action_01m1(topo::FiniteSpace X, const SubSet& d0) {
  auto S = z2_with_zero();
  int nx = X.points();
  std::vector<std::vector<int>> maps(3, std::vector<int>(nx));
  std::iota(maps[0].begin(), maps[0].end(), 0);
  std::iota(maps[1].begin(), maps[1].end(), 0);
  for (int x = 0; x < nx; ++x) maps[2][x] = d0.test(x) ? x : -1;
  return act::SpaceAction(S, std::move(X), std::move(maps), d0.empty());
}

act::SpaceAction defining_action(const Generated& g) {
  int n = g.elements.empty() ? 0 : g.elements[0].n;
  std::vector<std::vector<int>> maps;
  for (auto& p : g.elements) maps.push_back(p.map);
  bool zero_preserving = g.S->zero().has_value();
  return act::SpaceAction(g.S, topo::FiniteSpace::discrete(n), std::move(maps), zero_preserving);
}

act::SpaceAction trivial_group_action(std::shared_ptr<const isg::InverseSemigroup> G,
                                      topo::FiniteSpace X) {
  int nx = X.points();
  std::vector<int> ident(nx);
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<std::vector<int>> maps(G->size(), ident);
  return act::SpaceAction(std::move(G), std::move(X), std::move(maps), false);
}

std::vector<NamedSpaceAction> space_action_corpus() {
  std::vector<NamedSpaceAction> out;
  auto add = [&](std::string name, act::SpaceAction a) {
    out.push_back({std::move(name), std::move(a)});
  };

  for (auto& [sp_name, sp] : std::vector<std::pair<std::string, topo::FiniteSpace>>{
           {"sierpinski", sierpinski()},
           {"chain3", chain3()},
           {"discrete2", topo::FiniteSpace::discrete(2)},
           {"discrete3", topo::FiniteSpace::discrete(3)}}) {
    int idx = 0;
    for (auto& o : sp.opens())
      add("01m1-" + sp_name + "-d0v" + std::to_string(idx++), action_01m1(sp, o));
  }

  add("i2-defining", defining_action(symmetric_inverse_monoid(2)));
  add("i3-defining", defining_action(symmetric_inverse_monoid(3)));

  add("universal-01m1", act::universal_action(z2_with_zero()).action);
  add("universal-z3zero", act::universal_action(z3_with_zero()).action);
  add("universal-i2", act::universal_action(symmetric_inverse_monoid(2).S).action);
  add("universal-i3", act::universal_action(symmetric_inverse_monoid(3).S).action);

  add("z2-trivial-point", trivial_group_action(z2(), topo::FiniteSpace::discrete(1)));
  add("z2-trivial-sierpinski", trivial_group_action(z2(), sierpinski()));
  add("z3-trivial-chain3", trivial_group_action(z3(), chain3()));

  {
    // rotation of the three-element group on three discrete points
    std::vector<std::vector<int>> maps = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    add("z3-rotation-discrete3",
        act::SpaceAction(z3(), topo::FiniteSpace::discrete(3), maps, false));
  }
  {
    // swap of two discrete points
    std::vector<std::vector<int>> maps = {{0, 1}, {1, 0}};
    add("z2-swap-discrete2", act::SpaceAction(z2(), topo::FiniteSpace::discrete(2), maps, false));
  }

  // partial-identity monoids acting on their defining points
  {
    auto drop = isg::PartialBijection::identity(2);
    drop.map[1] = -1;
    add("semilattice2-defining", defining_action(generated_monoid(2, {drop})));
  }
  {
    auto d1 = isg::PartialBijection::identity(3);
    d1.map[2] = -1;
    auto d2 = isg::PartialBijection::identity(3);
    d2.map[0] = -1;
    add("semilattice3-defining", defining_action(generated_monoid(3, {d1, d2})));
  }
  {
    auto shift = isg::PartialBijection::empty_map(2);
    shift.map[0] = 1;
    add("shift2-defining", defining_action(generated_monoid(2, {shift})));
  }
  {
    auto shift = isg::PartialBijection::empty_map(3);
    shift.map[0] = 1;
    shift.map[1] = 2;
    add("shift3-defining", defining_action(generated_monoid(3, {shift})));
  }
  {
    auto sw = isg::PartialBijection::identity(3);
    sw.map[0] = 1;
    sw.map[1] = 0;
    add("s2-on-3pts-defining", defining_action(generated_monoid(3, {sw})));
  }

  // the chain monoid acting on the Sierpinski space by partial identities
  {
    auto drop = isg::PartialBijection::identity(2);
    drop.map[1] = -1;
    auto g = generated_monoid(2, {drop});
    std::vector<std::vector<int>> maps;
    for (auto& p : g.elements) maps.push_back(p.map);
    add("chain-monoid-sierpinski",
        act::SpaceAction(g.S, sierpinski(), maps, g.S->zero().has_value()));
  }

  return out;
}

std::vector<NamedSpaceAction> discrete_action_corpus() {
  std::vector<NamedSpaceAction> out;
  for (auto& na : space_action_corpus())
    if (na.action.X().is_discrete()) out.push_back(na);
  return out;
}

Mat random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cd(g(rng), g(rng));
  Eigen::HouseholderQR<Mat> qr(m);
  return Mat(qr.householderQ());
}

AlgElement random_element(const FdAlgebra& a, const fd::Ideal& support, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  AlgElement e(a);
  for (int b : support.elements())
    for (int i = 0; i < a.blocks[b]; ++i)
      for (int j = 0; j < a.blocks[b]; ++j) e.block(b)(i, j) = cd(g(rng), g(rng));
  return e;
}

xp::CrossedElement random_crossed(const fd::PartialIsoAction& act, std::mt19937_64& rng,
                                  int max_terms) {
  xp::CrossedElement x(act);
  int n = act.S().size();
  std::uniform_int_distribution<int> pick(0, n - 1);
  int terms = 1 + (int)(rng() % (std::uint64_t)max_terms);
  for (int i = 0; i < terms; ++i) {
    int t = pick(rng);
    if (act.source_ideal(t).empty()) continue;
    x.add_coeff(t, random_element(act.A(), act.source_ideal(t), rng));
  }
  return x;
}

fd::PartialIsoAction trivial_01m1_fd(FdAlgebra A, const fd::Ideal& ideal) {
  int k = A.num_blocks();
  std::vector<fd::PartialIsoAction::ElementData> data(3);
  auto ident = [&](const fd::Ideal& src) {
    fd::PartialIsoAction::ElementData d;
    d.source = src;
    d.beta.assign(k, -1);
    d.u.assign(k, Mat());
    for (int b : src.elements()) {
      d.beta[b] = b;
      d.u[b] = Mat::Identity(A.blocks[b], A.blocks[b]);
    }
    return d;
  };
  data[0] = ident(SubSet::full(k));
  data[1] = ident(SubSet::full(k));
  data[2] = ident(ideal);
  return fd::PartialIsoAction(z2_with_zero(), std::move(A), std::move(data));
}

fd::PartialIsoAction z2_swap_cc() {
  FdAlgebra A{{1, 1}};
  std::vector<fd::PartialIsoAction::ElementData> data(2);
  data[0].source = SubSet::full(2);
  data[0].beta = {0, 1};
  data[0].u = {Mat::Identity(1, 1), Mat::Identity(1, 1)};
  data[1].source = SubSet::full(2);
  data[1].beta = {1, 0};
  data[1].u = {Mat::Identity(1, 1), Mat::Identity(1, 1)};
  return fd::PartialIsoAction(z2(), std::move(A), std::move(data));
}

fd::PartialIsoAction z2_ad_m2() {
  FdAlgebra A{{2}};
  Mat w(2, 2);
  w << 1, 0, 0, -1;
  std::vector<fd::PartialIsoAction::ElementData> data(2);
  data[0].source = SubSet::full(1);
  data[0].beta = {0};
  data[0].u = {Mat::Identity(2, 2)};
  data[1].source = SubSet::full(1);
  data[1].beta = {0};
  data[1].u = {w};
  return fd::PartialIsoAction(z2(), std::move(A), std::move(data));
}

fd::PartialIsoAction coboundary_action(std::shared_ptr<const isg::InverseSemigroup> S,
                                       const std::vector<isg::PartialBijection>& elems,
                                       const std::vector<int>& dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int k = (int)dims.size();
  FdAlgebra a{dims};
  std::vector<Mat> chart;
  for (int b = 0; b < k; ++b) chart.push_back(random_unitary(dims[b], rng));
  std::vector<fd::PartialIsoAction::ElementData> data;
  for (auto& p : elems) {
    fd::PartialIsoAction::ElementData d;
    d.source = SubSet(k);
    d.beta.assign(k, -1);
    d.u.assign(k, Mat());
    for (int b = 0; b < k; ++b) {
      if (p.map[b] < 0) continue;
      if (dims[p.map[b]] != dims[b])
        throw structural_error("block dimensions not constant on orbits");
      d.source.set(b);
      d.beta[b] = p.map[b];
      d.u[b] = chart[p.map[b]] * chart[b].adjoint();
    }
    data.push_back(std::move(d));
  }
  return fd::PartialIsoAction(std::move(S), std::move(a), std::move(data));
}

fd::PartialIsoAction random_fd_action(std::uint64_t seed) {
  for (int attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed * 6364136223846793005ull + attempt + 1);
    int n = 2 + (int)(rng() % 2);  // 2 or 3 points
    int ngens = 1 + (int)(rng() % 2);
    std::vector<isg::PartialBijection> gens;
    for (int g = 0; g < ngens; ++g) {
      isg::PartialBijection p = isg::PartialBijection::empty_map(n);
      std::vector<int> targets(n);
      std::iota(targets.begin(), targets.end(), 0);
      std::shuffle(targets.begin(), targets.end(), rng);
      int ti = 0;
      for (int x = 0; x < n; ++x)
        if (rng() % 2) p.map[x] = targets[ti++];
      gens.push_back(p);
    }
    Generated g;
    try {
      g = generated_monoid(n, gens);
    } catch (const resource_error&) {
      continue;
    }
    if (g.S->size() < 2 || g.S->size() > 12) continue;

    // block dimensions constant on the orbits of the point action
    std::vector<int> orbit(n);
    std::iota(orbit.begin(), orbit.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return orbit[x] == x ? x : orbit[x] = find(orbit[x]);
    };
    for (auto& p : g.elements)
      for (int x = 0; x < n; ++x)
        if (p.map[x] >= 0) orbit[find(x)] = find(p.map[x]);
    std::vector<int> dims(n, 0);
    for (int x = 0; x < n; ++x) {
      int root = find(x);
      if (dims[root] == 0) dims[root] = 1 + (int)(rng() % 2);
      dims[x] = dims[root];
    }
    return coboundary_action(g.S, g.elements, dims, rng());
  }
}

std::vector<NamedFdAction> fd_action_corpus(int random_count, std::uint64_t seed) {
  std::vector<NamedFdAction> out;
  out.push_back({"01m1-cc", trivial_01m1_fd(FdAlgebra{{1, 1}}, SubSet::of(2, {0}))});
  out.push_back({"01m1-m2c", trivial_01m1_fd(FdAlgebra{{2, 1}}, SubSet::of(2, {0}))});
  out.push_back({"z2-swap-cc", z2_swap_cc()});
  out.push_back({"z2-ad-m2", z2_ad_m2()});
  {
    auto i2 = symmetric_inverse_monoid(2);
    out.push_back({"i2-coboundary", coboundary_action(i2.S, i2.elements, {2, 2}, seed + 99)});
  }
  for (int i = 0; i < random_count; ++i)
    out.push_back({"random-" + std::to_string(i), random_fd_action(seed + i)});
  return out;
}

Triple01m1 trivial_triple_c2() {
  FdAlgebra A{{1, 1}};
  fd::Ideal I = SubSet::of(2, {0});
  xp::BlockAutomorphism alpha;
  alpha.beta = {0, 1};
  alpha.u = {Mat::Identity(1, 1), Mat::Identity(1, 1)};
  return {A, I, alpha, AlgElement::support_projection(A, I)};
}

Triple01m1 matrix_block_triple() {
  FdAlgebra A{{2, 1}};
  fd::Ideal I = SubSet::of(2, {0});
  Mat w(2, 2);
  w << 1, 0, 0, -1;
  xp::BlockAutomorphism alpha;
  alpha.beta = {0, 1};
  alpha.u = {w, Mat::Identity(1, 1)};
  AlgElement u(A);
  u.block(0) = w;
  return {A, I, alpha, u};
}

Triple01m1 random_triple(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 2862933555777941757ull + 3037000493ull);
  int k = 2 + (int)(rng() % 2);  // 2 or 3 blocks
  std::vector<int> dims;
  for (int b = 0; b < k; ++b) dims.push_back(1 + (int)(rng() % 3));

  // an involutive permutation of equal-dimension blocks; blocks inside the
  // ideal must stay fixed
  std::vector<int> beta(k);
  std::iota(beta.begin(), beta.end(), 0);
  for (int b = 0; b < k; ++b)
    for (int c = b + 1; c < k; ++c)
      if (beta[b] == b && beta[c] == c && dims[b] == dims[c] && rng() % 2) {
        beta[b] = c;
        beta[c] = b;
      }
  fd::Ideal I((int)k);
  for (int b = 0; b < k; ++b)
    if (beta[b] == b && rng() % 2) I.set(b);
  FdAlgebra A{dims};

  xp::BlockAutomorphism alpha;
  alpha.beta = beta;
  alpha.u.assign(k, Mat());
  AlgElement u(A);
  for (int b = 0; b < k; ++b) {
    if (I.test(b)) {
      // a random selfadjoint unitary, shared by alpha and u
      Mat v = random_unitary(dims[b], rng);
      Eigen::VectorXd signs(dims[b]);
      for (int i = 0; i < dims[b]; ++i) signs(i) = (rng() % 2) ? 1.0 : -1.0;
      Mat su = v * signs.asDiagonal() * v.adjoint();
      alpha.u[b] = su;
      u.block(b) = su;
    } else if (beta[b] == b) {
      // an involution on a fixed block outside the ideal
      Mat v = random_unitary(dims[b], rng);
      Eigen::VectorXd signs(dims[b]);
      for (int i = 0; i < dims[b]; ++i) signs(i) = (rng() % 2) ? 1.0 : -1.0;
      alpha.u[b] = v * signs.asDiagonal() * v.adjoint();
    }
  }
  // swapped pairs: one side free, the other its inverse
  for (int b = 0; b < k; ++b) {
    if (beta[b] > b) {
      alpha.u[b] = random_unitary(dims[b], rng);
      alpha.u[beta[b]] = alpha.u[b].adjoint();
    }
  }
  return {A, I, alpha, u};
}

}  // namespace iscp::corpus
