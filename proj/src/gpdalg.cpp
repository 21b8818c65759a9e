#include "iscp/gpdalg.hpp"

#include <algorithm>

#include "iscp/xprod.hpp"

namespace iscp::gpd {

ValidationReport FiniteGroupoid::validate(int n, const SubSet& units, const std::vector<int>& src,
                                          const std::vector<int>& rng,
                                          const std::vector<std::vector<int>>& comp,
                                          const std::vector<int>& inv) {
  if (units.universe() != n || (int)src.size() != n || (int)rng.size() != n ||
      (int)comp.size() != n || (int)inv.size() != n)
    throw structural_error("groupoid tables have wrong shape");
  for (auto& row : comp)
    if ((int)row.size() != n) throw structural_error("composition table has wrong shape");
  for (int a = 0; a < n; ++a) {
    if (src[a] < 0 || src[a] >= n || !units.test(src[a])) throw structural_error("source not a unit");
    if (rng[a] < 0 || rng[a] >= n || !units.test(rng[a])) throw structural_error("range not a unit");
    if (inv[a] < 0 || inv[a] >= n) throw structural_error("inverse out of range");
    for (int b = 0; b < n; ++b)
      if (comp[a][b] < -1 || comp[a][b] >= n) throw structural_error("composition out of range");
  }

  ValidationReport rep;
  for (int u : units.elements()) {
    if (src[u] != u || rng[u] != u) {
      rep.add("unit-self-maps", {u});
      break;
    }
  }
  for (int a = 0; a < n && rep.valid; ++a)
    for (int b = 0; b < n; ++b) {
      bool defined = comp[a][b] >= 0;
      if (defined != (src[a] == rng[b])) {
        rep.add("composable-iff-matching", {a, b});
        break;
      }
      if (defined && (src[comp[a][b]] != src[b] || rng[comp[a][b]] != rng[a])) {
        rep.add("composition-endpoints", {a, b});
        break;
      }
    }
  for (int a = 0; a < n && rep.valid; ++a) {
    if (comp[a][src[a]] != a || comp[rng[a]][a] != a) {
      rep.add("unit-law", {a});
      break;
    }
    if (src[inv[a]] != rng[a] || rng[inv[a]] != src[a] || comp[inv[a]][a] != src[a] ||
        comp[a][inv[a]] != rng[a]) {
      rep.add("inverse-law", {a});
      break;
    }
  }
  for (int a = 0; a < n && rep.valid; ++a)
    for (int b = 0; b < n && rep.valid; ++b) {
      if (comp[a][b] < 0) continue;
      for (int c = 0; c < n; ++c) {
        if (comp[b][c] < 0) continue;
        if (comp[comp[a][b]][c] != comp[a][comp[b][c]]) {
          rep.add("associativity", {a, b, c});
          break;
        }
      }
    }
  return rep;
}

FiniteGroupoid::FiniteGroupoid(int arrows, SubSet units, std::vector<int> src,
                               std::vector<int> rng, std::vector<std::vector<int>> comp,
                               std::vector<int> inv)
    : n_(arrows), units_(std::move(units)), src_(std::move(src)), rng_(std::move(rng)),
      comp_(std::move(comp)), inv_(std::move(inv)) {
  auto rep = validate(n_, units_, src_, rng_, comp_, inv_);
  if (!rep.valid) throw axiom_error("groupoid axioms violated: " + rep.violations[0].axiom);
}

std::vector<int> FiniteGroupoid::source_fiber(int unit) const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a)
    if (src_[a] == unit) out.push_back(a);
  return out;
}

GradedGroupoid from_discrete_action(const act::SpaceAction& a) {
  if (!a.X().is_discrete())
    throw precondition_error("transformation groupoid algebras need a discrete space here");
  act::GermGroupoid g(a);
  int n = g.arrows();
  SubSet units = g.units();
  std::vector<int> src(n), rng(n), inv(n);
  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  for (int p = 0; p < n; ++p) {
    src[p] = g.unit_at(g.source(p));
    rng[p] = g.unit_at(g.range(p));
    inv[p] = g.inverse(p);
    for (int q = 0; q < n; ++q) comp[p][q] = g.compose(p, q);
  }
  GradedGroupoid out{FiniteGroupoid(n, units, src, rng, comp, inv), {}, {}, {}};
  for (int t = 0; t < a.S().size(); ++t) {
    out.grading.push_back(g.bisection(t));
    std::vector<int> row(a.X().points(), -1);
    for (int x = 0; x < a.X().points(); ++x) row[x] = g.germ(t, x);
    out.germ.push_back(row);
  }
  for (int x = 0; x < a.X().points(); ++x) out.unit_at.push_back(g.unit_at(x));
  return out;
}

la::Vec ConvolutionAlgebra::convolve(const FiniteGroupoid& g, const la::Vec& f1,
                                     const la::Vec& f2) const {
  la::Vec out = la::Vec::Zero(g.arrows());
  for (int a = 0; a < g.arrows(); ++a)
    for (int b = 0; b < g.arrows(); ++b) {
      int c = g.compose(a, b);
      if (c >= 0) out(c) += f1(a) * f2(b);
    }
  return out;
}

la::Vec ConvolutionAlgebra::involution(const FiniteGroupoid& g, const la::Vec& f) const {
  la::Vec out = la::Vec::Zero(g.arrows());
  for (int a = 0; a < g.arrows(); ++a) out(a) = std::conj(f(g.inverse(a)));
  return out;
}

ConvolutionAlgebra convolution_algebra(const FiniteGroupoid& g, std::uint64_t seed) {
  ConvolutionAlgebra out;
  int n = g.arrows();
  for (int gamma = 0; gamma < n; ++gamma) {
    la::Mat m = la::Mat::Zero(n, n);
    for (int b = 0; b < n; ++b) {
      int c = g.compose(gamma, b);
      if (c >= 0) m(c, b) = 1.0;
    }
    out.basis.push_back(m);
  }
  out.presentation.blocks = la::block_structure(out.basis, seed);
  return out;
}

RegularFamily regular_representations(const FiniteGroupoid& g) {
  RegularFamily fam;
  std::vector<la::Vec> stacked(g.arrows());
  int total = 0;
  for (int u : g.units().elements()) {
    fam.fiber.push_back(g.source_fiber(u));
    total += (int)fam.fiber.back().size() * (int)fam.fiber.back().size();
  }
  for (auto& v : stacked) v = la::Vec::Zero(total);
  int off = 0;
  fam.lambda.resize(fam.fiber.size());
  for (size_t ui = 0; ui < fam.fiber.size(); ++ui) {
    const auto& fib = fam.fiber[ui];
    int d = (int)fib.size();
    std::vector<int> pos(g.arrows(), -1);
    for (int i = 0; i < d; ++i) pos[fib[i]] = i;
    for (int gamma = 0; gamma < g.arrows(); ++gamma) {
      la::Mat m = la::Mat::Zero(d, d);
      for (int i = 0; i < d; ++i) {
        int c = g.compose(gamma, fib[i]);
        if (c >= 0) m(pos[c], i) = 1.0;
      }
      fam.lambda[ui].push_back(m);
      stacked[gamma].segment(off, d * d) = Eigen::Map<const la::Vec>(m.data(), d * d);
    }
    off += d * d;
  }
  fam.direct_sum_faithful = (la::span_rank(stacked) == g.arrows());
  return fam;
}

InnerExactReport inner_exactness_check(const FiniteGroupoid& g, const SubSet& u) {
  InnerExactReport rep;
  if (u.universe() != g.arrows()) throw structural_error("unit subset has wrong universe");
  for (int x : u.elements())
    if (!g.units().test(x)) throw structural_error("subset contains a non-unit arrow");

  rep.invariant = true;
  for (int a = 0; a < g.arrows(); ++a)
    if (u.test(g.source(a)) != u.test(g.range(a))) rep.invariant = false;
  if (!rep.invariant) return rep;

  SubSet over_u(g.arrows());
  for (int a = 0; a < g.arrows(); ++a)
    if (u.test(g.source(a))) over_u.set(a);

  rep.dim_full = g.arrows();
  rep.dim_over_u = over_u.count();
  rep.dim_over_f = rep.dim_full - rep.dim_over_u;
  rep.kernel_dim = rep.dim_over_u;

  // the restriction map kills the arrows over U; multiplicativity needs
  // no product of two surviving arrows to land on a killed one
  rep.restriction_multiplicative = true;
  for (int a = 0; a < g.arrows(); ++a)
    for (int b = 0; b < g.arrows(); ++b) {
      int c = g.compose(a, b);
      if (c < 0) continue;
      if (!over_u.test(a) && !over_u.test(b) && over_u.test(c))
        rep.restriction_multiplicative = false;
    }

  rep.exact = rep.restriction_multiplicative && (rep.kernel_dim == rep.dim_over_u);
  if (!rep.exact)
    throw internal_check_error("restriction sequence failed to be exact on a finite groupoid");
  return rep;
}

fd::PartialIsoAction function_algebra_action(const act::SpaceAction& a) {
  int nx = a.X().points();
  fd::FdAlgebra A{std::vector<int>(nx, 1)};
  std::vector<fd::PartialIsoAction::ElementData> data;
  for (int t = 0; t < a.S().size(); ++t) {
    fd::PartialIsoAction::ElementData d;
    d.source = a.domain(t);
    d.beta.assign(nx, -1);
    d.u.assign(nx, fd::Mat());
    for (int x : a.domain(t).elements()) {
      d.beta[x] = a.apply(t, x);
      d.u[x] = fd::Mat::Identity(1, 1);
    }
    data.push_back(std::move(d));
  }
  return fd::PartialIsoAction(a.S_ptr(), std::move(A), std::move(data));
}

IteratedIsoReport verify_iterated_iso(const act::SpaceAction& a, std::uint64_t seed) {
  IteratedIsoReport rep;
  auto gg = from_discrete_action(a);
  auto fdact = function_algebra_action(a);
  const auto& S = a.S();
  int nx = a.X().points();
  int n = gg.G.arrows();
  rep.dim_convolution = n;

  auto conv = convolution_algebra(gg.G, seed);

  // canonical map: the coefficient at x in the slot of t goes to the point
  // mass at the germ of t at x
  auto canon = [&](int t, const fd::AlgElement& xi) {
    la::Mat m = la::Mat::Zero(n, n);
    for (int x : a.domain(t).elements()) m += xi.block(x)(0, 0) * conv.basis[gg.germ[t][x]];
    return m;
  };

  // representation axioms of the canonical map on the point-mass basis
  double defect = 0;
  for (int t = 0; t < S.size(); ++t)
    for (int x : a.domain(t).elements()) {
      auto xi = fd::AlgElement::unit_matrix(fdact.A(), x, 0, 0);
      for (int u = 0; u < S.size(); ++u)
        for (int y : a.domain(u).elements()) {
          auto eta = fd::AlgElement::unit_matrix(fdact.A(), y, 0, 0);
          la::Mat lhs = canon(S.mul(t, u), fdact.mu(t, u, xi, eta));
          la::Mat rhs = canon(t, xi) * canon(u, eta);
          defect = std::max(defect, (lhs - rhs).cwiseAbs().maxCoeff());
          // right and left inner products against the unit slot
          la::Mat r2 = canon(t, xi).adjoint() * canon(t, eta);
          if (t == u)
            defect = std::max(defect,
                              (r2 - canon(*S.unit(), fdact.right_inner(t, xi, eta)))
                                  .cwiseAbs()
                                  .maxCoeff());
          la::Mat r3 = canon(t, xi) * canon(t, eta).adjoint();
          if (t == u)
            defect = std::max(
                defect,
                (r3 - canon(*S.unit(), fdact.left_inner(t, xi, eta))).cwiseAbs().maxCoeff());
        }
    }
  rep.rep_axiom_defect = defect;

  // bijectivity: the map factors through the crossed product, which has
  // the same dimension as the convolution algebra, and hits a basis
  std::vector<la::Vec> nf_vecs, image_vecs;
  for (auto& [t, xi] : xp::slot_basis(fdact)) {
    nf_vecs.push_back(xp::free_coordinates(xp::normal_form(xp::CrossedElement::monomial(fdact, t, xi))));
    la::Mat m = canon(t, xi);
    image_vecs.push_back(Eigen::Map<const la::Vec>(m.data(), m.size()));
  }
  rep.dim_crossed = la::span_rank(nf_vecs);
  int image_rank = la::span_rank(image_vecs);
  rep.bijective = (rep.dim_crossed == n) && (image_rank == n);

  // the expectation corresponds to restricting coefficients to the unit
  // arrows
  double edefect = 0;
  for (int t = 0; t < S.size(); ++t)
    for (int x : a.domain(t).elements()) {
      auto xi = fd::AlgElement::unit_matrix(fdact.A(), x, 0, 0);
      auto e = xp::expectation(xp::CrossedElement::monomial(fdact, t, xi));
      // coefficient vector of the canonical image, restricted to units
      la::Vec coeffs = la::Vec::Zero(n);
      coeffs(gg.germ[t][x]) = 1.0;
      la::Vec expect = la::Vec::Zero(n);
      for (int y = 0; y < nx; ++y) expect(gg.unit_at[y]) = e.block(y)(0, 0);
      la::Vec restricted = la::Vec::Zero(n);
      for (int u2 : gg.G.units().elements()) restricted(u2) = coeffs(u2);
      edefect = std::max(edefect, (restricted - expect).cwiseAbs().maxCoeff());
    }
  rep.expectation_defect = edefect;

  rep.iso = rep.bijective && rep.rep_axiom_defect < 1e-9 && rep.expectation_defect < 1e-9;
  return rep;
}

}  // namespace iscp::gpd
