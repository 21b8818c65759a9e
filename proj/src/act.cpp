#include "iscp/act.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace iscp::act {

namespace {

std::vector<SubSet> domains_of(const std::vector<std::vector<int>>& maps, int nx) {
  std::vector<SubSet> dom;
  for (auto& m : maps) {
    SubSet d(nx);
    for (int x = 0; x < nx; ++x)
      if (m[x] >= 0) d.set(x);
    dom.push_back(d);
  }
  return dom;
}

}  // namespace

ValidationReport SpaceAction::validate(const isg::InverseSemigroup& S, const topo::FiniteSpace& X,
                                       const std::vector<std::vector<int>>& maps,
                                       bool zero_preserving) {
  int n = S.size(), nx = X.points();
  if ((int)maps.size() != n) throw structural_error("one partial map per semigroup element required");
  for (auto& m : maps) {
    if ((int)m.size() != nx) throw structural_error("partial map has wrong point count");
    std::vector<bool> seen(nx, false);
    for (int x = 0; x < nx; ++x) {
      if (m[x] < -1 || m[x] >= nx) throw structural_error("partial map value out of range");
      if (m[x] >= 0) {
        if (seen[m[x]]) throw structural_error("partial map not injective");
        seen[m[x]] = true;
      }
    }
  }
  if (!S.unit()) throw structural_error("the acting semigroup must have a unit");

  ValidationReport rep;
  auto dom = domains_of(maps, nx);
  std::vector<SubSet> cod;
  for (int t = 0; t < n; ++t) {
    SubSet c(nx);
    for (int x = 0; x < nx; ++x)
      if (maps[t][x] >= 0) c.set(maps[t][x]);
    cod.push_back(c);
  }

  {
    int one = *S.unit();
    for (int x = 0; x < nx; ++x)
      if (maps[one][x] != x) {
        rep.add("unit-acts-identically", {x});
        break;
      }
  }
  if (zero_preserving) {
    if (!S.zero()) throw structural_error("zero-preserving flag needs a zero element");
    if (!dom[*S.zero()].empty()) rep.add("zero-acts-nowhere", {*S.zero()});
  }

  for (int t = 0; t < n && rep.valid; ++t) {
    if (!X.is_open(dom[t]))
      rep.add("domain-open", {t});
    else if (!X.is_open(cod[t]))
      rep.add("codomain-open", {t});
  }

  // composition with the exact domain condition: the composite of the maps
  // of t and u is everywhere equal (defined or not) to the map of tu
  for (int t = 0; t < n && rep.valid; ++t)
    for (int u = 0; u < n && rep.valid; ++u) {
      int tu = S.mul(t, u);
      for (int x = 0; x < nx; ++x) {
        int y = maps[u][x];
        int comp = (y >= 0) ? maps[t][y] : -1;
        if (comp != maps[tu][x]) {
          rep.add("composition", {t, u, x});
          break;
        }
      }
    }

  // relatively open subsets of the domain map to open sets
  for (int t = 0; t < n && rep.valid; ++t) {
    for (auto& o : X.opens()) {
      SubSet restricted = o & dom[t];
      SubSet img(nx);
      for (int x : restricted.elements()) img.set(maps[t][x]);
      if (!X.is_open(img)) {
        rep.add("continuity", {t});
        break;
      }
    }
  }
  return rep;
}

SpaceAction::SpaceAction(std::shared_ptr<const isg::InverseSemigroup> S, topo::FiniteSpace X,
                         std::vector<std::vector<int>> maps, bool zero_preserving)
    : S_(std::move(S)), X_(std::move(X)), maps_(std::move(maps)), zero_preserving_(zero_preserving) {
  auto rep = validate(*S_, X_, maps_, zero_preserving_);
  if (!rep.valid) throw axiom_error("action axioms violated: " + rep.violations[0].axiom);
  dom_ = domains_of(maps_, X_.points());
  for (int t = 0; t < S_->size(); ++t) {
    SubSet c(X_.points());
    for (int x = 0; x < X_.points(); ++x)
      if (maps_[t][x] >= 0) c.set(maps_[t][x]);
    cod_.push_back(c);
  }
}

SubSet SpaceAction::image(int t, const SubSet& s) const {
  SubSet r(X_.points());
  for (int x : s.elements())
    if (maps_[t][x] >= 0) r.set(maps_[t][x]);
  return r;
}

SubSet SpaceAction::preimage(int t, const SubSet& s) const {
  SubSet r(X_.points());
  for (int x = 0; x < X_.points(); ++x)
    if (maps_[t][x] >= 0 && s.test(maps_[t][x])) r.set(x);
  return r;
}

SubSet SpaceAction::d1t(int t) const {
  SubSet d(X_.points());
  for (int e : S_->lower_bounds(*S_->unit(), t)) d = d | dom_[e];
  return d;
}

UniversalAction universal_action(std::shared_ptr<const isg::InverseSemigroup> S) {
  if (!S->unit() || !S->zero())
    throw precondition_error("universal action needs a zero and a unit");
  auto [E, idx] = S->idempotent_semilattice();
  auto spec = topo::semilattice_spectrum(E);
  std::vector<int> back(S->size(), -1);
  for (size_t i = 0; i < idx.size(); ++i) back[idx[i]] = (int)i;

  int nc = spec.characters();
  int n = S->size();
  std::vector<std::vector<int>> maps(n, std::vector<int>(nc, -1));
  // t moves a character phi supported at t*t to e -> phi(t* e t)
  for (int t = 0; t < n; ++t) {
    int tst = S->mul(S->inv(t), t);
    for (int c = 0; c < nc; ++c) {
      if (!spec.character[c].test(back[tst])) continue;
      SubSet moved(E.size());
      for (int e = 0; e < E.size(); ++e) {
        int conj = S->mul(S->mul(S->inv(t), idx[e]), t);
        if (back[conj] < 0) throw internal_check_error("conjugate of an idempotent not idempotent");
        if (spec.character[c].test(back[conj])) moved.set(e);
      }
      int target = -1;
      for (int d = 0; d < nc; ++d)
        if (spec.character[d] == moved) target = d;
      if (target < 0) throw internal_check_error("conjugated character is not a character");
      maps[t][c] = target;
    }
  }
  SpaceAction action(S, spec.space, std::move(maps), true);
  return UniversalAction{std::move(spec), std::move(action)};
}

GermGroupoid::GermGroupoid(SpaceAction action) : action_(std::move(action)) {
  const auto& S = action_.S();
  const auto& X = action_.X();
  int n = S.size(), nx = X.points();

  // germ classes: (t,x) ~ (u,x) iff some v <= t,u has x in its domain
  cls_.assign(n * nx, -1);
  for (int t = 0; t < n; ++t)
    for (int x = 0; x < nx; ++x) {
      if (action_.apply(t, x) < 0 || cls_[t * nx + x] >= 0) continue;
      int id = n_++;
      rep_.push_back({t, x});
      for (int u = t; u < n; ++u) {
        if (action_.apply(u, x) < 0) continue;
        bool equiv = false;
        for (int v : S.lower_bounds(t, u))
          if (action_.domain(v).test(x)) {
            equiv = true;
            break;
          }
        if (equiv) {
          if (cls_[u * nx + x] >= 0 && cls_[u * nx + x] != id)
            throw internal_check_error("germ relation is not transitive on this action");
          cls_[u * nx + x] = id;
        }
      }
      if (cls_[t * nx + x] != id) throw internal_check_error("germ relation is not reflexive");
    }

  src_.resize(n_);
  rng_.resize(n_);
  for (int a = 0; a < n_; ++a) {
    auto [t, x] = rep_[a];
    src_[a] = x;
    rng_[a] = action_.apply(t, x);
  }

  int one = *S.unit();
  unit_of_.assign(nx, -1);
  units_ = SubSet(n_);
  for (int x = 0; x < nx; ++x) {
    unit_of_[x] = cls_[one * nx + x];
    units_.set(unit_of_[x]);
  }

  inv_.resize(n_);
  for (int a = 0; a < n_; ++a) {
    auto [t, x] = rep_[a];
    inv_[a] = cls_[S.inv(t) * nx + rng_[a]];
    if (inv_[a] < 0) throw internal_check_error("inverse germ missing");
  }

  comp_.assign(n_, std::vector<int>(n_, -1));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (src_[a] != rng_[b]) continue;
      auto [t, xa] = rep_[a];
      auto [u, xb] = rep_[b];
      int prod = cls_[S.mul(t, u) * nx + xb];
      if (prod < 0) throw internal_check_error("composite germ missing");
      comp_[a][b] = prod;
    }

  // composition must not depend on the chosen representatives
  for (int a = 0; a < n_; ++a)
    for (int t = 0; t < n; ++t) {
      if (cls_[t * nx + src_[a]] != a) continue;
      for (int b = 0; b < n_; ++b) {
        if (comp_[a][b] < 0) continue;
        for (int u = 0; u < n; ++u) {
          if (cls_[u * nx + src_[b]] != b) continue;
          if (cls_[S.mul(t, u) * nx + src_[b]] != comp_[a][b])
            throw internal_check_error("germ composition depends on representatives");
        }
      }
    }

  bisection_.assign(n, SubSet(n_));
  for (int t = 0; t < n; ++t)
    for (int x = 0; x < nx; ++x)
      if (action_.apply(t, x) >= 0) bisection_[t].set(cls_[t * nx + x]);

  std::unordered_set<SubSet, SubSetHash> seen;
  for (int t = 0; t < n; ++t)
    for (auto& o : X.opens()) {
      SubSet b(n_);
      for (int x : (o & action_.domain(t)).elements()) b.set(cls_[t * nx + x]);
      if (!b.empty() && seen.insert(b).second) basis_.push_back(b);
    }
}

int GermGroupoid::germ(int t, int x) const { return cls_[t * action_.X().points() + x]; }

int GermGroupoid::compose(int a, int b) const { return comp_[a][b]; }

bool GermGroupoid::is_open(const SubSet& s) const {
  for (int a : s.elements()) {
    bool covered = false;
    for (auto& b : basis_)
      if (b.test(a) && b.subset_of(s)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

SubSet GermGroupoid::closure(const SubSet& s) const {
  SubSet avoid(n_);
  for (auto& b : basis_)
    if (!b.intersects(s)) avoid = avoid | b;
  return avoid.complement();
}

topo::FiniteSpace GermGroupoid::arrow_space(size_t cap) const {
  return topo::FiniteSpace::from_basis(n_, basis_, {}, cap);
}

GermGroupoid germ_groupoid(const SpaceAction& action) { return GermGroupoid(action); }

bool units_closed(const GermGroupoid& g) {
  bool direct = g.is_open(g.units().complement());
  auto per_t = criterion_d1t_closed(g.action());
  if (direct != per_t.all)
    throw internal_check_error("units_closed: arrow-space test disagrees with the per-element test");
  return direct;
}

D1tReport criterion_d1t_closed(const SpaceAction& action) {
  D1tReport rep;
  const auto& S = action.S();
  for (int t = 0; t < S.size(); ++t) {
    bool closed = action.X().is_closed_in(action.d1t(t) & action.codomain(t), action.codomain(t));
    rep.per_t.push_back({t, closed});
    rep.all = rep.all && closed;
  }
  return rep;
}

bool groupoid_is_hausdorff(const GermGroupoid& g) {
  bool t2 = true;
  int n = g.arrows();
  for (int a = 0; a < n && t2; ++a)
    for (int b = a + 1; b < n && t2; ++b) {
      bool sep = false;
      for (auto& u : g.basis()) {
        if (!u.test(a) || u.test(b)) continue;
        for (auto& v : g.basis())
          if (v.test(b) && !u.intersects(v)) {
            sep = true;
            break;
          }
        if (sep) break;
      }
      if (!sep) t2 = false;
    }
  bool expected = g.action().X().is_hausdorff() && units_closed(g);
  if (t2 != expected)
    throw internal_check_error("groupoid Hausdorffness disagrees with closed-units criterion");
  return t2;
}

EquivariantReport check_equivariant_inheritance(const std::vector<int>& f,
                                                const SpaceAction& actX, const SpaceAction& actY) {
  const auto& X = actX.X();
  const auto& Y = actY.X();
  if ((int)f.size() != X.points()) throw structural_error("map has wrong point count");
  for (int v : f)
    if (v < 0 || v >= Y.points()) throw structural_error("map value out of range");
  if (actX.S().size() != actY.S().size() || actX.S().mul_table() != actY.S().mul_table())
    throw precondition_error("actions must be over the same semigroup");

  auto pre = [&](const SubSet& s) {
    SubSet r(X.points());
    for (int x = 0; x < X.points(); ++x)
      if (s.test(f[x])) r.set(x);
    return r;
  };
  for (auto& o : Y.opens())
    if (!X.is_open(pre(o))) throw precondition_error("map is not continuous");
  for (int t = 0; t < actX.S().size(); ++t) {
    if (actX.domain(t) != pre(actY.domain(t)))
      throw precondition_error("domains are not pulled back exactly");
    for (int x : actX.domain(t).elements())
      if (f[actX.apply(t, x)] != actY.apply(t, f[x]))
        throw precondition_error("map is not equivariant");
  }

  EquivariantReport rep;
  rep.units_closed_domain = units_closed(germ_groupoid(actX));
  rep.units_closed_codomain = units_closed(germ_groupoid(actY));
  rep.implication_holds = !rep.units_closed_codomain || rep.units_closed_domain;
  return rep;
}

Prop69Report e_unitary_cross_check(std::shared_ptr<const isg::InverseSemigroup> S,
                                   const std::vector<SpaceAction>& corpus) {
  if (!S->zero() || !S->unit())
    throw precondition_error("cross-check needs a zero and a unit");
  Prop69Report rep;
  auto direct = S->is_e_star_unitary();
  rep.e_star_unitary = direct.value;
  rep.witness = direct.witness;
  rep.order_condition = S->order_condition().value;
  rep.units_closed_universal = units_closed(germ_groupoid(universal_action(S).action));
  rep.chain_agrees = (rep.e_star_unitary == rep.order_condition) &&
                     (rep.order_condition == rep.units_closed_universal);
  rep.implication_holds = true;
  for (auto& a : corpus) {
    if (!a.zero_preserving())
      throw precondition_error("corpus actions must be zero-preserving");
    bool uc = units_closed(germ_groupoid(a));
    rep.corpus_units_closed.push_back(uc);
    if (rep.units_closed_universal && !uc) rep.implication_holds = false;
  }
  return rep;
}

}  // namespace iscp::act
