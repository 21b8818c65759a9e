#include "iscp/xprod.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <random>

namespace iscp::xp {

namespace {

std::vector<int> default_order(const fd::PartialIsoAction& act) {
  return act.S().index_order();
}

AlgElement rand_in(const FdAlgebra& a, const Ideal& support, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  AlgElement e(a);
  for (int b : support.elements())
    for (int i = 0; i < a.blocks[b]; ++i)
      for (int j = 0; j < a.blocks[b]; ++j) e.block(b)(i, j) = cd(g(rng), g(rng));
  return e;
}

double opnorm(const Mat& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace

CrossedElement CrossedElement::monomial(const fd::PartialIsoAction& act, int t, AlgElement xi) {
  CrossedElement x(act);
  x.set_coeff(t, std::move(xi));
  return x;
}

AlgElement CrossedElement::coeff(int t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? AlgElement::zero(act_->A()) : it->second;
}

void CrossedElement::set_coeff(int t, AlgElement xi) {
  if (!xi.support().subset_of(act_->source_ideal(t)))
    throw precondition_error("coefficient escapes the bimodule of its slot");
  if (xi.is_zero(0.0))
    terms_.erase(t);
  else
    terms_[t] = std::move(xi);
}

void CrossedElement::add_coeff(int t, const AlgElement& xi) {
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    set_coeff(t, xi);
  } else {
    it->second = it->second + xi;
    if (it->second.is_zero(0.0)) terms_.erase(it);
  }
}

CrossedElement CrossedElement::operator+(const CrossedElement& o) const {
  CrossedElement r(*this);
  for (auto& [t, xi] : o.terms_) r.add_coeff(t, xi);
  return r;
}

CrossedElement CrossedElement::operator-(const CrossedElement& o) const {
  CrossedElement r(*this);
  for (auto& [t, xi] : o.terms_) r.add_coeff(t, xi * cd(-1.0, 0.0));
  return r;
}

CrossedElement CrossedElement::operator*(cd scalar) const {
  CrossedElement r(*act_);
  for (auto& [t, xi] : terms_) r.set_coeff(t, xi * scalar);
  return r;
}

bool CrossedElement::is_zero(double tol) const { return max_abs() <= tol; }

double CrossedElement::max_abs() const {
  double m = 0;
  for (auto& [t, xi] : terms_) m = std::max(m, xi.max_abs());
  return m;
}

CrossedElement normal_form(const CrossedElement& x, const std::vector<int>& order) {
  const auto& act = x.action();
  std::vector<int> ord = order.empty() ? default_order(act) : order;
  int n = act.S().size();
  if ((int)ord.size() != n) throw structural_error("order must list every semigroup element");

  std::vector<AlgElement> slot(n, AlgElement::zero(act.A()));
  std::vector<bool> nonzero(n, false);
  for (auto& [t, xi] : x.terms()) {
    slot[t] = xi;
    nonzero[t] = true;
  }

  for (int i = 0; i < n; ++i) {
    int ti = ord[i];
    for (int j = i + 1; j < n; ++j) {
      int tj = ord[j];
      if (!nonzero[tj]) continue;
      const Ideal& common = act.common_ideal(ti, tj);
      if (common.empty()) continue;
      AlgElement cut = slot[tj].cut(common);
      if (cut.is_zero(0.0)) continue;
      slot[ti] = slot[ti] + cut;
      slot[tj] = slot[tj] - cut;
      nonzero[ti] = true;
      if (slot[tj].is_zero(0.0)) nonzero[tj] = false;
    }
  }

  CrossedElement out(act);
  for (int t = 0; t < n; ++t)
    if (nonzero[t] && !slot[t].is_zero(0.0)) out.set_coeff(t, slot[t]);
  return out;
}

CrossedElement multiply(const CrossedElement& x, const CrossedElement& y) {
  const auto& act = x.action();
  CrossedElement r(act);
  for (auto& [t, xi] : x.terms())
    for (auto& [u, eta] : y.terms()) r.add_coeff(act.S().mul(t, u), act.mu(t, u, xi, eta));
  return normal_form(r);
}

CrossedElement star(const CrossedElement& x) {
  const auto& act = x.action();
  CrossedElement r(act);
  for (auto& [t, xi] : x.terms()) r.add_coeff(act.S().inv(t), act.apply(t, xi).star());
  return normal_form(r);
}

bool equal(const CrossedElement& x, const CrossedElement& y, double tol) {
  return normal_form(x - y).is_zero(tol);
}

AlgElement expectation(const CrossedElement& x) {
  const auto& act = x.action();
  if (!act.S().unit()) throw precondition_error("expectation needs a unit in the semigroup");
  int one = *act.S().unit();
  AlgElement e = AlgElement::zero(act.A());
  for (auto& [t, xi] : x.terms()) e = e + xi.cut(act.common_ideal(one, t));
  return e;
}

AlgElement inner_product(const CrossedElement& x, const CrossedElement& y) {
  return expectation(multiply(star(x), y));
}

PositivityReport positivity_check(const CrossedElement& x, double tol_eig, double tol_zero) {
  PositivityReport rep;
  AlgElement exx = inner_product(x, x);
  rep.min_eigenvalue = exx.min_eigenvalue();
  if (rep.min_eigenvalue < -tol_eig)
    throw internal_check_error("expectation of x*x has a negative eigenvalue");
  rep.expectation_zero = exx.is_zero(tol_zero);
  rep.normal_form_zero = normal_form(x).is_zero(tol_zero);
  rep.equivalent = (rep.expectation_zero == rep.normal_form_zero);
  return rep;
}

InducedRep::InducedRep(const fd::PartialIsoAction& act, std::vector<int> multiplicities)
    : act_(&act), mult_(std::move(multiplicities)) {
  const auto& A = act.A();
  int n = act.S().size(), k = A.num_blocks();
  if ((int)mult_.size() != k) throw structural_error("one multiplicity per block required");
  for (int m : mult_)
    if (m < 0) throw structural_error("multiplicities must be nonnegative");

  summand_index_.assign(n, std::vector<int>(k, -1));
  for (int t = 0; t < n; ++t)
    for (int b : act.source_ideal(t).elements()) {
      if (mult_[b] == 0) continue;
      summand_index_[t][b] = (int)summands_.size();
      summands_.push_back({t, b, A.blocks[b], mult_[b], total_});
      total_ += A.blocks[b] * mult_[b];
    }

  Mat gram = Mat::Zero(total_, total_);
  for (auto& s1 : summands_)
    for (auto& s2 : summands_) {
      if (s1.block != s2.block) continue;
      if (!act.common_ideal(s1.t, s2.t).test(s1.block)) continue;
      gram.block(s1.offset, s2.offset, s1.d * s1.m, s2.d * s2.m) =
          Mat::Identity(s1.d * s1.m, s2.d * s2.m);
    }

  if (total_ == 0) {
    to_h_ = Mat::Zero(0, 0);
    from_h_ = Mat::Zero(0, 0);
    return;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(gram);
  auto ev = es.eigenvalues();
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  double lo = 1e-12 * scale, hi = 1e-8 * scale;
  std::vector<int> kept;
  for (int i = 0; i < total_; ++i) {
    if (ev(i) > hi) {
      kept.push_back(i);
      gram_min_kept_ = gram_min_kept_ == 0 ? ev(i) : std::min(gram_min_kept_, ev(i));
    } else if (ev(i) > lo) {
      throw conditioning_error("module Gram matrix has eigenvalues in the ambiguous zone");
    } else {
      gram_max_dropped_ = std::max(gram_max_dropped_, std::abs(ev(i)));
    }
  }
  dim_ = (int)kept.size();
  to_h_ = Mat::Zero(dim_, total_);
  from_h_ = Mat::Zero(total_, dim_);
  for (int i = 0; i < dim_; ++i) {
    double lam = ev(kept[i]);
    to_h_.row(i) = std::sqrt(lam) * es.eigenvectors().col(kept[i]).adjoint();
    from_h_.col(i) = es.eigenvectors().col(kept[i]) / std::sqrt(lam);
  }
}

Mat InducedRep::op_raw(int s, const AlgElement& xi) const {
  const auto& act = *act_;
  const auto& S = act.S();
  Mat op = Mat::Zero(total_, total_);
  for (auto& sm : summands_) {
    int st = S.mul(s, sm.t);
    if (!act.source_ideal(st).test(sm.block)) continue;
    int tgt = summand_index_[st][sm.block];
    if (tgt < 0) continue;
    int image_block = act.beta(sm.t, sm.block);
    if (!xi.support(0.0).test(image_block)) continue;
    const Mat& u = act.unitary(sm.t, sm.block);
    Mat coeff = u.adjoint() * xi.block(image_block) * u;
    const auto& target = summands_[tgt];
    for (int m = 0; m < sm.m; ++m)
      op.block(target.offset + m * sm.d, sm.offset + m * sm.d, sm.d, sm.d) = coeff;
  }
  return op;
}

Mat InducedRep::pi(int t, const AlgElement& xi) const {
  if (!xi.support().subset_of(act_->source_ideal(t)))
    throw precondition_error("coefficient escapes the bimodule of its slot");
  return to_h_ * op_raw(t, xi) * from_h_;
}

Mat InducedRep::pi(const CrossedElement& x) const {
  Mat m = Mat::Zero(dim_, dim_);
  for (auto& [t, xi] : x.terms()) m += pi(t, xi);
  return m;
}

Mat InducedRep::pi_coeff(const AlgElement& a) const { return pi(*act_->S().unit(), a); }

InducedRep regular_representation(const fd::PartialIsoAction& act) {
  return InducedRep(act, std::vector<int>(act.A().num_blocks(), 1));
}

std::vector<std::pair<int, AlgElement>> slot_basis(const fd::PartialIsoAction& act) {
  std::vector<std::pair<int, AlgElement>> out;
  for (int t = 0; t < act.S().size(); ++t)
    for (auto& xi : act.bimodule_basis(t)) out.push_back({t, xi});
  return out;
}

la::Vec free_coordinates(const CrossedElement& x) {
  const auto& act = x.action();
  int n = act.S().size(), d = act.A().dim();
  la::Vec v = la::Vec::Zero(n * d);
  for (auto& [t, xi] : x.terms()) v.segment(t * d, d) = xi.vectorize();
  return v;
}

DimensionReport dimension_report(const fd::PartialIsoAction& act, const InducedRep& rep) {
  DimensionReport out;
  auto basis = slot_basis(act);
  out.free_dim = (int)basis.size();

  std::vector<la::Vec> nf_vecs, op_vecs;
  for (auto& [t, xi] : basis) {
    auto x = CrossedElement::monomial(act, t, xi);
    nf_vecs.push_back(free_coordinates(normal_form(x)));
    Mat p = rep.pi(t, xi);
    op_vecs.push_back(Eigen::Map<const la::Vec>(p.data(), p.size()));
  }
  out.algebraic_dim = la::span_rank(nf_vecs);
  out.image_dim = la::span_rank(op_vecs);

  std::vector<la::Vec> rel, rel_restricted;
  const auto& S = act.S();
  int dimA = act.A().dim();
  for (int t = 0; t < S.size(); ++t)
    for (int u = 0; u < S.size(); ++u) {
      if (t == u) continue;
      const Ideal& common = act.common_ideal(t, u);
      for (int b : (common & act.source_ideal(t)).elements())
        for (int i = 0; i < act.A().blocks[b]; ++i)
          for (int j = 0; j < act.A().blocks[b]; ++j) {
            auto xi = AlgElement::unit_matrix(act.A(), b, i, j);
            la::Vec v = la::Vec::Zero(S.size() * dimA);
            v.segment(u * dimA, dimA) += xi.vectorize();
            v.segment(t * dimA, dimA) -= xi.vectorize();
            rel.push_back(v);
            if (S.leq(t, u)) rel_restricted.push_back(v);
          }
    }
  out.relation_rank = la::span_rank(rel);
  out.relation_rank_restricted = la::span_rank(rel_restricted);

  if (out.algebraic_dim + out.relation_rank != out.free_dim)
    throw internal_check_error("normal forms and relation span do not complement each other");
  out.representation_faithful = (out.image_dim == out.algebraic_dim);
  return out;
}

double RepAxiomReport::max() const {
  return std::max({multiplicativity, right_inner, left_inner, theta_compat, involution_compat});
}

RepAxiomReport check_representation_axioms(const InducedRep& rep, int samples_per_pair,
                                           std::uint64_t seed) {
  const auto& act = rep.action();
  const auto& S = act.S();
  std::mt19937_64 rng(seed);
  RepAxiomReport out;
  for (int t = 0; t < S.size(); ++t) {
    if (act.source_ideal(t).empty()) continue;
    for (int s = 0; s < samples_per_pair; ++s) {
      auto xi = rand_in(act.A(), act.source_ideal(t), rng);
      auto eta = rand_in(act.A(), act.source_ideal(t), rng);
      Mat pt_xi = rep.pi(t, xi), pt_eta = rep.pi(t, eta);
      out.right_inner = std::max(
          out.right_inner,
          (pt_xi.adjoint() * pt_eta - rep.pi_coeff(act.right_inner(t, xi, eta))).cwiseAbs().maxCoeff());
      out.left_inner = std::max(
          out.left_inner,
          (pt_xi * pt_eta.adjoint() - rep.pi_coeff(act.left_inner(t, xi, eta))).cwiseAbs().maxCoeff());
      out.involution_compat = std::max(
          out.involution_compat,
          (rep.pi(S.inv(t), act.involution_J(t, xi)) - pt_xi.adjoint()).cwiseAbs().maxCoeff());
    }
    for (int u = 0; u < S.size(); ++u) {
      for (int s = 0; s < samples_per_pair; ++s) {
        auto xi = rand_in(act.A(), act.source_ideal(t), rng);
        auto eta = rand_in(act.A(), act.source_ideal(u), rng);
        Mat lhs = rep.pi(S.mul(t, u), act.mu(t, u, xi, eta));
        Mat rhs = rep.pi(t, xi) * rep.pi(u, eta);
        out.multiplicativity = std::max(out.multiplicativity, (lhs - rhs).cwiseAbs().maxCoeff());
      }
      Ideal cut = act.common_ideal(t, u) & act.source_ideal(t);
      if (!cut.empty()) {
        auto xi = rand_in(act.A(), cut, rng);
        auto th = act.theta(u, t, xi);
        out.theta_compat =
            std::max(out.theta_compat, (rep.pi(u, th) - rep.pi(t, xi)).cwiseAbs().maxCoeff());
      }
    }
  }
  return out;
}

double grading_isometry_defect(const InducedRep& rep, int samples_per_slot, std::uint64_t seed) {
  const auto& act = rep.action();
  std::mt19937_64 rng(seed);
  double defect = 0;
  for (int t = 0; t < act.S().size(); ++t) {
    if (act.source_ideal(t).empty()) continue;
    for (int s = 0; s < samples_per_slot; ++s) {
      auto xi = rand_in(act.A(), act.source_ideal(t), rng);
      defect = std::max(defect, std::abs(opnorm(rep.pi(t, xi)) - xi.norm()));
    }
  }
  return defect;
}

EFaithfulReport e_faithful_check(const fd::PartialIsoAction& act,
                                 const std::vector<int>& multiplicities) {
  EFaithfulReport out;
  InducedRep rep(act, multiplicities);
  // the plain coefficient representation with these multiplicities (not
  // its induced version): blockwise a -> a_b tensored with the identity
  const auto& A = act.A();
  int hdim = 0;
  for (int b = 0; b < A.num_blocks(); ++b) hdim += A.blocks[b] * multiplicities[b];
  std::vector<la::Vec> coeff_vecs;
  for (int b = 0; b < A.num_blocks(); ++b)
    for (int i = 0; i < A.blocks[b]; ++i)
      for (int j = 0; j < A.blocks[b]; ++j) {
        Mat p = Mat::Zero(std::max(hdim, 1), std::max(hdim, 1));
        int off = 0;
        for (int c = 0; c < A.num_blocks(); ++c) {
          if (c == b)
            for (int m = 0; m < multiplicities[c]; ++m)
              p(off + m * A.blocks[c] + i, off + m * A.blocks[c] + j) = 1.0;
          off += A.blocks[c] * multiplicities[c];
        }
        coeff_vecs.push_back(Eigen::Map<const la::Vec>(p.data(), p.size()));
      }
  out.faithful_on_coefficients = (la::span_rank(coeff_vecs) == A.dim());
  auto dims = dimension_report(act, rep);
  out.induced_dim = dims.image_dim;
  out.algebraic_dim = dims.algebraic_dim;
  out.induced_faithful = dims.representation_faithful;
  return out;
}

cd induced_functional(const fd::PartialIsoAction& act, const AlgElement& pairing,
                      const CrossedElement& x) {
  AlgElement e = expectation(x);
  cd out = 0;
  for (int b = 0; b < act.A().num_blocks(); ++b)
    out += (pairing.block(b) * e.block(b)).trace();

  // when the functional is supported on the ideal of one idempotent lower
  // bound, the restriction route through that single ideal must agree
  const auto& S = act.S();
  int one = *S.unit();
  Ideal supp = pairing.support();
  for (auto& [t, xi] : x.terms()) {
    for (int v : S.lower_bounds(one, t)) {
      if (!supp.subset_of(act.source_ideal(v))) continue;
      AlgElement through = act.theta(one, t, xi.cut(act.source_ideal(v)));
      cd restricted = 0;
      for (int b = 0; b < act.A().num_blocks(); ++b)
        restricted += (pairing.block(b) * through.block(b)).trace();
      cd direct = 0;
      AlgElement cut = xi.cut(act.common_ideal(one, t));
      for (int b = 0; b < act.A().num_blocks(); ++b)
        direct += (pairing.block(b) * cut.block(b)).trace();
      if (std::abs(restricted - direct) > 1e-9 * (1.0 + std::abs(direct)))
        throw internal_check_error("functional restriction routes disagree");
      break;
    }
  }
  return out;
}

AlgElement BlockAutomorphism::apply(const FdAlgebra& a, const AlgElement& x) const {
  AlgElement r(a);
  for (int b = 0; b < a.num_blocks(); ++b)
    r.block(beta[b]) = u[b] * x.block(b) * u[b].adjoint();
  return r;
}

namespace {

// crossed product by the two-element group, represented on two copies of
// the coefficient Hilbert space: the second copy twisted by the
// automorphism, plus the flip operator
struct GroupCrossedModel {
  int h = 0;
  std::vector<Mat> alg_basis;
  std::vector<Mat> flip_basis;
  Mat flip;

  Mat rep_coeff(const FdAlgebra& A, const BlockAutomorphism& alpha, const AlgElement& a) const {
    Mat m = Mat::Zero(2 * h, 2 * h);
    int off = 0;
    AlgElement aa = alpha.apply(A, a);
    for (int b = 0; b < A.num_blocks(); ++b) {
      int d = A.blocks[b];
      m.block(off, off, d, d) = a.block(b);
      m.block(h + off, h + off, d, d) = aa.block(b);
      off += d;
    }
    return m;
  }
};

GroupCrossedModel build_group_crossed(const FdAlgebra& A, const BlockAutomorphism& alpha) {
  GroupCrossedModel m;
  m.h = A.hilbert_dim();
  m.flip = Mat::Zero(2 * m.h, 2 * m.h);
  m.flip.block(0, m.h, m.h, m.h) = Mat::Identity(m.h, m.h);
  m.flip.block(m.h, 0, m.h, m.h) = Mat::Identity(m.h, m.h);
  for (int b = 0; b < A.num_blocks(); ++b)
    for (int i = 0; i < A.blocks[b]; ++i)
      for (int j = 0; j < A.blocks[b]; ++j) {
        Mat r = m.rep_coeff(A, alpha, AlgElement::unit_matrix(A, b, i, j));
        m.alg_basis.push_back(r);
        m.flip_basis.push_back(r * m.flip);
      }
  return m;
}

la::Vec vec_of(const Mat& m) { return Eigen::Map<const la::Vec>(m.data(), m.size()); }

}  // namespace

Crossed01m1Report crossed_01m1(const FdAlgebra& A, const Ideal& I, const BlockAutomorphism& alpha,
                               const AlgElement& u, std::uint64_t seed) {
  int k = A.num_blocks();
  if ((int)alpha.beta.size() != k || (int)alpha.u.size() != k)
    throw structural_error("automorphism data has wrong block count");
  const double tol = fd::kExactTol;

  auto same_phase = [&](const Mat& a, const Mat& b) {
    cd ip = (a.adjoint() * b).trace();
    return std::abs(std::abs(ip) - (double)a.rows()) <= tol * a.rows();
  };

  {
    std::vector<bool> hit(k, false);
    for (int b = 0; b < k; ++b) {
      int c = alpha.beta[b];
      if (c < 0 || c >= k || hit[c]) throw structural_error("automorphism block map invalid");
      hit[c] = true;
      if (A.blocks[c] != A.blocks[b])
        throw structural_error("automorphism joins blocks of different size");
      Mat err = alpha.u[b].adjoint() * alpha.u[b] - Mat::Identity(A.blocks[b], A.blocks[b]);
      if (err.cwiseAbs().maxCoeff() > tol)
        throw precondition_error("automorphism implementer is not unitary");
    }
    for (int b = 0; b < k; ++b) {
      if (alpha.beta[alpha.beta[b]] != b)
        throw precondition_error("automorphism does not square to the identity");
      if (!same_phase(Mat(Mat::Identity(A.blocks[b], A.blocks[b])),
                      Mat(alpha.u[alpha.beta[b]] * alpha.u[b])))
        throw precondition_error("automorphism does not square to the identity");
    }
    Ideal image(k);
    for (int b : I.elements()) image.set(alpha.beta[b]);
    if (image != I) throw precondition_error("ideal is not invariant under the automorphism");
    if (!u.support(tol).subset_of(I)) throw precondition_error("unitary not supported in the ideal");
    if ((u - u.star()).max_abs() > tol) throw precondition_error("unitary is not selfadjoint");
    if ((u * u - AlgElement::support_projection(A, I)).max_abs() > tol)
      throw precondition_error("unitary does not square to the unit of the ideal");
    for (int b : I.elements()) {
      if (alpha.beta[b] != b)
        throw precondition_error("automorphism must fix the blocks of the ideal");
      if (!same_phase(u.block(b), alpha.u[b]))
        throw precondition_error("automorphism does not restrict to conjugation by the unitary");
    }
  }

  Crossed01m1Report rep;
  rep.dim_coefficients = A.dim();
  for (int b : I.elements()) rep.dim_ideal += A.blocks[b] * A.blocks[b];

  auto model = build_group_crossed(A, alpha);
  std::vector<la::Vec> full_span;
  for (auto& m : model.alg_basis) full_span.push_back(vec_of(m));
  for (auto& m : model.flip_basis) full_span.push_back(vec_of(m));
  rep.dim_crossed_group = la::span_rank(full_span);

  std::vector<Mat> jmats;
  for (int b : I.elements())
    for (int i = 0; i < A.blocks[b]; ++i)
      for (int j = 0; j < A.blocks[b]; ++j) {
        auto c = AlgElement::unit_matrix(A, b, i, j);
        Mat mc = model.rep_coeff(A, alpha, c);
        Mat muc = model.flip * model.rep_coeff(A, alpha, u * c);
        jmats.push_back(mc - muc);
      }
  std::vector<la::Vec> jvecs;
  for (auto& m : jmats) jvecs.push_back(vec_of(m));
  rep.dim_relation_ideal = la::span_rank(jvecs);

  {
    std::vector<la::Vec> closure = jvecs;
    for (auto& m : jmats) closure.push_back(vec_of(Mat(m.adjoint())));
    for (auto& m : jmats) {
      for (auto& g : model.alg_basis) {
        closure.push_back(vec_of(Mat(g * m)));
        closure.push_back(vec_of(Mat(m * g)));
      }
      closure.push_back(vec_of(Mat(model.flip * m)));
      closure.push_back(vec_of(Mat(m * model.flip)));
    }
    rep.relation_ideal_verified = (la::span_rank(closure) == rep.dim_relation_ideal) &&
                                  (rep.dim_relation_ideal == rep.dim_ideal);
  }

  // support projection of the relation ideal; it must be central
  Mat z;
  {
    Mat acc = Mat::Zero(2 * model.h, 2 * model.h);
    for (auto& m : jmats) acc += m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Mat> es(acc);
    double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    z = Mat::Zero(2 * model.h, 2 * model.h);
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()(i) > 1e-9 * scale)
        z += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    bool central = true;
    for (auto& g : model.alg_basis)
      if ((g * z - z * g).cwiseAbs().maxCoeff() > 1e-8) central = false;
    if ((model.flip * z - z * model.flip).cwiseAbs().maxCoeff() > 1e-8) central = false;
    if (!central) throw internal_check_error("relation ideal support is not central");
  }

  Mat one = Mat::Identity(2 * model.h, 2 * model.h);
  std::vector<Mat> quotient;
  std::vector<la::Vec> qvecs;
  for (auto& m : model.alg_basis) {
    quotient.push_back((one - z) * m);
    qvecs.push_back(vec_of(quotient.back()));
  }
  for (auto& m : model.flip_basis) {
    quotient.push_back((one - z) * m);
    qvecs.push_back(vec_of(quotient.back()));
  }
  rep.dim_crossed = la::span_rank(qvecs);
  rep.dimension_law = (rep.dim_crossed == rep.dim_crossed_group - rep.dim_ideal);

  {
    bool ok = true;
    for (auto& m : jmats)
      if (((one - z) * m).cwiseAbs().maxCoeff() > 1e-8) ok = false;
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 5 && ok; ++trial) {
      auto a1 = rand_in(A, SubSet::full(k), rng), b1 = rand_in(A, SubSet::full(k), rng);
      auto a2 = rand_in(A, SubSet::full(k), rng), b2 = rand_in(A, SubSet::full(k), rng);
      // (a1 + g b1)(a2 + g b2) with g the order-two generator
      auto pa = a1 * a2 + alpha.apply(A, b1) * b2;
      auto pb = alpha.apply(A, a1) * b2 + b1 * a2;
      auto embed = [&](const AlgElement& a, const AlgElement& b) {
        return Mat((one - z) * (model.rep_coeff(A, alpha, a) +
                                model.flip * model.rep_coeff(A, alpha, b)));
      };
      Mat lhs = embed(pa, pb);
      Mat x1 = embed(a1, b1);
      Mat x2 = embed(a2, b2);
      if ((lhs - x1 * x2).cwiseAbs().maxCoeff() > 1e-7 * std::max(1.0, lhs.cwiseAbs().maxCoeff()))
        ok = false;
    }
    rep.quotient_hom_verified = ok;
  }

  rep.blocks = la::block_structure(quotient, seed);

  rep.trivial_case = true;
  for (int b = 0; b < k && rep.trivial_case; ++b) {
    if (alpha.beta[b] != b) rep.trivial_case = false;
    else if (!same_phase(Mat(Mat::Identity(A.blocks[b], A.blocks[b])), alpha.u[b]))
      rep.trivial_case = false;
  }
  if (rep.trivial_case && (u - AlgElement::support_projection(A, I)).max_abs() > tol)
    rep.trivial_case = false;

  if (rep.trivial_case) {
    std::vector<int> expect = A.blocks;
    for (int b = 0; b < k; ++b)
      if (!I.test(b)) expect.push_back(A.blocks[b]);
    std::sort(expect.begin(), expect.end());
    rep.direct_sum_verified = (expect == rep.blocks);

    auto S = std::make_shared<isg::InverseSemigroup>(
        isg::InverseSemigroup(2, {0, 1, 1, 0}, {0, 1}, 0, std::nullopt, {"1", "-1"}).adjoin_zero());
    std::vector<fd::PartialIsoAction::ElementData> data(3);
    auto ident = [&](const Ideal& src) {
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
    data[2] = ident(I);
    fd::PartialIsoAction act(S, A, std::move(data));
    auto reg = regular_representation(act);
    auto dims = dimension_report(act, reg);
    std::vector<Mat> image;
    for (auto& [t, xi] : slot_basis(act)) image.push_back(reg.pi(t, xi));
    auto image_blocks = la::block_structure(image, seed + 1);
    rep.partial_iso_route_agrees =
        (dims.algebraic_dim == rep.dim_crossed) && (image_blocks == rep.blocks);
  }

  return rep;
}

}  // namespace iscp::xp
