#ifndef ISCP_XPROD_HPP
#define ISCP_XPROD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "iscp/fdalg.hpp"
#include "iscp/linalg.hpp"

namespace iscp::xp {

using fd::AlgElement;
using fd::cd;
using fd::FdAlgebra;
using fd::Ideal;
using fd::Mat;

/// Finitely supported sum of xi_t delta_t with xi_t in the bimodule of t.
/// Elements keep a pointer to their action and must not outlive it.
class CrossedElement {
 public:
  explicit CrossedElement(const fd::PartialIsoAction& act) : act_(&act) {}
  static CrossedElement monomial(const fd::PartialIsoAction& act, int t, AlgElement xi);

  const fd::PartialIsoAction& action() const { return *act_; }
  const std::map<int, AlgElement>& terms() const { return terms_; }
  AlgElement coeff(int t) const;
  void set_coeff(int t, AlgElement xi);  // checks the bimodule support
  void add_coeff(int t, const AlgElement& xi);

  CrossedElement operator+(const CrossedElement& o) const;
  CrossedElement operator-(const CrossedElement& o) const;
  CrossedElement operator*(cd scalar) const;
  bool is_zero(double tol = fd::kExactTol) const;
  double max_abs() const;

 private:
  const fd::PartialIsoAction* act_;
  std::map<int, AlgElement> terms_;
};

/// Canonical representative: after folding, the slot of t_j carries no
/// component supported in I_{t_i, t_j} for any earlier t_i.  Two elements
/// are equal in the algebraic crossed product iff their normal forms agree
/// entrywise.  The order is a permutation of the semigroup elements; the
/// index order is the default.
CrossedElement normal_form(const CrossedElement& x, const std::vector<int>& order = {});

CrossedElement multiply(const CrossedElement& x, const CrossedElement& y);
CrossedElement star(const CrossedElement& x);
bool equal(const CrossedElement& x, const CrossedElement& y, double tol = fd::kExactTol);

/// E(sum xi_t delta_t) = sum of the I_{1,t}-cut of xi_t, viewed in A.
AlgElement expectation(const CrossedElement& x);
/// E(x* y).
AlgElement inner_product(const CrossedElement& x, const CrossedElement& y);

struct PositivityReport {
  double min_eigenvalue = 0;  // of E(x*x), over all blocks
  bool expectation_zero = false;
  bool normal_form_zero = false;
  bool equivalent = false;  // the two vanish together
};
PositivityReport positivity_check(const CrossedElement& x, double tol_eig = 1e-9,
                                  double tol_zero = fd::kExactTol);

/// Representation of the crossed product induced from a representation of
/// the coefficient algebra with the given block multiplicities.  The
/// identity multiplicities give the regular representation on the module
/// of normal forms with the expectation inner product.
class InducedRep {
 public:
  InducedRep(const fd::PartialIsoAction& act, std::vector<int> multiplicities);

  const fd::PartialIsoAction& action() const { return *act_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  int dim() const { return dim_; }
  int raw_dim() const { return total_; }

  /// Operator of xi delta_t on the orthonormalised module.
  Mat pi(int t, const AlgElement& xi) const;
  Mat pi(const CrossedElement& x) const;
  /// The representation of the coefficient algebra alone.
  Mat pi_coeff(const AlgElement& a) const;

  double min_kept_gram_eigenvalue() const { return gram_min_kept_; }
  double max_dropped_gram_eigenvalue() const { return gram_max_dropped_; }

 private:
  struct Summand {
    int t, block, d, m, offset;
  };
  Mat op_raw(int t, const AlgElement& xi) const;
  const fd::PartialIsoAction* act_;
  std::vector<int> mult_;
  std::vector<Summand> summands_;
  std::vector<std::vector<int>> summand_index_;  // [t][block] -> summand or -1
  int total_ = 0, dim_ = 0;
  Mat to_h_, from_h_;
  double gram_min_kept_ = 0, gram_max_dropped_ = 0;
};

InducedRep regular_representation(const fd::PartialIsoAction& act);

/// Basis of the free module: all (t, matrix unit of a source block of t).
std::vector<std::pair<int, AlgElement>> slot_basis(const fd::PartialIsoAction& act);

/// Vector of a crossed element in the free-module coordinates.
la::Vec free_coordinates(const CrossedElement& x);

struct DimensionReport {
  int free_dim = 0;             // sum over t of dim H_t
  int algebraic_dim = 0;        // rank of the normal forms
  int relation_rank = 0;        // span of the identification relations
  int relation_rank_restricted = 0;  // span generated only by comparable pairs
  int image_dim = 0;            // rank of the represented algebra
  bool representation_faithful = false;
};
DimensionReport dimension_report(const fd::PartialIsoAction& act, const InducedRep& rep);

struct RepAxiomReport {
  double multiplicativity = 0;   // pi_{tu}(mu(xi,eta)) vs pi_t(xi) pi_u(eta)
  double right_inner = 0;        // pi_t(xi)* pi_t(eta) vs pi_1(<xi,eta>)
  double left_inner = 0;         // pi_t(xi) pi_t(eta)* vs pi_1([xi,eta])
  double theta_compat = 0;       // pi_u(theta(xi)) vs pi_t(xi)
  double involution_compat = 0;  // pi_{t*}(J xi) vs pi_t(xi)*
  double max() const;
};
RepAxiomReport check_representation_axioms(const InducedRep& rep, int samples_per_pair,
                                           std::uint64_t seed);

/// Largest deviation of the operator norm of xi delta_t in the
/// representation from the norm of xi, over random xi per slot.
double grading_isometry_defect(const InducedRep& rep, int samples_per_slot, std::uint64_t seed);

struct EFaithfulReport {
  bool faithful_on_coefficients = false;
  bool induced_faithful = false;
  int induced_dim = 0;
  int algebraic_dim = 0;
};
EFaithfulReport e_faithful_check(const fd::PartialIsoAction& act,
                                 const std::vector<int>& multiplicities);

/// phi(E(x)) for the functional a -> sum_b tr(pairing_b a_b).
cd induced_functional(const fd::PartialIsoAction& act, const AlgElement& pairing,
                      const CrossedElement& x);

/// Automorphism of an FdAlgebra presented blockwise.
struct BlockAutomorphism {
  std::vector<int> beta;
  std::vector<Mat> u;
  AlgElement apply(const FdAlgebra& a, const AlgElement& x) const;
};

struct Crossed01m1Report {
  int dim_coefficients = 0;
  int dim_ideal = 0;
  int dim_crossed_group = 0;   // by the two-element group
  int dim_relation_ideal = 0;  // the ideal dividing the group crossed product
  int dim_crossed = 0;
  bool dimension_law = false;  // dim_crossed = dim_crossed_group - dim_ideal
  bool relation_ideal_verified = false;
  bool quotient_hom_verified = false;
  std::vector<int> blocks;  // block structure of the crossed product
  bool trivial_case = false;
  bool direct_sum_verified = false;       // crossed = A + A/I blockwise
  bool partial_iso_route_agrees = false;  // trivial case only
};

/// The crossed product by the two-element group with a zero adjoined, for
/// the action data (I, alpha, u): alpha^2 = id, alpha(I) = I, alpha
/// restricted to I implemented by the selfadjoint unitary u of I.
Crossed01m1Report crossed_01m1(const FdAlgebra& A, const Ideal& I, const BlockAutomorphism& alpha,
                               const AlgElement& u, std::uint64_t seed);

}  // namespace iscp::xp

#endif
