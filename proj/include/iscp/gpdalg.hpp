#ifndef ISCP_GPDALG_HPP
#define ISCP_GPDALG_HPP

#include <cstdint>

#include "iscp/act.hpp"
#include "iscp/fdalg.hpp"
#include "iscp/linalg.hpp"

namespace iscp::gpd {

/// Finite discrete groupoid: arrows with unit arrows among them, source
/// and range mapping into the unit arrows, a partial composition table and
/// inversion.  All axioms are checked exhaustively on construction.
class FiniteGroupoid {
 public:
  FiniteGroupoid(int arrows, SubSet units, std::vector<int> src, std::vector<int> rng,
                 std::vector<std::vector<int>> comp, std::vector<int> inv);

  static ValidationReport validate(int arrows, const SubSet& units, const std::vector<int>& src,
                                   const std::vector<int>& rng,
                                   const std::vector<std::vector<int>>& comp,
                                   const std::vector<int>& inv);

  int arrows() const { return n_; }
  const SubSet& units() const { return units_; }
  int source(int a) const { return src_[a]; }
  int range(int a) const { return rng_[a]; }
  int compose(int a, int b) const { return comp_[a][b]; }  // -1 when undefined
  int inverse(int a) const { return inv_[a]; }
  /// Arrows with the given source unit.
  std::vector<int> source_fiber(int unit) const;

 private:
  int n_;
  SubSet units_;
  std::vector<int> src_, rng_;
  std::vector<std::vector<int>> comp_;
  std::vector<int> inv_;
};

/// Transformation groupoid of an action on a discrete space, with its
/// semigroup grading and the germ data retained.
struct GradedGroupoid {
  FiniteGroupoid G;
  std::vector<SubSet> grading;       // t -> arrows of the bisection of t
  std::vector<std::vector<int>> germ;  // t -> per point: arrow id or -1
  std::vector<int> unit_at;          // point -> unit arrow
};

/// Requires a discrete space (convolution on non-Hausdorff arrow spaces is
/// out of scope here).
GradedGroupoid from_discrete_action(const act::SpaceAction& a);

/// Convolution *-algebra of a finite groupoid with counting measure.
struct ConvolutionAlgebra {
  fd::FdAlgebra presentation;     // block sizes from the minimal central projections
  std::vector<la::Mat> basis;     // left regular matrices of the point masses
  la::Vec convolve(const FiniteGroupoid& g, const la::Vec& f1, const la::Vec& f2) const;
  la::Vec involution(const FiniteGroupoid& g, const la::Vec& f) const;
};
ConvolutionAlgebra convolution_algebra(const FiniteGroupoid& g, std::uint64_t seed);

/// The family of regular representations on the source fibers.
struct RegularFamily {
  std::vector<std::vector<int>> fiber;  // per unit: its source fiber
  std::vector<std::vector<la::Mat>> lambda;  // per unit: matrices of the point masses
  bool direct_sum_faithful = false;
};
RegularFamily regular_representations(const FiniteGroupoid& g);

struct InnerExactReport {
  bool invariant = false;
  int dim_full = 0, dim_over_u = 0, dim_over_f = 0, kernel_dim = 0;
  bool restriction_multiplicative = false;
  bool exact = false;  // always true at finite scale; failure is an internal error
};
/// U is a subset of the unit arrows.
InnerExactReport inner_exactness_check(const FiniteGroupoid& g, const SubSet& u);

struct IteratedIsoReport {
  int dim_crossed = 0;
  int dim_convolution = 0;
  double rep_axiom_defect = 0;     // R1-R3 of the canonical map
  double expectation_defect = 0;   // restriction to units versus E
  bool bijective = false;
  bool iso = false;
};
/// Compares the algebraic crossed product of the induced action on the
/// functions on X with the convolution algebra of the transformation
/// groupoid, through the canonical bisection-supported map.
IteratedIsoReport verify_iterated_iso(const act::SpaceAction& a, std::uint64_t seed);

/// The induced action on the function algebra of a discrete space: one
/// scalar block per point.
fd::PartialIsoAction function_algebra_action(const act::SpaceAction& a);

}  // namespace iscp::gpd

#endif
