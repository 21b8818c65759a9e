#ifndef ISCP_ACT_HPP
#define ISCP_ACT_HPP

#include <memory>
#include <optional>
#include <vector>

#include "iscp/isg.hpp"
#include "iscp/topo.hpp"

namespace iscp::act {

/// Action of a finite inverse semigroup on a finite space by partial
/// homeomorphisms.  map[t][x] is the image of x under t, or -1 when x is
/// outside the domain of t.  The semigroup must be unital; the unit acts
/// as the identity on the whole space.
class SpaceAction {
 public:
  SpaceAction(std::shared_ptr<const isg::InverseSemigroup> S, topo::FiniteSpace X,
              std::vector<std::vector<int>> maps, bool zero_preserving);

  static ValidationReport validate(const isg::InverseSemigroup& S, const topo::FiniteSpace& X,
                                   const std::vector<std::vector<int>>& maps,
                                   bool zero_preserving);

  const isg::InverseSemigroup& S() const { return *S_; }
  std::shared_ptr<const isg::InverseSemigroup> S_ptr() const { return S_; }
  const topo::FiniteSpace& X() const { return X_; }
  bool zero_preserving() const { return zero_preserving_; }

  int apply(int t, int x) const { return maps_[t][x]; }
  const SubSet& domain(int t) const { return dom_[t]; }    // domain of the map of t
  const SubSet& codomain(int t) const { return cod_[t]; }  // its image
  SubSet image(int t, const SubSet& s) const;
  SubSet preimage(int t, const SubSet& s) const;

  /// D_{1,t}: the union of the domains of the idempotents below both the
  /// unit and t.
  SubSet d1t(int t) const;

 private:
  std::shared_ptr<const isg::InverseSemigroup> S_;
  topo::FiniteSpace X_;
  std::vector<std::vector<int>> maps_;
  std::vector<SubSet> dom_, cod_;
  bool zero_preserving_;
};

/// The universal action on the character space of E(S).
/// Requires both a zero and a unit in S.
struct UniversalAction {
  topo::SemilatticeSpectrum spectrum;
  SpaceAction action;
};
UniversalAction universal_action(std::shared_ptr<const isg::InverseSemigroup> S);

/// Transformation groupoid of germs of a space action.  The arrow-space
/// topology is generated by the images of the open sets of X inside each
/// bisection; the generating basis is stored and all topological
/// predicates are evaluated against it (the full open-set lattice of an
/// arrow space is far too large to materialise even at desk scale).
class GermGroupoid {
 public:
  explicit GermGroupoid(SpaceAction action);

  const SpaceAction& action() const { return action_; }
  int arrows() const { return n_; }
  std::pair<int, int> representative(int a) const { return rep_[a]; }  // (t, x)
  int germ(int t, int x) const;  // class of the pair, -1 if x outside D_{t*}
  int source(int a) const { return src_[a]; }   // point of X
  int range(int a) const { return rng_[a]; }    // point of X
  int unit_at(int x) const { return unit_of_[x]; }
  const SubSet& units() const { return units_; }
  int compose(int a, int b) const;  // a after b; -1 if not composable
  int inverse(int a) const { return inv_[a]; }
  const SubSet& bisection(int t) const { return bisection_[t]; }
  const std::vector<SubSet>& basis() const { return basis_; }

  bool is_open(const SubSet& s) const;
  SubSet closure(const SubSet& s) const;
  /// Materialises the full arrow-space topology; resource error when the
  /// lattice exceeds the cap.
  topo::FiniteSpace arrow_space(size_t cap = 1u << 20) const;

 private:
  SpaceAction action_;
  int n_ = 0;
  std::vector<std::pair<int, int>> rep_;
  std::vector<int> cls_;  // (t * |X| + x) -> class
  std::vector<int> src_, rng_, inv_, unit_of_;
  SubSet units_;
  std::vector<std::vector<int>> comp_;
  std::vector<SubSet> bisection_;
  std::vector<SubSet> basis_;
};

GermGroupoid germ_groupoid(const SpaceAction& action);

/// Is the unit set closed in the arrow space?  Computed directly from the
/// arrow topology and again bisection-wise (D_{1,t} relatively closed in
/// D_t for every t); disagreement is an internal error.
bool units_closed(const GermGroupoid& g);

struct D1tReport {
  bool all = true;
  std::vector<std::pair<int, bool>> per_t;  // (t, D_{1,t} closed in D_t)
};
D1tReport criterion_d1t_closed(const SpaceAction& action);

/// Direct T2 test of the arrow space; must equal
/// units_closed and X Hausdorff combined.
bool groupoid_is_hausdorff(const GermGroupoid& g);

struct EquivariantReport {
  bool units_closed_domain = false;
  bool units_closed_codomain = false;
  bool implication_holds = false;  // codomain closed => domain closed
};

/// f maps points of X to points of Y; must be continuous and equivariant
/// with exact domain compatibility.
EquivariantReport check_equivariant_inheritance(const std::vector<int>& f,
                                                const SpaceAction& actX,
                                                const SpaceAction& actY);

struct Prop69Report {
  bool e_star_unitary = false;
  bool order_condition = false;
  bool units_closed_universal = false;
  std::optional<std::pair<int, int>> witness;
  std::vector<bool> corpus_units_closed;
  bool chain_agrees = false;       // (1) <=> (2) <=> (3)
  bool implication_holds = false;  // (3) => every corpus value
};

/// Evaluates the equivalent characterisations of E*-unitarity on S and a
/// corpus of zero-preserving actions of S.
Prop69Report e_unitary_cross_check(std::shared_ptr<const isg::InverseSemigroup> S,
                                   const std::vector<SpaceAction>& corpus);

}  // namespace iscp::act

#endif
