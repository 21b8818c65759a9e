#ifndef ISCP_TOPO_HPP
#define ISCP_TOPO_HPP

#include <string>
#include <vector>

#include "iscp/common.hpp"
#include "iscp/isg.hpp"

namespace iscp::topo {

/// Finite topological space with the full family of open sets stored as
/// explicit bitsets.  Possibly non-Hausdorff.
class FiniteSpace {
 public:
  static ValidationReport validate_family(int n, const std::vector<SubSet>& family);

  FiniteSpace(int n, std::vector<SubSet> opens, std::vector<std::string> labels = {});
  static FiniteSpace discrete(int n, std::vector<std::string> labels = {});
  static FiniteSpace indiscrete(int n, std::vector<std::string> labels = {});
  /// Closes the generating family under finite unions (and adds the empty
  /// set and the whole space).  Intersections of generators must already be
  /// unions of generators for this to be the generated topology; this holds
  /// for every basis used in the toolkit and is verified.
  static FiniteSpace from_basis(int n, const std::vector<SubSet>& basis,
                                std::vector<std::string> labels = {}, size_t cap = 1u << 22);

  int points() const { return n_; }
  const std::vector<SubSet>& opens() const { return opens_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int label_index(const std::string& l) const;

  bool is_open(const SubSet& s) const;
  /// Complement of the union of all opens disjoint from the subset.
  SubSet closure(const SubSet& s) const;
  /// Is A relatively closed in the open set B?  Precondition: B open.
  bool is_closed_in(const SubSet& a, const SubSet& b) const;
  /// Pairwise separation by disjoint opens, cross-checked against
  /// discreteness; a mismatch between the two is an internal error.
  bool is_hausdorff() const;
  bool is_discrete() const;
  /// Smallest open set containing x.
  SubSet min_open(int x) const;

 private:
  int n_;
  std::vector<SubSet> opens_;
  std::vector<std::string> labels_;
};

/// Character space of a finite meet-semilattice E with zero and unit.
/// Characters are the multiplicative {0,1}-valued maps sending 1 to 1 and
/// 0 to 0; each is the indicator of a principal filter.
struct SemilatticeSpectrum {
  isg::InverseSemigroup E;          // the semilattice itself
  std::vector<int> filter_gen;      // character index -> minimum of its filter
  std::vector<SubSet> character;    // character index -> subset of E mapped to 1
  std::vector<SubSet> basis;        // e -> U_e as a character subset
  FiniteSpace space;                // the (possibly non-Hausdorff) topology
  // The alternative totally disconnected topology on the same character
  // set is discrete at finite scale; exposed as a flag rather than a
  // second stored space.
  bool paterson_topology_discrete = true;

  int characters() const { return (int)character.size(); }
  FiniteSpace paterson_space() const;
};

/// Enumerates all characters of E and assembles the spectrum.
/// Precondition: E is a commutative idempotent monoid with zero.
SemilatticeSpectrum semilattice_spectrum(const isg::InverseSemigroup& E);

/// Verifies that V -> { e : U_e subset of V } is a lattice bijection from
/// the opens of the spectrum onto the down-closed subsets of E containing 0.
bool ideal_open_bijection_check(const SemilatticeSpectrum& spec);

struct UltraResult {
  SubSet ultra;                // characters with maximal filter
  SubSet closure_in_spectrum;  // closure of that set in the spectrum topology
};

/// Characters whose filter is maximal among character filters.
UltraResult ultracharacters(const SemilatticeSpectrum& spec);

}  // namespace iscp::topo

#endif
