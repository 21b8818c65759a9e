#ifndef ISCP_CORPUS_HPP
#define ISCP_CORPUS_HPP

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "iscp/act.hpp"
#include "iscp/fdalg.hpp"
#include "iscp/xprod.hpp"

namespace iscp::corpus {

// semigroups
std::shared_ptr<const isg::InverseSemigroup> z2();
std::shared_ptr<const isg::InverseSemigroup> z2_with_zero();  // {0,1,-1}, unit first
std::shared_ptr<const isg::InverseSemigroup> z3();
std::shared_ptr<const isg::InverseSemigroup> z3_with_zero();

struct Generated {
  std::shared_ptr<const isg::InverseSemigroup> S;
  std::vector<isg::PartialBijection> elements;
};
Generated symmetric_inverse_monoid(int n);
Generated generated_monoid(int n, std::vector<isg::PartialBijection> extra_generators);

// spaces
topo::FiniteSpace sierpinski();
topo::FiniteSpace chain3();  // three points with nested opens

// space actions
act::SpaceAction action_01m1(topo::FiniteSpace X, const SubSet& d0);
act::SpaceAction defining_action(const Generated& g);
act::SpaceAction trivial_group_action(std::shared_ptr<const isg::InverseSemigroup> G,
                                      topo::FiniteSpace X);

struct NamedSpaceAction {
  std::string name;
  act::SpaceAction action;
};
/// At least thirty actions including every non-Hausdorff space fixture.
std::vector<NamedSpaceAction> space_action_corpus();
/// At least fifteen actions on discrete spaces.
std::vector<NamedSpaceAction> discrete_action_corpus();

// fd helpers
fd::Mat random_unitary(int d, std::mt19937_64& rng);
fd::AlgElement random_element(const fd::FdAlgebra& a, const fd::Ideal& support,
                              std::mt19937_64& rng);
xp::CrossedElement random_crossed(const fd::PartialIsoAction& act, std::mt19937_64& rng,
                                  int max_terms = 3);

// fd actions
fd::PartialIsoAction trivial_01m1_fd(fd::FdAlgebra A, const fd::Ideal& ideal);
fd::PartialIsoAction z2_swap_cc();  // two scalar blocks exchanged
fd::PartialIsoAction z2_ad_m2();    // one matrix block, conjugation flip
/// Action induced from a point action with coboundary unitaries; the
/// block dimensions must be constant on orbits.
fd::PartialIsoAction coboundary_action(std::shared_ptr<const isg::InverseSemigroup> S,
                                       const std::vector<isg::PartialBijection>& elems,
                                       const std::vector<int>& dims, std::uint64_t seed);
fd::PartialIsoAction random_fd_action(std::uint64_t seed);

struct NamedFdAction {
  std::string name;
  fd::PartialIsoAction action;
};
/// The structural fixtures plus `random_count` seeded random actions.
std::vector<NamedFdAction> fd_action_corpus(int random_count, std::uint64_t seed);

// (I, alpha, u) triples
struct Triple01m1 {
  fd::FdAlgebra A;
  fd::Ideal I;
  xp::BlockAutomorphism alpha;
  fd::AlgElement u;
};
Triple01m1 trivial_triple_c2();
Triple01m1 matrix_block_triple();  // one 2x2 block plus a scalar block
Triple01m1 random_triple(std::uint64_t seed);

}  // namespace iscp::corpus

#endif
