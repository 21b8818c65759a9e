#ifndef ISCP_LINALG_HPP
#define ISCP_LINALG_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "iscp/common.hpp"

namespace iscp::la {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Rank with a relative singular value threshold.
int rank_of(const Mat& m, double rel_tol = 1e-9);

/// Rank of the span of a list of vectors (as columns).
int span_rank(const std::vector<Vec>& vectors, double rel_tol = 1e-9);

/// Block structure (Wedderburn decomposition) of a concrete *-algebra of
/// matrices given by a spanning set.  The span must be closed under
/// products and adjoints and contain the unit of the algebra.  The random
/// draws used to split the centre are seeded, so the result is
/// deterministic.  Returns the sorted list of block sizes.
std::vector<int> block_structure(const std::vector<Mat>& spanning, std::uint64_t seed);

}  // namespace iscp::la

#endif
