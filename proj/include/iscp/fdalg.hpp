#ifndef ISCP_FDALG_HPP
#define ISCP_FDALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "iscp/isg.hpp"

namespace iscp::fd {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cd = std::complex<double>;

inline constexpr double kExactTol = 1e-10;

/// Direct sum of full complex matrix algebras, one block per entry.
struct FdAlgebra {
  std::vector<int> blocks;

  int num_blocks() const { return (int)blocks.size(); }
  /// Linear dimension, the sum of the squared block sizes.
  int dim() const {
    int d = 0;
    for (int b : blocks) d += b * b;
    return d;
  }
  int hilbert_dim() const {
    int d = 0;
    for (int b : blocks) d += b;
    return d;
  }
  bool operator==(const FdAlgebra& o) const { return blocks == o.blocks; }
};

/// Ideal = subset of blocks.
using Ideal = SubSet;

/// Element of an FdAlgebra: one matrix per block.
class AlgElement {
 public:
  AlgElement() = default;
  explicit AlgElement(const FdAlgebra& a);
  AlgElement(const FdAlgebra& a, std::vector<Mat> mats);

  static AlgElement zero(const FdAlgebra& a) { return AlgElement(a); }
  static AlgElement identity(const FdAlgebra& a);
  /// Central support projection of an ideal: identity on its blocks.
  static AlgElement support_projection(const FdAlgebra& a, const Ideal& i);
  /// Matrix unit e_ij in one block.
  static AlgElement unit_matrix(const FdAlgebra& a, int block, int i, int j);

  const FdAlgebra& algebra() const { return alg_; }
  const Mat& block(int b) const { return m_[b]; }
  Mat& block(int b) { return m_[b]; }

  AlgElement operator+(const AlgElement& o) const;
  AlgElement operator-(const AlgElement& o) const;
  AlgElement operator*(const AlgElement& o) const;
  AlgElement operator*(cd scalar) const;
  AlgElement star() const;
  /// Cut to an ideal: zero outside its blocks.
  AlgElement cut(const Ideal& i) const;
  /// Blocks carrying any entry above the tolerance.
  Ideal support(double tol = kExactTol) const;
  bool is_zero(double tol = kExactTol) const;
  /// Maximum block operator norm.
  double norm() const;
  double max_abs() const;
  /// Smallest eigenvalue over all blocks of the selfadjoint part.
  double min_eigenvalue() const;

  Vec vectorize() const;
  static AlgElement from_vector(const FdAlgebra& a, const Vec& v);

 private:
  FdAlgebra alg_;
  std::vector<Mat> m_;
};

/// Is I complemented in J?  Always true for block subsets; returns the
/// complement J \ I.  I must be contained in J.
Ideal complement_in(const Ideal& i, const Ideal& j);

/// Multiply a unitary by the phase making its first nonzero entry real
/// and positive.
Mat canonical_phase(const Mat& u);

/// Action of an inverse semigroup on an FdAlgebra by partial
/// *-isomorphisms between ideals: per element a block bijection between
/// the source and target ideals, implemented by one unitary per block.
class PartialIsoAction {
 public:
  struct ElementData {
    Ideal source;              // blocks of the domain ideal
    std::vector<int> beta;     // block map, -1 outside the source
    std::vector<Mat> u;        // implementing unitary per source block
  };

  PartialIsoAction(std::shared_ptr<const isg::InverseSemigroup> S, FdAlgebra A,
                   std::vector<ElementData> data);

  static ValidationReport validate(const isg::InverseSemigroup& S, const FdAlgebra& A,
                                   const std::vector<ElementData>& data);

  const isg::InverseSemigroup& S() const { return *S_; }
  std::shared_ptr<const isg::InverseSemigroup> S_ptr() const { return S_; }
  const FdAlgebra& A() const { return A_; }

  const Ideal& source_ideal(int t) const { return data_[t].source; }  // I_{t*t}
  Ideal target_ideal(int t) const;                                    // I_{tt*}
  int beta(int t, int b) const { return data_[t].beta[b]; }
  const Mat& unitary(int t, int b) const { return data_[t].u[b]; }

  /// alpha_t applied to an element supported in the source ideal.
  AlgElement apply(int t, const AlgElement& x) const;
  /// Inverse map; equals apply(t*, .) as a map.
  AlgElement apply_inverse(int t, const AlgElement& x) const;

  // Hilbert bimodule structure on H_t = source ideal of t.
  AlgElement mu(int t, int u, const AlgElement& xi, const AlgElement& eta) const;
  AlgElement right_inner(int t, const AlgElement& xi, const AlgElement& eta) const;
  AlgElement left_inner(int t, const AlgElement& xi, const AlgElement& eta) const;
  AlgElement lmul(int t, const AlgElement& a, const AlgElement& xi) const;
  AlgElement rmul(int t, const AlgElement& xi, const AlgElement& b) const;

  /// The ideal generated by the source ideals of all common lower bounds.
  Ideal ideal_I_tu(int t, int u) const;
  /// Same, from a table built once per action.
  const Ideal& common_ideal(int t, int u) const;

  /// Identification of the parts of H_t and H_u supported in I_{t,u}.
  /// Verifies the defining factorisation through the common lower bounds
  /// and returns xi unchanged (inclusions are literal here).
  AlgElement theta(int u, int t, const AlgElement& xi, double tol = kExactTol) const;

  /// J_t: the involution H_t -> H_{t*}, xi -> alpha_t(xi)*.  Verifies the
  /// defining identity mu_{t*,t}(J(xi) (x) eta) = <xi,eta> on a block basis.
  AlgElement involution_J(int t, const AlgElement& xi, double tol = kExactTol) const;

  /// Basis of H_t as matrix units of the source blocks.
  std::vector<AlgElement> bimodule_basis(int t) const;

 private:
  std::shared_ptr<const isg::InverseSemigroup> S_;
  FdAlgebra A_;
  std::vector<ElementData> data_;
  mutable std::vector<Ideal> itu_cache_;
};

}  // namespace iscp::fd

#endif
