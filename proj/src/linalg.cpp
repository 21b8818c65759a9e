#include "iscp/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <random>

namespace iscp::la {

int rank_of(const Mat& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::BDCSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double thresh = std::max(sv(0) * rel_tol, 1e-13);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++r;
  return r;
}

int span_rank(const std::vector<Vec>& vectors, double rel_tol) {
  if (vectors.empty()) return 0;
  Mat m((int)vectors[0].size(), (int)vectors.size());
  for (size_t i = 0; i < vectors.size(); ++i) m.col((int)i) = vectors[i];
  return rank_of(m, rel_tol);
}

namespace {

std::vector<Mat> orthonormal_basis(const std::vector<Mat>& spanning) {
  int nsq = (int)spanning[0].size();
  Mat m(nsq, (int)spanning.size());
  for (size_t i = 0; i < spanning.size(); ++i)
    m.col((int)i) = Eigen::Map<const Vec>(spanning[i].data(), nsq);
  Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double thresh = std::max(sv(0) * 1e-9, 1e-13);
  std::vector<Mat> basis;
  int rows = (int)spanning[0].rows();
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) <= thresh) break;
    Vec col = svd.matrixU().col(i);
    basis.push_back(Eigen::Map<const Mat>(col.data(), rows, rows));
  }
  return basis;
}

// residual of the best approximation of x inside the orthonormal basis
double distance_to_span(const std::vector<Mat>& basis, const Mat& x) {
  Vec vx = Eigen::Map<const Vec>(x.data(), x.size());
  Vec res = vx;
  for (auto& b : basis) {
    Vec vb = Eigen::Map<const Vec>(b.data(), b.size());
    res -= vb * vb.dot(vx);
  }
  return res.norm() / std::max(1.0, vx.norm());
}

}  // namespace

std::vector<int> block_structure(const std::vector<Mat>& spanning, std::uint64_t seed) {
  if (spanning.empty()) return {};
  auto basis = orthonormal_basis(spanning);
  int r = (int)basis.size();
  int N = (int)basis[0].rows();

  // centre of the algebra inside the span
  Mat commut(r * N * N, r);
  for (int k = 0; k < r; ++k) {
    for (int i = 0; i < r; ++i) {
      Mat c = basis[k] * basis[i] - basis[i] * basis[k];
      commut.block(i * N * N, k, N * N, 1) = Eigen::Map<const Vec>(c.data(), N * N);
    }
  }
  Mat gram = commut.adjoint() * commut;
  Eigen::SelfAdjointEigenSolver<Mat> ges(gram);
  double gscale = std::max(1.0, ges.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<Mat> centre;
  for (int i = 0; i < r; ++i) {
    if (ges.eigenvalues()(i) > 1e-12 * gscale) continue;
    Mat z = Mat::Zero(N, N);
    for (int k = 0; k < r; ++k) z += ges.eigenvectors()(k, i) * basis[k];
    centre.push_back(z);
  }
  if (centre.empty()) throw internal_check_error("algebra has an empty centre");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  for (int attempt = 0; attempt < 20; ++attempt) {
    Mat z = Mat::Zero(N, N);
    for (auto& c : centre) z += std::complex<double>(g(rng), g(rng)) * c;
    Mat h = z + z.adjoint();
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    auto ev = es.eigenvalues();
    double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());

    // cluster eigenvalues
    std::vector<std::pair<int, int>> clusters;  // [begin, end)
    int begin = 0;
    for (int i = 1; i <= N; ++i) {
      if (i == N || ev(i) - ev(i - 1) > 1e-6 * scale) {
        clusters.push_back({begin, i});
        begin = i;
      }
    }

    std::vector<int> dims;
    int covered = 0;
    bool ok = true;
    for (auto& [b, e] : clusters) {
      Mat q = es.eigenvectors().middleCols(b, e - b);
      Mat p = q * q.adjoint();
      if (distance_to_span(basis, p) > 1e-7) continue;  // outside the algebra
      bool central = true;
      for (auto& bm : basis)
        if ((p * bm - bm * p).cwiseAbs().maxCoeff() > 1e-7 * scale) {
          central = false;
          break;
        }
      if (!central) {
        ok = false;
        break;
      }
      std::vector<Vec> cut;
      for (auto& bm : basis) {
        Mat pc = p * bm * p;
        cut.push_back(Eigen::Map<const Vec>(pc.data(), pc.size()));
      }
      int dsq = span_rank(cut, 1e-8);
      int d = (int)std::lround(std::sqrt((double)dsq));
      if (d * d != dsq) {
        ok = false;
        break;
      }
      dims.push_back(d);
      covered += dsq;
    }
    if (ok && covered == r) {
      std::sort(dims.begin(), dims.end());
      return dims;
    }
  }
  throw internal_check_error("block structure did not stabilise");
}

}  // namespace iscp::la
