#include "ckn/dmd.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ckn {

Eigen::MatrixXd snapshot_matrix(const VideoClip& clip) {
  const auto fs = static_cast<Eigen::Index>(clip.frame_size());
  Eigen::MatrixXd snaps(fs, clip.n_frames);
  for (int t = 0; t < clip.n_frames; ++t) {
    const auto frame = clip.frame(t);
    for (Eigen::Index p = 0; p < fs; ++p) snaps(p, t) = frame[static_cast<std::size_t>(p)];
  }
  return snaps;
}

DmdResult dmd_matrix(const Eigen::MatrixXd& snapshots, int rank, double dt) {
  const Eigen::Index n = snapshots.cols();
  if (n < 2) throw std::invalid_argument("dmd: need at least 2 snapshots");
  if (rank < 1) throw std::invalid_argument("dmd: rank must be >= 1");
  if (rank > std::min(snapshots.rows(), n - 1))
    throw std::invalid_argument("dmd: rank exceeds min dimension of the snapshot matrix");
  if (dt <= 0.0) throw std::invalid_argument("dmd: dt must be > 0");

  const Eigen::MatrixXd X = snapshots.leftCols(n - 1);
  const Eigen::MatrixXd Xp = snapshots.rightCols(n - 1);

  Eigen::BDCSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  int r = rank;
  // guard against a numerically rank-deficient X
  const double tol = sv(0) * 1e-12;
  while (r > 1 && sv(r - 1) < tol) --r;

  const Eigen::MatrixXd Ur = svd.matrixU().leftCols(r);
  const Eigen::MatrixXd Vr = svd.matrixV().leftCols(r);
  const Eigen::VectorXd sr_inv = sv.head(r).cwiseInverse();

  // reduced operator: Atilde = Ur^T Xp Vr Sr^-1
  const Eigen::MatrixXd XpVS = Xp * (Vr * sr_inv.asDiagonal());
  const Eigen::MatrixXd Atilde = Ur.transpose() * XpVS;

  Eigen::EigenSolver<Eigen::MatrixXd> eig(Atilde);
  if (eig.info() != Eigen::Success) throw std::runtime_error("dmd: eigendecomposition failed");

  DmdResult result;
  result.rank = r;
  result.dt = dt;
  // exact DMD modes: Phi = Xp Vr Sr^-1 W
  Eigen::MatrixXcd Phi = XpVS * eig.eigenvectors();
  result.modes.resize(Phi.rows(), r);
  result.eigenvalues.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    const std::complex<double> lambda = eig.eigenvalues()(i);
    result.eigenvalues[static_cast<std::size_t>(i)] = lambda;
    const double norm = Phi.col(i).norm();
    result.modes.col(i) = norm > 0.0 ? (Phi.col(i) / norm).eval() : Phi.col(i);
  }
  // amplitudes: least-squares fit of the first snapshot
  const Eigen::VectorXcd b =
      result.modes.colPivHouseholderQr().solve(X.col(0).cast<std::complex<double>>());
  result.amplitudes.assign(b.data(), b.data() + b.size());
  for (int i = 0; i < r; ++i) {
    const auto lambda = result.eigenvalues[static_cast<std::size_t>(i)];
    result.frequencies.push_back(std::arg(lambda) / (2.0 * std::numbers::pi * dt));
    result.growth_rates.push_back(std::log(std::max(std::abs(lambda), 1e-300)) / dt);
  }
  return result;
}

DmdResult dmd(const VideoClip& clip, int rank) {
  if (clip.n_frames < rank + 1)
    throw std::invalid_argument("dmd: need n_frames >= rank + 1");
  return dmd_matrix(snapshot_matrix(clip), rank, clip.dt);
}

Eigen::MatrixXd dmd_reconstruct(const DmdResult& result, int n_frames) {
  if (n_frames < 1) throw std::invalid_argument("dmd_reconstruct: n_frames must be >= 1");
  Eigen::VectorXcd state = Eigen::Map<const Eigen::VectorXcd>(result.amplitudes.data(),
                                                              static_cast<Eigen::Index>(
                                                                  result.amplitudes.size()));
  Eigen::MatrixXd out(result.modes.rows(), n_frames);
  Eigen::VectorXcd coeff = state;
  for (int k = 0; k < n_frames; ++k) {
    out.col(k) = (result.modes * coeff).real();
    for (Eigen::Index i = 0; i < coeff.size(); ++i)
      coeff(i) *= result.eigenvalues[static_cast<std::size_t>(i)];
  }
  return out;
}

double dmd_reconstruction_error(const DmdResult& result, const VideoClip& clip) {
  const Eigen::MatrixXd snaps = snapshot_matrix(clip);
  const Eigen::MatrixXd recon = dmd_reconstruct(result, clip.n_frames);
  return (recon - snaps).norm() / snaps.norm();
}

std::vector<int> dmd_modes_by_energy(const DmdResult& result, double f_min) {
  std::vector<int> idx;
  for (int i = 0; i < result.rank; ++i) {
    if (std::abs(result.frequencies[static_cast<std::size_t>(i)]) >= f_min) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::abs(result.amplitudes[static_cast<std::size_t>(a)]) >
           std::abs(result.amplitudes[static_cast<std::size_t>(b)]);
  });
  return idx;
}

}  // namespace ckn
