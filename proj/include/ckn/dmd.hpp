// Exact dynamic mode decomposition on flattened video frames: truncated SVD
// of the first-snapshot matrix, eigendecomposition of the reduced operator,
// and modes lifted back to pixel space. Serves as the linear baseline.
#pragma once

#include "ckn/video.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace ckn {

struct DmdResult {
  std::vector<std::complex<double>> eigenvalues;  // discrete-time, one per retained mode
  Eigen::MatrixXcd modes;                         // pixels x rank, unit-norm columns
  std::vector<std::complex<double>> amplitudes;   // least-squares fit of frame 0
  std::vector<double> frequencies;                // angle(lambda) / (2*pi*dt), Hz
  std::vector<double> growth_rates;               // ln|lambda| / dt, 1/s
  int rank = 0;
  double dt = 0.0;
};

// Exact DMD at the given truncation rank. No mean subtraction is applied.
// Requires n_frames >= rank + 1 and rank <= min(pixels, n_frames - 1).
DmdResult dmd(const VideoClip& clip, int rank);

// Same decomposition on an arbitrary snapshot matrix (columns = snapshots).
DmdResult dmd_matrix(const Eigen::MatrixXd& snapshots, int rank, double dt);

// Linear reconstruction x_k ~= Phi * diag(lambda^k) * b, k = 0..n_frames-1.
// Returns the real part, pixels x n_frames.
Eigen::MatrixXd dmd_reconstruct(const DmdResult& result, int n_frames);

// Relative Frobenius error of the rank-r linear reconstruction against the
// clip's own snapshot matrix.
double dmd_reconstruction_error(const DmdResult& result, const VideoClip& clip);

// Flattens clip frames into a pixels x n_frames column matrix.
Eigen::MatrixXd snapshot_matrix(const VideoClip& clip);

// Mode energy ranking: indices sorted by |amplitude| descending, skipping
// modes with non-positive frequency magnitude below f_min (DC handling for
// frequency-isolation checks).
std::vector<int> dmd_modes_by_energy(const DmdResult& result, double f_min = 0.0);

}  // namespace ckn
