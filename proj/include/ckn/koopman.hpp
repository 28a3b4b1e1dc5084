// Latent linear dynamics: block-diagonal advance of planar embedding pairs
// under K(lambda) = exp(mu*dt) * R(omega*dt) per 2x2 block, multi-step rollout
// with per-step re-evaluated eigenvalues, and mode nulling.
#pragma once

#include <torch/torch.h>

#include <functional>
#include <set>
#include <vector>

namespace ckn {

// One complex-conjugate eigenvalue pair in continuous-time units.
struct EigenPair {
  double mu = 0.0;     // growth rate, 1/s
  double omega = 0.0;  // angular frequency, rad/s
};

// Modal frequency in Hz: |omega| / (2*pi).
double pair_frequency(const EigenPair& pair);

// Scalar-path advance of one embedding (length 2M, pair i in slots 2i, 2i+1).
// Each pair is multiplied by exp(mu_i*dt) * [[cos, -sin], [sin, cos]](omega_i*dt).
std::vector<double> advance(const std::vector<double>& y, const std::vector<EigenPair>& pairs,
                            double dt);

// Batched differentiable advance. y: [B, 2M]; mu, omega: [B, M]. Gradients
// flow to y, mu, and omega.
torch::Tensor advance(const torch::Tensor& y, const torch::Tensor& mu,
                      const torch::Tensor& omega, double dt);

// The 2x2 blocks of K(lambda) for given pairs: returns M matrices row-major
// [M][4]. Determinant of block i is exp(2*mu_i*dt).
std::vector<std::array<double, 4>> koopman_blocks(const std::vector<EigenPair>& pairs, double dt);

// Evaluates eigenvalues from an embedding batch: returns {mu [B,M], omega [B,M]}.
using EigvalFn = std::function<std::pair<torch::Tensor, torch::Tensor>(const torch::Tensor&)>;

// Iterates y_{k+1} = advance(y_k, eigvals(y_k), dt) m times and returns the m
// advanced embeddings. With reevaluate = false the eigenvalues are frozen at
// eigvals(y1), which reduces to powers of a constant K for discrete spectra.
std::vector<torch::Tensor> rollout(const torch::Tensor& y1, int m, double dt,
                                   const EigvalFn& eigvals, bool reevaluate = true);

// Zeroes every pair not in `keep` (0-based mode indices); pairs in `keep`
// pass through unchanged.
torch::Tensor null_modes(const torch::Tensor& y, const std::set<int>& keep, int n_pairs);
std::vector<double> null_modes(const std::vector<double>& y, const std::set<int>& keep);

}  // namespace ckn
