#include "ckn/koopman.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ckn {

double pair_frequency(const EigenPair& pair) {
  return std::abs(pair.omega) / (2.0 * std::numbers::pi);
}

std::vector<std::array<double, 4>> koopman_blocks(const std::vector<EigenPair>& pairs, double dt) {
  std::vector<std::array<double, 4>> blocks;
  blocks.reserve(pairs.size());
  for (const auto& p : pairs) {
    const double g = std::exp(p.mu * dt);
    const double c = std::cos(p.omega * dt);
    const double s = std::sin(p.omega * dt);
    blocks.push_back({g * c, -g * s, g * s, g * c});
  }
  return blocks;
}

std::vector<double> advance(const std::vector<double>& y, const std::vector<EigenPair>& pairs,
                            double dt) {
  if (y.size() != 2 * pairs.size())
    throw std::invalid_argument("advance: embedding length must be 2 * |pairs|");
  if (dt <= 0.0) throw std::invalid_argument("advance: dt must be > 0");
  const auto blocks = koopman_blocks(pairs, dt);
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& b = blocks[i];
    const double a = y[2 * i], bb = y[2 * i + 1];
    out[2 * i] = b[0] * a + b[1] * bb;
    out[2 * i + 1] = b[2] * a + b[3] * bb;
  }
  return out;
}

torch::Tensor advance(const torch::Tensor& y, const torch::Tensor& mu,
                      const torch::Tensor& omega, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("advance: dt must be > 0");
  const auto B = y.size(0);
  const auto M = mu.size(-1);
  TORCH_CHECK(y.size(-1) == 2 * M, "advance: embedding length must be 2 * n_pairs");
  auto pairs = y.view({B, M, 2});
  auto a = pairs.select(-1, 0);
  auto b = pairs.select(-1, 1);
  auto growth = torch::exp(mu * dt);
  auto c = torch::cos(omega * dt);
  auto s = torch::sin(omega * dt);
  auto a2 = growth * (c * a - s * b);
  auto b2 = growth * (s * a + c * b);
  return torch::stack({a2, b2}, -1).view({B, 2 * M});
}

std::vector<torch::Tensor> rollout(const torch::Tensor& y1, int m, double dt,
                                   const EigvalFn& eigvals, bool reevaluate) {
  if (m < 1) throw std::invalid_argument("rollout: m must be >= 1");
  std::vector<torch::Tensor> out;
  out.reserve(static_cast<std::size_t>(m));
  torch::Tensor y = y1;
  torch::Tensor mu, omega;
  std::tie(mu, omega) = eigvals(y1);
  for (int k = 0; k < m; ++k) {
    if (reevaluate && k > 0) std::tie(mu, omega) = eigvals(y);
    y = advance(y, mu, omega, dt);
    out.push_back(y);
  }
  return out;
}

torch::Tensor null_modes(const torch::Tensor& y, const std::set<int>& keep, int n_pairs) {
  TORCH_CHECK(y.size(-1) == 2 * n_pairs, "null_modes: embedding length must be 2 * n_pairs");
  for (int i : keep) {
    if (i < 0 || i >= n_pairs) throw std::invalid_argument("null_modes: keep index out of range");
  }
  auto mask = torch::zeros({2 * n_pairs}, y.options());
  for (int i : keep) {
    mask[2 * i] = 1.0;
    mask[2 * i + 1] = 1.0;
  }
  return y * mask;
}

std::vector<double> null_modes(const std::vector<double>& y, const std::set<int>& keep) {
  const int n_pairs = static_cast<int>(y.size() / 2);
  for (int i : keep) {
    if (i < 0 || i >= n_pairs) throw std::invalid_argument("null_modes: keep index out of range");
  }
  std::vector<double> out(y.size(), 0.0);
  for (int i : keep) {
    out[2 * i] = y[2 * i];
    out[2 * i + 1] = y[2 * i + 1];
  }
  return out;
}

}  // namespace ckn
