#include "ckn/dataio.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace ckn {

void MaskParams::validate() const {
  if (min_squares < 0 || min_squares > max_squares)
    throw std::invalid_argument("MaskParams: need 0 <= min_squares <= max_squares");
  if (!(min_side_frac > 0.0) || min_side_frac > max_side_frac || max_side_frac > 1.0)
    throw std::invalid_argument("MaskParams: need 0 < min_side_frac <= max_side_frac <= 1");
}

std::vector<MaskRect> draw_masks(int height, int width, const MaskParams& params,
                                 std::mt19937_64& rng) {
  params.validate();
  const int base = std::min(height, width);
  std::uniform_int_distribution<int> count_dist(params.min_squares, params.max_squares);
  std::uniform_real_distribution<double> side_dist(params.min_side_frac, params.max_side_frac);
  const int k = count_dist(rng);
  std::vector<MaskRect> rects;
  rects.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    int side = static_cast<int>(std::lround(side_dist(rng) * base));
    side = std::clamp(side, 1, base);
    std::uniform_int_distribution<int> row_dist(0, height - side);
    std::uniform_int_distribution<int> col_dist(0, width - side);
    const int r = row_dist(rng);
    const int c = col_dist(rng);
    rects.push_back({r, c, side});
  }
  return rects;
}

void apply_mask_rects(std::span<float> frame_stack, int height, int width, int channels,
                      std::span<const MaskRect> rects, float fill) {
  if (frame_stack.size() != static_cast<std::size_t>(height) * width * channels)
    throw std::invalid_argument("apply_mask_rects: buffer size mismatch");
  for (const auto& rect : rects) {
    for (int r = rect.row; r < rect.row + rect.side; ++r) {
      float* row = frame_stack.data() + (static_cast<std::size_t>(r) * width + rect.col) * channels;
      std::fill(row, row + static_cast<std::size_t>(rect.side) * channels, fill);
    }
  }
}

std::vector<float> apply_masks(std::span<const float> frame_stack, int height, int width,
                               int channels, const MaskParams& params, std::uint64_t rng_state) {
  std::vector<float> out(frame_stack.begin(), frame_stack.end());
  std::mt19937_64 rng(rng_state);
  const auto rects = draw_masks(height, width, params, rng);
  apply_mask_rects(out, height, width, channels, rects, params.fill_value);
  return out;
}

float normalize_range(VideoClip& clip) {
  float max_abs = 0.0f;
  for (float v : clip.data) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs <= 1.0f || max_abs == 0.0f) return 1.0f;
  const float scale = 1.0f / max_abs;
  for (float& v : clip.data) v *= scale;
  return scale;
}

std::pair<VideoClip, std::vector<float>> subtract_mean(const VideoClip& clip) {
  if (clip.n_frames < 1) throw std::invalid_argument("subtract_mean: empty clip");
  const std::size_t fs = clip.frame_size();
  std::vector<double> acc(fs, 0.0);
  for (int t = 0; t < clip.n_frames; ++t) {
    const auto frame = clip.frame(t);
    for (std::size_t p = 0; p < fs; ++p) acc[p] += frame[p];
  }
  std::vector<float> mean(fs);
  for (std::size_t p = 0; p < fs; ++p) mean[p] = static_cast<float>(acc[p] / clip.n_frames);
  VideoClip out = clip;
  for (int t = 0; t < out.n_frames; ++t) {
    auto frame = out.frame(t);
    for (std::size_t p = 0; p < fs; ++p) frame[p] -= mean[p];
  }
  return {std::move(out), std::move(mean)};
}

VideoClip add_mean(const VideoClip& clip, std::span<const float> mean_frame) {
  if (mean_frame.size() != clip.frame_size())
    throw std::invalid_argument("add_mean: mean frame size mismatch");
  VideoClip out = clip;
  for (int t = 0; t < out.n_frames; ++t) {
    auto frame = out.frame(t);
    for (std::size_t p = 0; p < frame.size(); ++p) frame[p] += mean_frame[p];
  }
  return out;
}

std::vector<Snippet> make_snippets(const VideoClip& clip, int T, int stack, int stride,
                                   const MaskParams& params, std::uint64_t rng_state) {
  if (T < 1) throw std::invalid_argument("make_snippets: T must be >= 1");
  if (stack < 1) throw std::invalid_argument("make_snippets: stack must be >= 1");
  if (stride < 1) throw std::invalid_argument("make_snippets: stride must be >= 1");
  if (clip.n_frames < stack + T)
    throw std::invalid_argument("make_snippets: clip shorter than stack + T");
  const int h = clip.height, w = clip.width;
  const std::size_t stack_size = static_cast<std::size_t>(h) * w * stack;
  std::vector<Snippet> out;
  std::uint64_t index = 0;
  for (int start = 0; start + stack + T - 1 < clip.n_frames; start += stride, ++index) {
    Snippet s;
    s.start = start;
    s.inputs.resize(stack_size * (T + 1));
    for (int j = 0; j <= T; ++j) {
      float* dst = s.inputs.data() + static_cast<std::size_t>(j) * stack_size;
      for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
          for (int k = 0; k < stack; ++k) {
            dst[(static_cast<std::size_t>(r) * w + c) * stack + k] = clip.at(start + j + k, r, c);
          }
        }
      }
    }
    std::mt19937_64 rng(snippet_rng_state(rng_state, 0, index));
    const auto rects = draw_masks(h, w, params, rng);
    s.masked_input0.assign(s.inputs.begin(), s.inputs.begin() + static_cast<std::ptrdiff_t>(stack_size));
    apply_mask_rects(s.masked_input0, h, w, stack, rects, params.fill_value);
    out.push_back(std::move(s));
  }
  return out;
}

std::uint64_t snippet_rng_state(std::uint64_t global_seed, std::uint64_t epoch,
                                std::uint64_t snippet_index) {
  // splitmix64 over a combined key; decorrelates neighboring snippets
  std::uint64_t z = global_seed + 0x9e3779b97f4a7c15ULL * (epoch + 1) + snippet_index;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace ckn
