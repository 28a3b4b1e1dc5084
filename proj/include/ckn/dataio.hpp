// Dataset preparation: range normalization, per-pixel temporal mean
// subtraction, random-square input masking, and extraction of length-(T+1)
// channel-stacked snippets for training.
#pragma once

#include "ckn/video.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ckn {

struct MaskParams {
  int min_squares = 2;
  int max_squares = 3;
  double min_side_frac = 0.10;  // of min(height, width)
  double max_side_frac = 0.30;
  float fill_value = 0.0f;      // post-mean-subtraction neutral value

  void validate() const;  // throws std::invalid_argument on bad ranges
};

struct MaskRect {
  int row = 0;
  int col = 0;
  int side = 0;
};

// Draws k ~ Uniform{min_squares..max_squares} axis-aligned squares with side
// ~ Uniform[min_side_frac, max_side_frac] * min(h, w), positioned uniformly
// and fully inside the frame. Pure function of the rng state.
std::vector<MaskRect> draw_masks(int height, int width, const MaskParams& params,
                                 std::mt19937_64& rng);

// Sets every channel of the covered pixels to fill. Pixels outside the union
// of rects are untouched.
void apply_mask_rects(std::span<float> frame_stack, int height, int width, int channels,
                      std::span<const MaskRect> rects, float fill);

// One-call surface: draw + apply with a fresh rng seeded from rng_state.
std::vector<float> apply_masks(std::span<const float> frame_stack, int height, int width,
                               int channels, const MaskParams& params, std::uint64_t rng_state);

// Scales the clip so all pixels fit in [-1, 1]; returns the factor applied
// (1.0 when the clip already fits). Runs before mean subtraction so that
// generators stay exactly linear.
float normalize_range(VideoClip& clip);

// Returns the mean-subtracted clip and the per-pixel temporal mean frame
// (height*width*channels values) retained for display-time re-addition.
std::pair<VideoClip, std::vector<float>> subtract_mean(const VideoClip& clip);

// Re-adds a stored mean frame; inverse of subtract_mean up to float rounding.
VideoClip add_mean(const VideoClip& clip, std::span<const float> mean_frame);

struct Snippet {
  int clip_id = 0;
  int start = 0;                      // first frame of input 0
  std::vector<float> inputs;          // (T+1) stacks, each [h][w][stack]
  std::vector<float> masked_input0;   // input 0 with squares applied
};

// Cuts the clip into snippets of T+1 consecutive channel-stacked inputs
// (input j = frames [start+j .. start+j+stack-1] on the channel axis).
// Masking corrupts only input 0; the T prediction targets stay clean.
// Yields floor((n_frames - stack - T)/stride) + 1 snippets.
std::vector<Snippet> make_snippets(const VideoClip& clip, int T, int stack, int stride,
                                   const MaskParams& params, std::uint64_t rng_state);

// Deterministic per-snippet stream: workers can draw masks independently and
// still reproduce the single-threaded result.
std::uint64_t snippet_rng_state(std::uint64_t global_seed, std::uint64_t epoch,
                                std::uint64_t snippet_index);

}  // namespace ckn
