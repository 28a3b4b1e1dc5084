// Video clip container: an ordered grayscale (or channel-stacked) frame
// sequence with a fixed time step, plus single-file persistence ("CKNV1"
// header + row-major float32 frames) and a JSON sidecar for system metadata.
#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace ckn {

struct VideoClip {
  int n_frames = 0;
  int height = 0;
  int width = 0;
  int channels = 1;
  double dt = 0.01;                 // seconds per frame
  std::vector<float> data;          // [t][row][col][channel], row-major
  std::string meta_json;            // optional generating-spec description

  std::size_t frame_size() const {
    return static_cast<std::size_t>(height) * width * channels;
  }
  std::size_t pixel_count() const { return frame_size() * n_frames; }

  float& at(int t, int r, int c, int ch = 0) {
    return data[((static_cast<std::size_t>(t) * height + r) * width + c) * channels + ch];
  }
  float at(int t, int r, int c, int ch = 0) const {
    return data[((static_cast<std::size_t>(t) * height + r) * width + c) * channels + ch];
  }

  std::span<float> frame(int t) {
    return {data.data() + static_cast<std::size_t>(t) * frame_size(), frame_size()};
  }
  std::span<const float> frame(int t) const {
    return {data.data() + static_cast<std::size_t>(t) * frame_size(), frame_size()};
  }

  // Enforces the container invariants: n_frames >= 2, dt > 0, finite pixels,
  // buffer size consistent with dims. Throws std::invalid_argument.
  void validate() const;
};

VideoClip make_clip(int n_frames, int height, int width, int channels, double dt);

// Single-file container I/O. Layout: magic "CKNV1", u8 dtype tag (0 = f32),
// u32 n_frames/height/width/channels, f64 dt, u32 meta length + bytes,
// then the frame data. Little-endian throughout.
void save_clip(const VideoClip& clip, const std::filesystem::path& path);
VideoClip load_clip(const std::filesystem::path& path);

// Sidecar: structured text (JSON) next to the clip, holding the SystemSpec
// and its ground-truth frequencies.
void write_sidecar(const std::string& json_text, const std::filesystem::path& clip_path);
std::string read_sidecar(const std::filesystem::path& clip_path);
std::filesystem::path sidecar_path(const std::filesystem::path& clip_path);

}  // namespace ckn
