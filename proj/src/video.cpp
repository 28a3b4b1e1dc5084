#include "ckn/video.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace ckn {

namespace {

constexpr char kMagic[5] = {'C', 'K', 'N', 'V', '1'};
constexpr std::uint8_t kDtypeF32 = 0;

template <typename T>
void write_pod(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("clip file truncated");
  return v;
}

}  // namespace

void VideoClip::validate() const {
  if (n_frames < 2) throw std::invalid_argument("VideoClip: n_frames must be >= 2");
  if (height <= 0 || width <= 0 || channels <= 0)
    throw std::invalid_argument("VideoClip: non-positive dimensions");
  if (dt <= 0.0) throw std::invalid_argument("VideoClip: dt must be > 0");
  if (data.size() != pixel_count())
    throw std::invalid_argument("VideoClip: buffer size does not match dims");
  for (float v : data) {
    if (!std::isfinite(v)) throw std::invalid_argument("VideoClip: non-finite pixel value");
  }
}

VideoClip make_clip(int n_frames, int height, int width, int channels, double dt) {
  if (n_frames < 1 || height <= 0 || width <= 0 || channels <= 0)
    throw std::invalid_argument("make_clip: non-positive dimensions");
  if (dt <= 0.0) throw std::invalid_argument("make_clip: dt must be > 0");
  VideoClip clip;
  clip.n_frames = n_frames;
  clip.height = height;
  clip.width = width;
  clip.channels = channels;
  clip.dt = dt;
  clip.data.assign(clip.pixel_count(), 0.0f);
  return clip;
}

void save_clip(const VideoClip& clip, const std::filesystem::path& path) {
  clip.validate();
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for write: " + path.string());
  os.write(kMagic, sizeof(kMagic));
  write_pod(os, kDtypeF32);
  write_pod(os, static_cast<std::uint32_t>(clip.n_frames));
  write_pod(os, static_cast<std::uint32_t>(clip.height));
  write_pod(os, static_cast<std::uint32_t>(clip.width));
  write_pod(os, static_cast<std::uint32_t>(clip.channels));
  write_pod(os, clip.dt);
  write_pod(os, static_cast<std::uint32_t>(clip.meta_json.size()));
  os.write(clip.meta_json.data(), static_cast<std::streamsize>(clip.meta_json.size()));
  os.write(reinterpret_cast<const char*>(clip.data.data()),
           static_cast<std::streamsize>(clip.data.size() * sizeof(float)));
  if (!os) throw std::runtime_error("write failed: " + path.string());
}

VideoClip load_clip(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open clip: " + path.string());
  char magic[5];
  is.read(magic, sizeof(magic));
  if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("not a CKNV1 clip: " + path.string());
  const auto dtype = read_pod<std::uint8_t>(is);
  if (dtype != kDtypeF32)
    throw std::runtime_error("unsupported clip dtype tag " + std::to_string(dtype));
  VideoClip clip;
  clip.n_frames = static_cast<int>(read_pod<std::uint32_t>(is));
  clip.height = static_cast<int>(read_pod<std::uint32_t>(is));
  clip.width = static_cast<int>(read_pod<std::uint32_t>(is));
  clip.channels = static_cast<int>(read_pod<std::uint32_t>(is));
  clip.dt = read_pod<double>(is);
  const auto meta_len = read_pod<std::uint32_t>(is);
  clip.meta_json.resize(meta_len);
  if (meta_len > 0) is.read(clip.meta_json.data(), meta_len);
  clip.data.resize(static_cast<std::size_t>(clip.n_frames) * clip.height * clip.width *
                   clip.channels);
  is.read(reinterpret_cast<char*>(clip.data.data()),
          static_cast<std::streamsize>(clip.data.size() * sizeof(float)));
  if (!is) throw std::runtime_error("clip file truncated: " + path.string());
  clip.validate();
  return clip;
}

std::filesystem::path sidecar_path(const std::filesystem::path& clip_path) {
  auto p = clip_path;
  p += ".json";
  return p;
}

void write_sidecar(const std::string& json_text, const std::filesystem::path& clip_path) {
  std::ofstream os(sidecar_path(clip_path));
  if (!os) throw std::runtime_error("cannot write sidecar for " + clip_path.string());
  os << json_text;
  if (!json_text.empty() && json_text.back() != '\n') os << '\n';
}

std::string read_sidecar(const std::filesystem::path& clip_path) {
  std::ifstream is(sidecar_path(clip_path));
  if (!is) throw std::runtime_error("missing sidecar for " + clip_path.string());
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

}  // namespace ckn
