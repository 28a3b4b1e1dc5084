#include "ckn/synth.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ckn {

using json = nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_dims(int n_frames, int height, int width, double dt) {
  if (n_frames < 2) throw std::invalid_argument("generator: n_frames must be >= 2");
  if (height <= 0 || width <= 0) throw std::invalid_argument("generator: non-positive dims");
  if (dt <= 0.0) throw std::invalid_argument("generator: dt must be > 0");
}

}  // namespace

VideoClip gen_waves(const WaveSystemSpec& spec, int n_frames, int height, int width, double dt) {
  check_dims(n_frames, height, width, dt);
  for (const auto& s : spec.sources) {
    if (s.frequency <= 0.0) throw std::invalid_argument("wave source: frequency must be > 0");
    if (s.wavelength <= 0.0) throw std::invalid_argument("wave source: wavelength must be > 0");
    if (s.decay_rate < 0.0) throw std::invalid_argument("wave source: decay_rate must be >= 0");
    if (s.center_row < 0.0 || s.center_row >= height || s.center_col < 0.0 ||
        s.center_col >= width)
      throw std::invalid_argument("wave source: center outside the frame");
  }
  VideoClip clip = make_clip(n_frames, height, width, 1, dt);
  clip.meta_json = to_json(spec);
  // Per-source distance/envelope fields are t-independent; hoist them.
  std::vector<std::vector<float>> dist(spec.sources.size());
  std::vector<std::vector<float>> env(spec.sources.size());
  for (std::size_t i = 0; i < spec.sources.size(); ++i) {
    const auto& s = spec.sources[i];
    dist[i].resize(static_cast<std::size_t>(height) * width);
    env[i].resize(dist[i].size());
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        const double d = std::hypot(r - s.center_row, c - s.center_col);
        dist[i][static_cast<std::size_t>(r) * width + c] = static_cast<float>(d);
        env[i][static_cast<std::size_t>(r) * width + c] =
            static_cast<float>(s.amplitude * std::exp(-s.decay_rate * d));
      }
    }
  }
  for (int t = 0; t < n_frames; ++t) {
    auto frame = clip.frame(t);
    for (std::size_t i = 0; i < spec.sources.size(); ++i) {
      const auto& s = spec.sources[i];
      const double phase_t = s.frequency * t * dt;
      for (std::size_t p = 0; p < frame.size(); ++p) {
        frame[p] += env[i][p] *
                    static_cast<float>(std::sin(kTwoPi * (dist[i][p] / s.wavelength - phase_t)));
      }
    }
  }
  return clip;
}

VideoClip gen_particles(const ParticleSystemSpec& spec, int n_frames, int height, int width,
                        double dt) {
  check_dims(n_frames, height, width, dt);
  for (const auto& p : spec.particles) {
    if (p.velocity <= 0.0) throw std::invalid_argument("particle: velocity must be > 0");
    if (p.radius < 1.0) throw std::invalid_argument("particle: radius must be >= 1");
  }
  VideoClip clip = make_clip(n_frames, height, width, 1, dt);
  clip.meta_json = to_json(spec);
  for (const auto& p : spec.particles) {
    const double sigma = p.radius / 2.0;
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    // Column falloff never changes; row center wraps modulo height.
    std::vector<double> col_prof(width);
    for (int c = 0; c < width; ++c) {
      const double dc = c - p.column;
      col_prof[c] = std::exp(-dc * dc * inv2s2);
    }
    for (int t = 0; t < n_frames; ++t) {
      const double center = std::fmod(p.phase * height + t * p.velocity, double(height));
      auto frame = clip.frame(t);
      for (int r = 0; r < height; ++r) {
        double dr = std::abs(r - center);
        dr = std::min(dr, height - dr);  // seamless wrap
        const double row_int = p.intensity * std::exp(-dr * dr * inv2s2);
        if (row_int < 1e-12) continue;
        for (int c = 0; c < width; ++c) {
          frame[static_cast<std::size_t>(r) * width + c] +=
              static_cast<float>(row_int * col_prof[c]);
        }
      }
    }
  }
  return clip;
}

VideoClip gen_string(const StringSystemSpec& spec, int n_frames, int height, int width,
                     double dt) {
  check_dims(n_frames, height, width, dt);
  double amp_sum = 0.0;
  for (const auto& c : spec.components) amp_sum += std::abs(c.amplitude);
  if (amp_sum >= height / 2.0)
    throw std::invalid_argument("string: |sum of amplitudes| must be < height/2");
  if (spec.line_thickness <= 0.0)
    throw std::invalid_argument("string: line_thickness must be > 0");
  VideoClip clip = make_clip(n_frames, height, width, 1, dt);
  clip.meta_json = to_json(spec);
  const double th = spec.line_thickness;
  for (int t = 0; t < n_frames; ++t) {
    auto frame = clip.frame(t);
    for (int c = 0; c < width; ++c) {
      double y = 0.0;
      for (const auto& comp : spec.components) {
        y += comp.amplitude * std::sin(comp.spatial_wavenumber * c + comp.phase) *
             std::cos(kTwoPi * comp.frequency * t * dt);
      }
      const double center = height / 2.0 - y;
      for (int r = 0; r < height; ++r) {
        const double d = std::abs(r - center);
        const double v = std::clamp(th - d, 0.0, 1.0);  // anti-aliased edge
        if (v > 0.0) frame[static_cast<std::size_t>(r) * width + c] = static_cast<float>(v);
      }
    }
  }
  return clip;
}

std::vector<PendulumState> simulate_pendulum(const PendulumSpec& spec, int n_frames, double dt,
                                             int substeps) {
  if (spec.natural_frequency_sq <= 0.0)
    throw std::invalid_argument("pendulum: natural_frequency_sq must be > 0");
  if (std::abs(spec.initial_angle) >= std::numbers::pi)
    throw std::invalid_argument("pendulum: |initial_angle| must be < pi");
  const double linear_period = kTwoPi / std::sqrt(spec.natural_frequency_sq);
  if (dt >= 0.5 * linear_period)
    throw std::invalid_argument("pendulum: dt must be below half the linearized period");
  if (substeps < 1) throw std::invalid_argument("pendulum: substeps must be >= 1");

  const double w2 = spec.natural_frequency_sq;
  const double h = dt / substeps;
  auto accel = [w2](double theta) { return -w2 * std::sin(theta); };

  std::vector<PendulumState> out;
  out.reserve(n_frames);
  PendulumState s{spec.initial_angle, spec.initial_velocity};
  for (int t = 0; t < n_frames; ++t) {
    out.push_back(s);
    for (int k = 0; k < substeps; ++k) {
      // classic RK4 on (theta, omega)
      const double k1t = s.omega, k1w = accel(s.theta);
      const double k2t = s.omega + 0.5 * h * k1w, k2w = accel(s.theta + 0.5 * h * k1t);
      const double k3t = s.omega + 0.5 * h * k2w, k3w = accel(s.theta + 0.5 * h * k2t);
      const double k4t = s.omega + h * k3w, k4w = accel(s.theta + h * k3t);
      s.theta += h / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
      s.omega += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    }
  }
  return out;
}

double pendulum_energy(const PendulumSpec& spec, const PendulumState& s) {
  return 0.5 * s.omega * s.omega + spec.natural_frequency_sq * (1.0 - std::cos(s.theta));
}

VideoClip gen_pendulum(const PendulumSpec& spec, int n_frames, int height, int width, double dt) {
  check_dims(n_frames, height, width, dt);
  if (spec.rod_length <= 0.0 || spec.bob_radius <= 0.0)
    throw std::invalid_argument("pendulum: rod_length and bob_radius must be > 0");
  const auto states = simulate_pendulum(spec, n_frames, dt);
  VideoClip clip = make_clip(n_frames, height, width, 1, dt);
  clip.meta_json = to_json(spec);
  const double pr = 2.0, pc = width / 2.0;  // pivot at top-center
  const double L = spec.rod_length;
  for (int t = 0; t < n_frames; ++t) {
    const double th = states[t].theta;
    const double br = pr + L * std::cos(th);
    const double bc = pc + L * std::sin(th);
    auto frame = clip.frame(t);
    for (int r = 0; r < height; ++r) {
      for (int c = 0; c < width; ++c) {
        // bob disk, anti-aliased edge
        const double db = std::hypot(r - br, c - bc);
        double v = std::clamp(spec.bob_radius - db, 0.0, 1.0);
        // rod as distance to the pivot-bob segment
        const double px = c - pc, py = r - pr;
        const double ex = bc - pc, ey = br - pr;
        const double tt = std::clamp((px * ex + py * ey) / (L * L), 0.0, 1.0);
        const double dseg = std::hypot(px - tt * ex, py - tt * ey);
        v = std::max(v, 0.7 * std::clamp(1.5 - dseg, 0.0, 1.0));
        if (v > 0.0) frame[static_cast<std::size_t>(r) * width + c] = static_cast<float>(v);
      }
    }
  }
  return clip;
}

std::vector<double> true_frequencies(const WaveSystemSpec& spec) {
  std::vector<double> out;
  for (const auto& s : spec.sources) out.push_back(s.frequency);
  return out;
}

std::vector<double> true_frequencies(const ParticleSystemSpec& spec, int height, double dt) {
  std::vector<double> out;
  for (const auto& p : spec.particles) out.push_back(p.velocity / (height * dt));
  return out;
}

std::vector<double> true_frequencies(const StringSystemSpec& spec) {
  std::vector<double> out;
  for (const auto& c : spec.components) out.push_back(c.frequency);
  return out;
}

std::string to_json(const WaveSystemSpec& spec) {
  json j;
  j["system"] = "waves";
  auto& arr = j["sources"] = json::array();
  for (const auto& s : spec.sources) {
    arr.push_back({{"center_row", s.center_row},
                   {"center_col", s.center_col},
                   {"frequency", s.frequency},
                   {"wavelength", s.wavelength},
                   {"decay_rate", s.decay_rate},
                   {"amplitude", s.amplitude}});
  }
  j["true_frequencies"] = true_frequencies(spec);
  return j.dump(2);
}

std::string to_json(const ParticleSystemSpec& spec) {
  json j;
  j["system"] = "particles";
  auto& arr = j["particles"] = json::array();
  for (const auto& p : spec.particles) {
    arr.push_back({{"column", p.column},
                   {"phase", p.phase},
                   {"velocity", p.velocity},
                   {"radius", p.radius},
                   {"intensity", p.intensity}});
  }
  return j.dump(2);
}

std::string to_json(const StringSystemSpec& spec) {
  json j;
  j["system"] = "string";
  j["line_thickness"] = spec.line_thickness;
  auto& arr = j["components"] = json::array();
  for (const auto& c : spec.components) {
    arr.push_back({{"frequency", c.frequency},
                   {"spatial_wavenumber", c.spatial_wavenumber},
                   {"amplitude", c.amplitude},
                   {"phase", c.phase}});
  }
  j["true_frequencies"] = true_frequencies(spec);
  return j.dump(2);
}

std::string to_json(const PendulumSpec& spec) {
  json j;
  j["system"] = "pendulum";
  j["natural_frequency_sq"] = spec.natural_frequency_sq;
  j["initial_angle"] = spec.initial_angle;
  j["initial_velocity"] = spec.initial_velocity;
  j["rod_length"] = spec.rod_length;
  j["bob_radius"] = spec.bob_radius;
  return j.dump(2);
}

WaveSystemSpec wave_spec_from_json(const std::string& text) {
  const json j = json::parse(text);
  WaveSystemSpec spec;
  for (const auto& s : j.at("sources")) {
    spec.sources.push_back({s.at("center_row"), s.at("center_col"), s.at("frequency"),
                            s.at("wavelength"), s.at("decay_rate"), s.at("amplitude")});
  }
  return spec;
}

ParticleSystemSpec particle_spec_from_json(const std::string& text) {
  const json j = json::parse(text);
  ParticleSystemSpec spec;
  for (const auto& p : j.at("particles")) {
    spec.particles.push_back(
        {p.at("column"), p.at("phase"), p.at("velocity"), p.at("radius"), p.at("intensity")});
  }
  return spec;
}

StringSystemSpec string_spec_from_json(const std::string& text) {
  const json j = json::parse(text);
  StringSystemSpec spec;
  spec.line_thickness = j.at("line_thickness");
  for (const auto& c : j.at("components")) {
    spec.components.push_back(
        {c.at("frequency"), c.at("spatial_wavenumber"), c.at("amplitude"), c.at("phase")});
  }
  return spec;
}

PendulumSpec pendulum_spec_from_json(const std::string& text) {
  const json j = json::parse(text);
  return {j.at("natural_frequency_sq"), j.at("initial_angle"), j.at("initial_velocity"),
          j.at("rod_length"), j.at("bob_radius")};
}

}  // namespace ckn
