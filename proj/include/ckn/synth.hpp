// Synthetic system generators: closed-form wave superpositions, wrapping
// particles, a vibrating string observed as an image, and an RK4-integrated
// nonlinear pendulum. Every generator is a pure function of (spec, dims, dt)
// and carries its ground-truth frequencies for later comparison.
#pragma once

#include "ckn/video.hpp"

#include <vector>

namespace ckn {

struct WaveSource {
  double center_row = 0.0;   // pixels
  double center_col = 0.0;   // pixels
  double frequency = 1.0;    // Hz
  double wavelength = 8.0;   // pixels
  double decay_rate = 0.0;   // 1/pixel
  double amplitude = 1.0;
};

struct WaveSystemSpec {
  std::vector<WaveSource> sources;
};

struct Particle {
  double column = 0.0;       // pixels
  double phase = 0.0;        // fraction of period in [0,1)
  double velocity = 1.0;     // pixels/frame, downward
  double radius = 3.0;       // pixels
  double intensity = 1.0;
};

struct ParticleSystemSpec {
  std::vector<Particle> particles;
};

struct StringComponent {
  double frequency = 1.0;          // Hz
  double spatial_wavenumber = 0.1; // rad/pixel
  double amplitude = 4.0;          // pixels of displacement
  double phase = 0.0;              // rad
};

struct StringSystemSpec {
  std::vector<StringComponent> components;
  double line_thickness = 1.5;     // pixels
};

struct PendulumSpec {
  double natural_frequency_sq = 9.0;  // g/L, 1/s^2
  double initial_angle = 1.0;         // rad, measured from straight down
  double initial_velocity = 0.0;      // rad/s
  double rod_length = 150.0;          // pixels
  double bob_radius = 9.0;            // pixels
};

// frame[t][r][c] = sum over sources of A * exp(-beta*d) * sin(2*pi*(d/lambda - f*t*dt))
// with d the distance to the source center. The superposition is an exact sum,
// so gen_waves(A union B) == gen_waves(A) + gen_waves(B) pixel for pixel.
VideoClip gen_waves(const WaveSystemSpec& spec, int n_frames, int height, int width, double dt);

// Gaussian bumps (sigma = radius/2) moving down their column at constant
// velocity, wrapping modulo the frame height. Temporal fundamental of each
// particle is velocity/(height*dt) Hz.
VideoClip gen_particles(const ParticleSystemSpec& spec, int n_frames, int height, int width, double dt);

// Standing-wave string: displacement y(c,t) = sum_i A_i*sin(k_i*c+phi_i)*cos(2*pi*f_i*t*dt),
// rendered as an anti-aliased bright line at row height/2 - y. Observing the
// waveform as an image instead of as amplitudes makes the observable nonlinear.
VideoClip gen_string(const StringSystemSpec& spec, int n_frames, int height, int width, double dt);

// Nonlinear pendulum theta'' = -(g/L) sin(theta), integrated with fixed-step
// RK4 (sub-stepped below dt), rendered as rod + bob from a pivot at the
// top-center of the frame.
VideoClip gen_pendulum(const PendulumSpec& spec, int n_frames, int height, int width, double dt);

struct PendulumState {
  double theta = 0.0;
  double omega = 0.0;
};

// The integrator behind gen_pendulum, exposed so the dynamics can be checked
// directly (period, energy conservation). Returns n_frames states sampled at dt.
std::vector<PendulumState> simulate_pendulum(const PendulumSpec& spec, int n_frames, double dt,
                                             int substeps = 8);

// Energy per unit mass*L^2: 0.5*omega^2 + (g/L)*(1 - cos theta).
double pendulum_energy(const PendulumSpec& spec, const PendulumState& s);

std::vector<double> true_frequencies(const WaveSystemSpec& spec);
std::vector<double> true_frequencies(const ParticleSystemSpec& spec, int height, double dt);
std::vector<double> true_frequencies(const StringSystemSpec& spec);

// JSON (de)serialization used by the clip sidecars and run configs.
std::string to_json(const WaveSystemSpec& spec);
std::string to_json(const ParticleSystemSpec& spec);
std::string to_json(const StringSystemSpec& spec);
std::string to_json(const PendulumSpec& spec);
WaveSystemSpec wave_spec_from_json(const std::string& text);
ParticleSystemSpec particle_spec_from_json(const std::string& text);
StringSystemSpec string_spec_from_json(const std::string& text);
PendulumSpec pendulum_spec_from_json(const std::string& text);

}  // namespace ckn
