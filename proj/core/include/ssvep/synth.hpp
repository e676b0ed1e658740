#pragma once

#include <cstdint>
#include <vector>

#include "ssvep/signal.hpp"

namespace ssvep {

// Per-sample luminance contrast trajectory for one stimulus condition.
//   1: constant 255
//   2: linear ramp 75 -> 255
//   3: linear ramp 255 -> 75
//   4: ramp 150 -> 255 over the first half, back down over the second half
struct ContrastSchedule {
  int condition = 1;
  double fs = 250.0;
  double duration_s = 60.0;
  std::vector<double> samples;  // contrast levels in [0, 255]
};

// Affine contrast -> SSVEP amplitude map (uV at the fundamental).
struct GainMap {
  double intercept_uv = 0.5;
  double slope_uv = 4.5;  // added at full contrast (255)

  double operator()(double contrast) const {
    return intercept_uv + slope_uv * contrast / 255.0;
  }
};

struct SynthConfig {
  double target_freq = 7.5;  // stimulus fundamental, Hz
  double rest_freq = 10.0;   // alpha-band resting frequency, Hz
  double fs = 250.0;
  int n_harmonics = 3;
  std::vector<double> harmonic_gains{1.0, 0.4, 0.2};  // relative per-harmonic amplitude
  GainMap gain_map;
  double noise_sigma = 14.0;  // additive white Gaussian noise, uV
  double alpha_amp = 1.0;     // amplitude of the resting-state component, uV
  std::uint64_t rng_seed = 1;
};

ContrastSchedule make_schedule(int condition, double duration_s, double fs);

// Contrast-modulated harmonic stack plus a fixed resting-state sine and white
// noise. Deterministic for a fixed seed.
TimeSeries synthesize_eeg(const ContrastSchedule& schedule, const SynthConfig& cfg);

// Derives the config of one synthetic subject: fresh seed plus mild jitter on
// the gain map and noise level.
SynthConfig subject_config(const SynthConfig& base, int subject);

}  // namespace ssvep
