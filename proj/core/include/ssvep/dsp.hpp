#pragma once

#include <complex>
#include <string>
#include <vector>

#include "ssvep/signal.hpp"

namespace ssvep {

// One normalized second-order IIR section (a0 = 1).
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
};

struct BiquadCascade {
  std::vector<Biquad> sections;
  std::string description;

  // True when every section's poles are strictly inside the unit circle.
  bool stable() const;

  // Frequency response H(e^{j 2 pi f / fs}).
  std::complex<double> response(double freq_hz, double fs) const;
  double magnitude(double freq_hz, double fs) const;
};

// Digital Butterworth band-pass: analog prototype, low-pass to band-pass
// transform, bilinear transform with edge pre-warping. `order` is the order
// of the resulting band-pass and must be even; order 2 yields one biquad.
// Magnitude at the band edges is 1/sqrt(2) of the mid-band peak.
BiquadCascade design_bandpass(double low_hz, double high_hz, double fs, int order);

// Second-order IIR notch with zeros exactly on the unit circle at f0.
BiquadCascade design_notch(double f0_hz, double q, double fs);

// Causal single-pass direct-form-II-transposed filtering, zero initial state.
std::vector<double> filter_apply(const BiquadCascade& f, const std::vector<double>& x);
TimeSeries filter_apply(const BiquadCascade& f, const TimeSeries& x);
Window filter_apply(const BiquadCascade& f, const Window& x);

// Contiguous windows of window_s seconds every step_s seconds.
// Count = floor((len - window) / step) + 1.
std::vector<Window> sliding_windows(const TimeSeries& x, double window_s, double step_s);

struct PsdEstimate {
  std::vector<double> freqs;   // Hz, strictly increasing, one-sided
  std::vector<double> power;   // uV^2/Hz
  double resolution = 0.0;     // fs / segment_length

  // Max power over bins with |freq - center| <= half_width.
  double peak_in_band(double center_hz, double half_width_hz) const;
};

enum class Taper { kHann };

// Averaged one-sided periodogram. Normalized so that integrating the PSD over
// the spectral peak of an on-bin sine of amplitude A recovers A^2/2.
PsdEstimate welch_psd(const Window& x, double segment_s, double overlap_frac,
                      Taper taper = Taper::kHann);

}  // namespace ssvep
