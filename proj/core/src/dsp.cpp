#include "ssvep/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "ssvep/errors.hpp"

namespace ssvep {

namespace {

constexpr double kPi = std::numbers::pi;

// Roots of z^2 + a1 z + a2.
std::pair<std::complex<double>, std::complex<double>> quadratic_roots(double a1, double a2) {
  const std::complex<double> disc = std::sqrt(std::complex<double>(a1 * a1 - 4.0 * a2, 0.0));
  return {(-a1 + disc) / 2.0, (-a1 - disc) / 2.0};
}

}  // namespace

bool BiquadCascade::stable() const {
  for (const auto& s : sections) {
    auto [p1, p2] = quadratic_roots(s.a1, s.a2);
    if (std::abs(p1) >= 1.0 || std::abs(p2) >= 1.0) return false;
  }
  return true;
}

std::complex<double> BiquadCascade::response(double freq_hz, double fs) const {
  const double w = 2.0 * kPi * freq_hz / fs;
  const std::complex<double> z1 = std::polar(1.0, -w);   // z^-1
  const std::complex<double> z2 = z1 * z1;
  std::complex<double> h(1.0, 0.0);
  for (const auto& s : sections) {
    h *= (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
  }
  return h;
}

double BiquadCascade::magnitude(double freq_hz, double fs) const {
  return std::abs(response(freq_hz, fs));
}

BiquadCascade design_bandpass(double low_hz, double high_hz, double fs, int order) {
  if (!(fs > 0.0)) throw ConfigError("design_bandpass: fs must be positive");
  if (!(0.0 < low_hz && low_hz < high_hz && high_hz < fs / 2.0)) {
    throw ConfigError("design_bandpass: need 0 < low < high < fs/2");
  }
  if (order < 2 || order % 2 != 0) {
    throw ConfigError("design_bandpass: band-pass order must be a positive even number");
  }

  // Pre-warped edge frequencies (bilinear transform with T = 2).
  const double wl = std::tan(kPi * low_hz / fs);
  const double wh = std::tan(kPi * high_hz / fs);
  const double bw = wh - wl;        // analog bandwidth
  const double w0sq = wl * wh;      // squared analog center frequency

  const int proto_order = order / 2;

  BiquadCascade cascade;
  cascade.description = "butterworth band-pass " + std::to_string(low_hz) + "-" +
                        std::to_string(high_hz) + " Hz, order " + std::to_string(order);

  // Low-pass prototype poles on the unit circle (left half-plane), mapped
  // through s -> (s^2 + w0^2) / (bw * s); each prototype pole yields two
  // band-pass poles. Bilinear-map everything, then group into conjugate
  // pairs. The band-pass zeros sit at z = +1 and z = -1, one pair per section.
  std::vector<std::complex<double>> z_poles;
  for (int k = 0; k < proto_order; ++k) {
    const double phi = kPi * (2.0 * k + 1.0) / (2.0 * proto_order) + kPi / 2.0;
    const std::complex<double> proto(std::cos(phi), std::sin(phi));
    const std::complex<double> half = bw * proto / 2.0;
    const std::complex<double> root = std::sqrt(half * half - w0sq);
    for (const auto& sp : {half + root, half - root}) {
      z_poles.push_back((1.0 + sp) / (1.0 - sp));
    }
  }

  constexpr double kImagTol = 1e-12;
  std::vector<double> real_poles;
  for (const auto& zp : z_poles) {
    if (zp.imag() > kImagTol) {
      Biquad bq;
      bq.b0 = 1.0;
      bq.b1 = 0.0;
      bq.b2 = -1.0;
      bq.a1 = -2.0 * zp.real();
      bq.a2 = std::norm(zp);
      cascade.sections.push_back(bq);
    } else if (zp.imag() >= -kImagTol) {
      real_poles.push_back(zp.real());
    }
    // Poles with imag < -tol are the conjugates of sections already emitted.
  }
  if (real_poles.size() % 2 != 0) {
    throw NumericError("design_bandpass: unpaired real pole");
  }
  std::sort(real_poles.begin(), real_poles.end());
  for (std::size_t i = 0; i + 1 < real_poles.size(); i += 2) {
    Biquad bq;
    bq.b0 = 1.0;
    bq.b1 = 0.0;
    bq.b2 = -1.0;
    bq.a1 = -(real_poles[i] + real_poles[i + 1]);
    bq.a2 = real_poles[i] * real_poles[i + 1];
    cascade.sections.push_back(bq);
  }

  // Unity gain at the digital frequency that maps to the analog center.
  const double f_center = fs / kPi * std::atan(std::sqrt(w0sq));
  const double g = cascade.magnitude(f_center, fs);
  if (!(g > 0.0) || !std::isfinite(g)) {
    throw NumericError("design_bandpass: degenerate gain normalization");
  }
  const double scale = std::pow(1.0 / g, 1.0 / cascade.sections.size());
  for (auto& s : cascade.sections) {
    s.b0 *= scale;
    s.b1 *= scale;
    s.b2 *= scale;
  }

  if (!cascade.stable()) throw NumericError("design_bandpass: unstable design");
  return cascade;
}

BiquadCascade design_notch(double f0_hz, double q, double fs) {
  if (!(fs > 0.0)) throw ConfigError("design_notch: fs must be positive");
  if (!(0.0 < f0_hz && f0_hz < fs / 2.0)) {
    throw ConfigError("design_notch: need 0 < f0 < fs/2");
  }
  if (!(q > 0.0)) throw ConfigError("design_notch: Q must be positive");

  const double w0 = 2.0 * kPi * f0_hz / fs;
  const double alpha = std::sin(w0) / (2.0 * q);
  const double c = std::cos(w0);
  const double a0 = 1.0 + alpha;

  Biquad bq;
  bq.b0 = 1.0 / a0;
  bq.b1 = -2.0 * c / a0;
  bq.b2 = 1.0 / a0;
  bq.a1 = -2.0 * c / a0;
  bq.a2 = (1.0 - alpha) / a0;

  BiquadCascade cascade;
  cascade.sections.push_back(bq);
  cascade.description = "notch " + std::to_string(f0_hz) + " Hz, Q " + std::to_string(q);
  return cascade;
}

std::vector<double> filter_apply(const BiquadCascade& f, const std::vector<double>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      throw DataError("filter_apply: non-finite input sample at index " + std::to_string(i));
    }
  }
  std::vector<double> y = x;
  for (const auto& s : f.sections) {
    double s1 = 0.0, s2 = 0.0;
    for (double& v : y) {
      const double in = v;
      const double out = s.b0 * in + s1;
      s1 = s.b1 * in - s.a1 * out + s2;
      s2 = s.b2 * in - s.a2 * out;
      v = out;
    }
  }
  return y;
}

TimeSeries filter_apply(const BiquadCascade& f, const TimeSeries& x) {
  return TimeSeries{x.fs, filter_apply(f, x.samples)};
}

Window filter_apply(const BiquadCascade& f, const Window& x) {
  return Window{x.start_index, x.fs, filter_apply(f, x.samples)};
}

namespace {

std::size_t samples_from_seconds(double seconds, double fs, const char* what) {
  const double exact = seconds * fs;
  const double rounded = std::round(exact);
  if (rounded < 1.0 || std::abs(exact - rounded) > 1e-6) {
    throw ConfigError(std::string("sliding_windows: ") + what +
                      " must span a positive whole number of samples");
  }
  return static_cast<std::size_t>(rounded);
}

}  // namespace

std::vector<Window> sliding_windows(const TimeSeries& x, double window_s, double step_s) {
  if (!(x.fs > 0.0) || x.samples.empty()) {
    throw DataError("sliding_windows: empty or invalid signal");
  }
  const std::size_t w = samples_from_seconds(window_s, x.fs, "window");
  const std::size_t step = samples_from_seconds(step_s, x.fs, "step");
  if (w > x.samples.size()) {
    throw DataError("sliding_windows: window longer than signal");
  }

  const std::size_t count = (x.samples.size() - w) / step + 1;
  std::vector<Window> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t start = i * step;
    out.push_back(Window{start, x.fs,
                         {x.samples.begin() + static_cast<std::ptrdiff_t>(start),
                          x.samples.begin() + static_cast<std::ptrdiff_t>(start + w)}});
  }
  return out;
}

double PsdEstimate::peak_in_band(double center_hz, double half_width_hz) const {
  double best = 0.0;
  bool found = false;
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    if (std::abs(freqs[i] - center_hz) <= half_width_hz + 1e-9) {
      best = found ? std::max(best, power[i]) : power[i];
      found = true;
    }
  }
  if (!found) throw ConfigError("peak_in_band: no PSD bins within requested band");
  return best;
}

PsdEstimate welch_psd(const Window& x, double segment_s, double overlap_frac, Taper taper) {
  (void)taper;  // only Hann is defined
  if (!(x.fs > 0.0) || x.samples.empty()) throw DataError("welch_psd: empty window");
  if (!(overlap_frac >= 0.0 && overlap_frac < 1.0)) {
    throw ConfigError("welch_psd: overlap fraction must be in [0, 1)");
  }
  const double exact_len = segment_s * x.fs;
  const std::size_t seg_len = static_cast<std::size_t>(std::round(exact_len));
  if (seg_len < 2 || std::abs(exact_len - seg_len) > 1e-6) {
    throw ConfigError("welch_psd: segment must span a whole number of samples >= 2");
  }
  if (seg_len > x.samples.size()) {
    throw ConfigError("welch_psd: segment longer than window");
  }

  const std::size_t overlap =
      std::min(static_cast<std::size_t>(std::round(overlap_frac * seg_len)), seg_len - 1);
  const std::size_t hop = seg_len - overlap;

  // Periodic Hann taper.
  std::vector<double> w(seg_len);
  double wsq = 0.0;
  for (std::size_t n = 0; n < seg_len; ++n) {
    w[n] = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(n) / seg_len));
    wsq += w[n] * w[n];
  }

  const std::size_t n_bins = seg_len / 2 + 1;
  std::vector<double> acc(n_bins, 0.0);
  std::size_t n_segments = 0;
  std::vector<double> tapered(seg_len);

  for (std::size_t start = 0; start + seg_len <= x.samples.size(); start += hop) {
    for (std::size_t n = 0; n < seg_len; ++n) tapered[n] = w[n] * x.samples[start + n];

    // Direct DFT per bin with a rotating phasor; segment lengths here are a
    // few hundred samples, so O(L^2) is cheap and exact.
    for (std::size_t k = 0; k < n_bins; ++k) {
      const double step = -2.0 * kPi * static_cast<double>(k) / seg_len;
      const std::complex<double> rot = std::polar(1.0, step);
      std::complex<double> phase(1.0, 0.0);
      std::complex<double> sum(0.0, 0.0);
      for (std::size_t n = 0; n < seg_len; ++n) {
        sum += tapered[n] * phase;
        phase *= rot;
      }
      acc[k] += std::norm(sum);
    }
    ++n_segments;
  }

  PsdEstimate psd;
  psd.resolution = x.fs / static_cast<double>(seg_len);
  psd.freqs.resize(n_bins);
  psd.power.resize(n_bins);
  const double norm = 1.0 / (x.fs * wsq * static_cast<double>(n_segments));
  for (std::size_t k = 0; k < n_bins; ++k) {
    psd.freqs[k] = psd.resolution * static_cast<double>(k);
    double p = acc[k] * norm;
    const bool interior = k > 0 && (seg_len % 2 != 0 || k + 1 < n_bins);
    if (interior) p *= 2.0;  // one-sided: double all but DC and Nyquist
    psd.power[k] = p;
  }
  return psd;
}

}  // namespace ssvep
