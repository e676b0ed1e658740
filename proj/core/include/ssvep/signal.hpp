#pragma once

#include <cstddef>
#include <vector>

namespace ssvep {

// Uniformly sampled single-channel signal in microvolts.
struct TimeSeries {
  double fs = 0.0;
  std::vector<double> samples;
};

// Fixed-length slice of a TimeSeries. Value snapshot; windows are safe to
// process in parallel.
struct Window {
  std::size_t start_index = 0;
  double fs = 0.0;
  std::vector<double> samples;
};

}  // namespace ssvep
