#ifndef CUTPROJECT_EMIT_HPP
#define CUTPROJECT_EMIT_HPP

#include <string>
#include <vector>

#include "cutproject/harmonic.hpp"
#include "cutproject/pointset.hpp"

namespace cutproject {

// Emitters produce byte-stable output: '.' decimal separator, '\n' line
// terminators, shortest round-trip number formatting, rows in the canonical
// (sorted) order of the underlying containers.

/// CSV columns: z..., x..., y_eucl..., y_cyc, re_weight, im_weight.
std::string points_to_csv(const WeightedPointSet& ps);

/// CSV columns: location..., re_amplitude, im_amplitude.
std::string measure_to_csv(const PurePointMeasure& m);

/// CSV columns: chi..., re_amplitude, im_amplitude, intensity.
std::string peaks_to_csv(const std::vector<BraggPeak>& peaks, int physical_dim);

/// Stem plot of a one-dimensional dual comb: one vertical line per peak,
/// height proportional to the amplitude (intensity), labelled axes.
std::string comb_to_svg(const PurePointMeasure& comb, const std::string& title = "");

/// Writes content to path; throws IoError on failure.
void write_file(const std::string& path, const std::string& content);

} // namespace cutproject

#endif
