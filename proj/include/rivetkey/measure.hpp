#pragma once

#include "rivetkey/errors.hpp"
#include "rivetkey/geometry.hpp"

namespace rivetkey::measure {

// The three joint-quality measurements, derived from the six keypoints.
// Keypoint order: K1 rivet-head top, K2 adjacent sheet surface, K3 rivet
// flare extremum, K4 pierced top-sheet edge, K5 lowest interior rivet
// point, K6 bottom surface below K5.
struct MeasurementReport {
    double head_height_mm = 0.0;      // signed; positive = head proud
    double interlock_mm = 0.0;        // lateral (x) engagement
    double bottom_thickness_mm = 0.0; // remaining material under the rivet
};

void require_six(const KeypointSet& kps);
void require_positive_pitch(double pitch_mm_per_px);

// d_h = (y2 - y1) * pitch. y grows downward, so a head sitting above the
// sheet surface comes out positive.
double head_height(const KeypointSet& kps, double pitch_mm_per_px);

// d_i = |x4 - x3| * pitch.
double interlock(const KeypointSet& kps, double pitch_mm_per_px);

// d_b = (y6 - y5) * pitch. Throws InvertedPair when y6 < y5.
double bottom_thickness(const KeypointSet& kps, double pitch_mm_per_px);

MeasurementReport measure_all(const KeypointSet& kps, double pitch_mm_per_px);

}  // namespace rivetkey::measure
