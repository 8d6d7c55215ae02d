#include "rivetkey/measure.hpp"

#include <cmath>
#include <string>

namespace rivetkey::measure {

void require_six(const KeypointSet& kps) {
    if (kps.size() != 6)
        throw LengthMismatch("expected 6 keypoints, got " + std::to_string(kps.size()));
}

void require_positive_pitch(double pitch) {
    if (!(pitch > 0.0)) throw NonpositiveScale("pixel pitch must be > 0");
}

double head_height(const KeypointSet& kps, double pitch) {
    require_six(kps);
    require_positive_pitch(pitch);
    return (kps[1].y - kps[0].y) * pitch;
}

double interlock(const KeypointSet& kps, double pitch) {
    require_six(kps);
    require_positive_pitch(pitch);
    return std::abs(kps[3].x - kps[2].x) * pitch;
}

double bottom_thickness(const KeypointSet& kps, double pitch) {
    require_six(kps);
    require_positive_pitch(pitch);
    if (kps[5].y < kps[4].y)
        throw InvertedPair("K6 lies above K5; bottom pair is implausible");
    return (kps[5].y - kps[4].y) * pitch;
}

MeasurementReport measure_all(const KeypointSet& kps, double pitch) {
    return {head_height(kps, pitch), interlock(kps, pitch), bottom_thickness(kps, pitch)};
}

}  // namespace rivetkey::measure
