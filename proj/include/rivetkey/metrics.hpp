#pragma once

#include <map>
#include <string>
#include <vector>

#include "rivetkey/errors.hpp"
#include "rivetkey/geometry.hpp"

namespace rivetkey::metrics {

// Score report mirroring the evaluation table columns:
// PCK@tau (higher better), MPJPE in pixels (lower better), OKS (higher
// better). All keypoints are pooled across samples (micro-average);
// per-sample macro-averaging is available as an option on evaluate().
struct MetricsReport {
    std::map<double, double> pck_at;  // threshold tau (px) -> score in [0,1]
    double oks = 0.0;
    double mpjpe = 0.0;
    size_t sample_count = 0;
    size_t keypoint_count = 0;
};

// Fraction of keypoints within Euclidean distance tau of ground truth.
// The boundary d == tau counts as correct.
double pck(const std::vector<KeypointSet>& pred, const std::vector<KeypointSet>& gt,
           double tau);

// Mean of exp(-d^2 / (2 s^2 k^2)) over all keypoints, with s the per-sample
// object scale (rivet head radius in pixels) and k a single constant.
double oks(const std::vector<KeypointSet>& pred, const std::vector<KeypointSet>& gt,
           const std::vector<double>& scale_px, double k = 0.1);

// Mean Euclidean distance over all keypoints.
double mpjpe(const std::vector<KeypointSet>& pred, const std::vector<KeypointSet>& gt);

MetricsReport evaluate(const std::vector<KeypointSet>& pred,
                       const std::vector<KeypointSet>& gt,
                       const std::vector<double>& scale_px,
                       const std::vector<double>& taus = {10.0, 50.0},
                       double k = 0.1,
                       bool macro_average = false);

std::string report_to_json(const MetricsReport& report);

}  // namespace rivetkey::metrics
