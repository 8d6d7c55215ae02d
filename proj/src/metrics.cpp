#include "rivetkey/metrics.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace rivetkey::metrics {

namespace {

void check_aligned(const std::vector<KeypointSet>& pred, const std::vector<KeypointSet>& gt) {
    if (pred.size() != gt.size())
        throw LengthMismatch("prediction/ground-truth sample counts differ: " +
                             std::to_string(pred.size()) + " vs " + std::to_string(gt.size()));
    for (size_t s = 0; s < pred.size(); ++s) {
        if (pred[s].size() != gt[s].size())
            throw LengthMismatch("keypoint counts differ in sample " + std::to_string(s));
    }
}

}  // namespace

double pck(const std::vector<KeypointSet>& pred, const std::vector<KeypointSet>& gt,
           double tau) {
    check_aligned(pred, gt);
    if (!(tau > 0.0)) throw ConfigError("pck threshold must be > 0");
    size_t total = 0, correct = 0;
    for (size_t s = 0; s < pred.size(); ++s) {
        for (size_t k = 0; k < pred[s].size(); ++k) {
            ++total;
            if (distance(pred[s][k], gt[s][k]) <= tau) ++correct;
        }
    }
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

double oks(const std::vector<KeypointSet>& pred, const std::vector<KeypointSet>& gt,
           const std::vector<double>& scale_px, double k) {
    check_aligned(pred, gt);
    if (scale_px.size() != pred.size())
        throw LengthMismatch("need one scale per sample");
    if (!(k > 0.0)) throw ConfigError("oks constant k must be > 0");
    double sum = 0.0;
    size_t total = 0;
    for (size_t s = 0; s < pred.size(); ++s) {
        double sc = scale_px[s];
        if (!(sc > 0.0)) throw NonpositiveScale("sample " + std::to_string(s));
        double denom = 2.0 * sc * sc * k * k;
        for (size_t j = 0; j < pred[s].size(); ++j) {
            double d = distance(pred[s][j], gt[s][j]);
            sum += std::exp(-d * d / denom);
            ++total;
        }
    }
    return total == 0 ? 0.0 : sum / static_cast<double>(total);
}

double mpjpe(const std::vector<KeypointSet>& pred, const std::vector<KeypointSet>& gt) {
    check_aligned(pred, gt);
    double sum = 0.0;
    size_t total = 0;
    for (size_t s = 0; s < pred.size(); ++s) {
        for (size_t j = 0; j < pred[s].size(); ++j) {
            sum += distance(pred[s][j], gt[s][j]);
            ++total;
        }
    }
    return total == 0 ? 0.0 : sum / static_cast<double>(total);
}

MetricsReport evaluate(const std::vector<KeypointSet>& pred,
                       const std::vector<KeypointSet>& gt,
                       const std::vector<double>& scale_px,
                       const std::vector<double>& taus, double k, bool macro_average) {
    check_aligned(pred, gt);
    MetricsReport report;
    report.sample_count = pred.size();
    report.keypoint_count = pred.empty() ? 0 : pred[0].size();

    if (!macro_average) {
        for (double tau : taus) report.pck_at[tau] = pck(pred, gt, tau);
        report.oks = oks(pred, gt, scale_px, k);
        report.mpjpe = mpjpe(pred, gt);
        return report;
    }

    // Macro: score each sample alone, then average the per-sample scores.
    for (double tau : taus) report.pck_at[tau] = 0.0;
    for (size_t s = 0; s < pred.size(); ++s) {
        std::vector<KeypointSet> p1{pred[s]}, g1{gt[s]};
        std::vector<double> s1{scale_px[s]};
        for (double tau : taus) report.pck_at[tau] += pck(p1, g1, tau);
        report.oks += oks(p1, g1, s1, k);
        report.mpjpe += mpjpe(p1, g1);
    }
    double n = static_cast<double>(pred.size());
    if (n > 0) {
        for (auto& [tau, v] : report.pck_at) v /= n;
        report.oks /= n;
        report.mpjpe /= n;
    }
    return report;
}

std::string report_to_json(const MetricsReport& report) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json pck_obj;
    for (const auto& [tau, score] : report.pck_at) {
        std::ostringstream key;
        key << tau;
        pck_obj[key.str()] = score;
    }
    j["pck"] = pck_obj;
    j["mpjpe"] = report.mpjpe;
    j["oks"] = report.oks;
    j["samples"] = report.sample_count;
    j["keypoints"] = report.keypoint_count;
    return j.dump();
}

}  // namespace rivetkey::metrics
