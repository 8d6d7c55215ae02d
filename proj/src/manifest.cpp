#include "rivetkey/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_set>

#include "json.hpp"
#include "rivetkey/rng.hpp"

namespace rivetkey::dataio {

using nlohmann::ordered_json;

std::string to_string(Domain d) { return d == Domain::clean ? "clean" : "noisy"; }

Domain domain_from_string(const std::string& s) {
    if (s == "clean") return Domain::clean;
    if (s == "noisy") return Domain::noisy;
    throw SchemaError("unknown domain '" + s + "'");
}

void validate(const Manifest& manifest) {
    if (manifest.version != 1)
        throw SchemaError("unsupported manifest version " + std::to_string(manifest.version));
    std::unordered_set<std::string> ids;
    for (const auto& s : manifest.samples) {
        if (!ids.insert(s.id).second) throw SchemaError("duplicate sample id '" + s.id + "'");
        if (s.keypoints.size() != 6)
            throw SchemaError("sample '" + s.id + "' has " +
                              std::to_string(s.keypoints.size()) + " keypoints, expected 6");
        if (!(s.pixel_pitch_mm > 0.0))
            throw SchemaError("sample '" + s.id + "' has nonpositive pixel pitch");
        if (!(s.head_radius_px > 0.0))
            throw SchemaError("sample '" + s.id + "' has nonpositive head radius");
        if (s.image_path.empty()) throw SchemaError("sample '" + s.id + "' has no image path");
        if (s.config_id.empty()) throw SchemaError("sample '" + s.id + "' has no config id");
    }
}

namespace {

void reject_unknown_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key()))
            throw SchemaError("unknown field '" + it.key() + "' in " + where);
    }
}

Sample sample_from_json(const ordered_json& j) {
    reject_unknown_keys(j, {"id", "image", "config_id", "domain", "keypoints",
                            "pixel_pitch_mm", "head_radius_px"}, "sample");
    Sample s;
    try {
        s.id = j.at("id").get<std::string>();
        s.image_path = j.at("image").get<std::string>();
        s.config_id = j.at("config_id").get<std::string>();
        s.domain = domain_from_string(j.at("domain").get<std::string>());
        for (const auto& kp : j.at("keypoints")) {
            if (!kp.is_array() || kp.size() != 2)
                throw SchemaError("keypoint must be an [x, y] pair");
            s.keypoints.push_back({kp[0].get<double>(), kp[1].get<double>()});
        }
        s.pixel_pitch_mm = j.at("pixel_pitch_mm").get<double>();
        s.head_radius_px = j.at("head_radius_px").get<double>();
    } catch (const ordered_json::exception& e) {
        throw SchemaError(std::string("malformed sample record: ") + e.what());
    }
    return s;
}

ordered_json sample_to_json(const Sample& s) {
    ordered_json j;
    j["id"] = s.id;
    j["image"] = s.image_path;
    j["config_id"] = s.config_id;
    j["domain"] = to_string(s.domain);
    ordered_json kps = ordered_json::array();
    for (const auto& kp : s.keypoints) kps.push_back({kp.x, kp.y});
    j["keypoints"] = kps;
    j["pixel_pitch_mm"] = s.pixel_pitch_mm;
    j["head_radius_px"] = s.head_radius_px;
    return j;
}

}  // namespace

Manifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest: " + path.string());
    ordered_json j;
    try {
        in >> j;
    } catch (const ordered_json::exception& e) {
        throw SchemaError("invalid JSON in " + path.string() + ": " + e.what());
    }
    reject_unknown_keys(j, {"version", "samples"}, "manifest");
    Manifest m;
    try {
        m.version = j.at("version").get<int>();
        for (const auto& sj : j.at("samples")) m.samples.push_back(sample_from_json(sj));
    } catch (const ordered_json::exception& e) {
        throw SchemaError(std::string("malformed manifest: ") + e.what());
    }
    validate(m);
    return m;
}

void write_manifest(const Manifest& manifest, const std::filesystem::path& path) {
    validate(manifest);
    ordered_json j;
    j["version"] = manifest.version;
    ordered_json arr = ordered_json::array();
    for (const auto& s : manifest.samples) arr.push_back(sample_to_json(s));
    j["samples"] = arr;

    auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw IoError("cannot write manifest: " + path.string());
        out << j.dump(2) << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("rename failed for " + path.string() + ": " + ec.message());
}

std::filesystem::path resolve_image_path(const std::filesystem::path& manifest_path,
                                         const Sample& sample) {
    std::filesystem::path img(sample.image_path);
    if (img.is_absolute()) return img;
    return manifest_path.parent_path() / img;
}

std::pair<Manifest, Manifest> split_by_config(const Manifest& manifest, double ratio,
                                              uint64_t seed) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw ConfigError("split ratio must lie strictly between 0 and 1");

    // Collect distinct config ids in first-appearance order, then shuffle
    // them with the seeded stream.
    std::vector<std::string> configs;
    std::unordered_set<std::string> seen;
    for (const auto& s : manifest.samples) {
        if (seen.insert(s.config_id).second) configs.push_back(s.config_id);
    }
    if (configs.size() < 2)
        throw InsufficientGroups("need at least 2 distinct config_ids, have " +
                                 std::to_string(configs.size()));

    Rng rng(seed);
    for (size_t i = configs.size() - 1; i > 0; --i) {
        size_t j = rng.uniform_index(i + 1);
        std::swap(configs[i], configs[j]);
    }

    // Closest integer realization of the ratio, but never an empty side.
    auto n_train = static_cast<size_t>(
        std::llround(ratio * static_cast<double>(configs.size())));
    n_train = std::clamp<size_t>(n_train, 1, configs.size() - 1);

    std::unordered_set<std::string> train_ids(configs.begin(), configs.begin() + n_train);
    Manifest train, test;
    for (const auto& s : manifest.samples) {
        (train_ids.count(s.config_id) ? train : test).samples.push_back(s);
    }
    return {std::move(train), std::move(test)};
}

}  // namespace rivetkey::dataio
