#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rivetkey/errors.hpp"
#include "rivetkey/geometry.hpp"

namespace rivetkey::dataio {

enum class Domain { clean, noisy };

std::string to_string(Domain d);
Domain domain_from_string(const std::string& s);

// One dataset record. Keypoints are ground truth in the stored image's
// pixel frame; head_radius_px is the OKS object scale.
struct Sample {
    std::string id;
    std::string image_path;  // relative to the manifest's directory
    std::string config_id;
    Domain domain = Domain::clean;
    KeypointSet keypoints;   // exactly 6
    double pixel_pitch_mm = 0.05;
    double head_radius_px = 0.0;
};

struct Manifest {
    int version = 1;
    std::vector<Sample> samples;
};

// Strict JSON codec: version must be 1, ids unique, exactly 6 keypoints
// per sample, unknown fields rejected. write_manifest is atomic.
Manifest read_manifest(const std::filesystem::path& path);
void write_manifest(const Manifest& manifest, const std::filesystem::path& path);

// Validate contents without touching the filesystem (used by both codec
// directions and by generators).
void validate(const Manifest& manifest);

// Resolve a sample's image path against the directory of the manifest it
// was loaded from.
std::filesystem::path resolve_image_path(const std::filesystem::path& manifest_path,
                                         const Sample& sample);

// Partition by configuration: every config_id ends up in exactly one
// subset, and the number of train configs is the closest integer
// realization of `ratio`. Deterministic given the seed.
std::pair<Manifest, Manifest> split_by_config(const Manifest& manifest, double ratio,
                                              uint64_t seed);

}  // namespace rivetkey::dataio
