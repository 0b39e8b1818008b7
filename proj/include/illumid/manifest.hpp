#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace illumid {

enum class Split { train, query, gallery };

std::string to_string(Split s);
Split split_from_string(const std::string& s);

/// One labeled image. illum_class indexes the gamma level that produced
/// (or will produce) the image; unaugmented manifests carry class 0 and
/// gamma 1.
struct SampleRecord {
    std::string image_path; // relative to the manifest's directory
    int person_id = 0;
    int camera_id = 0;
    Split split = Split::train;
    int illum_class = 0;
    double gamma = 1.0;
};

struct Manifest {
    std::filesystem::path root;
    std::vector<SampleRecord> records;
};

/// JSON Lines, one record per line, keys exactly
/// {image_path, person_id, camera_id, split, illum_class, gamma}.
Manifest read_manifest(const std::filesystem::path& file);
void write_manifest(const Manifest& m, const std::filesystem::path& file);

} // namespace illumid
