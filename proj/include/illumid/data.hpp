#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "illumid/augment.hpp"
#include "illumid/image.hpp"
#include "illumid/manifest.hpp"
#include "illumid/rng.hpp"
#include "illumid/tensor.hpp"

namespace illumid {

/// Manifest plus decoded images, person index and split lists. Immutable
/// after load; shareable across workers.
class Dataset {
public:
    std::filesystem::path root;
    std::vector<SampleRecord> records;
    std::map<int, std::vector<int>> index_by_person; // train records only
    std::vector<int> train_indices, query_indices, gallery_indices;
    int n_person = 0; // distinct train person ids
    int n_illu = 0;   // max illum_class + 1 over records (informational)

    const ImageBuffer& image(int record_idx) const {
        return unique_images_[image_of_[record_idx]];
    }
    /// Contiguous class index in [0, n_person) for a train person id.
    int person_class(int person_id) const;

    friend Dataset load_manifest(const std::filesystem::path& file,
                                 const std::optional<std::filesystem::path>& root);

private:
    std::vector<int> image_of_;               // record -> unique image
    std::vector<ImageBuffer> unique_images_;
    std::map<int, int> class_of_person_;
};

/// Reads manifest, decodes every referenced image (errors name the path),
/// and builds indices.
Dataset load_manifest(const std::filesystem::path& file,
                      const std::optional<std::filesystem::path>& root = std::nullopt);

/// Identity-balanced draw: num_ids distinct train identities without
/// replacement, per_id records each (with replacement only when an
/// identity has fewer than per_id records). Returns num_ids * per_id
/// record indices.
std::vector<int> pk_sample(const Dataset& ds, int num_ids, int per_id, Rng& rng);

/// Aligned training arrays; i_diff is always the mapped difference of
/// i_random against i_origin.
struct Batch {
    Tensor i_random, i_origin, i_diff;
    std::vector<int> person_labels; // contiguous class indices
    std::vector<int> illum_labels;
    int size = 0;
};

/// Loads originals and applies a per-record uniformly drawn illumination
/// level. Pixel content is fully determined by (global_seed, epoch,
/// record index); safe to call from parallel workers.
Batch make_batch(const Dataset& ds, std::span<const int> indices,
                 const IlluminationConfig& cfg, int epoch, uint64_t global_seed);

} // namespace illumid
