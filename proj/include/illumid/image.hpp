#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

namespace illumid {

/// H x W x C image, row-major HWC, values in [0, 1].
struct ImageBuffer {
    int height = 0;
    int width = 0;
    int channels = 0;
    std::vector<double> data;

    ImageBuffer() = default;
    ImageBuffer(int h, int w, int c, double fill = 0.0)
        : height(h), width(w), channels(c),
          data(static_cast<size_t>(h) * w * c, fill) {}

    double& at(int y, int x, int c) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    double at(int y, int x, int c) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    size_t size() const { return data.size(); }
    bool same_shape(const ImageBuffer& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }
};

/// Reads an 8-bit PNG into [0,1] doubles (gray stays 1-channel, anything
/// else is converted to RGB). Throws io_error naming the path.
ImageBuffer read_png(const std::filesystem::path& path);

/// Writes 8-bit PNG (1 or 3 channels); values are clamped and rounded.
void write_png(const ImageBuffer& img, const std::filesystem::path& path);

} // namespace illumid
