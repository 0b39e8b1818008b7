#include "illumid/image.hpp"
#include "illumid/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include <png.h>

namespace illumid {

ImageBuffer read_png(const std::filesystem::path& path) {
    png_image png;
    std::memset(&png, 0, sizeof(png));
    png.version = PNG_IMAGE_VERSION;

    if (!png_image_begin_read_from_file(&png, path.string().c_str())) {
        throw io_error("cannot read PNG '" + path.string() + "': " + png.message);
    }
    const bool gray = PNG_IMAGE_PIXEL_CHANNELS(png.format) == 1;
    png.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;

    const int channels = gray ? 1 : 3;
    std::vector<unsigned char> raw(PNG_IMAGE_SIZE(png));
    if (!png_image_finish_read(&png, nullptr, raw.data(), 0, nullptr)) {
        png_image_free(&png);
        throw io_error("cannot decode PNG '" + path.string() + "': " + png.message);
    }

    ImageBuffer img(static_cast<int>(png.height), static_cast<int>(png.width), channels);
    for (size_t i = 0; i < img.size(); ++i) {
        img.data[i] = raw[i] / 255.0;
    }
    return img;
}

void write_png(const ImageBuffer& img, const std::filesystem::path& path) {
    if (img.channels != 1 && img.channels != 3) {
        throw std::invalid_argument("write_png: channels must be 1 or 3");
    }
    png_image png;
    std::memset(&png, 0, sizeof(png));
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(img.width);
    png.height = static_cast<png_uint_32>(img.height);
    png.format = img.channels == 1 ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;

    std::vector<unsigned char> raw(img.size());
    for (size_t i = 0; i < img.size(); ++i) {
        const double v = std::clamp(img.data[i], 0.0, 1.0);
        raw[i] = static_cast<unsigned char>(std::lround(v * 255.0));
    }
    if (!png_image_write_to_file(&png, path.string().c_str(), 0, raw.data(), 0, nullptr)) {
        throw io_error("cannot write PNG '" + path.string() + "': " + png.message);
    }
}

} // namespace illumid
