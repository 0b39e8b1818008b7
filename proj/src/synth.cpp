#include "illumid/augment.hpp"
#include "illumid/errors.hpp"
#include "illumid/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace illumid {

namespace {

struct Hsv {
    double h, s, v; // h in [0,1)
};

void hsv_to_rgb(const Hsv& in, double rgb[3]) {
    const double h = (in.h - std::floor(in.h)) * 6.0;
    const int sector = static_cast<int>(h) % 6;
    const double f = h - std::floor(h);
    const double p = in.v * (1.0 - in.s);
    const double q = in.v * (1.0 - in.s * f);
    const double t = in.v * (1.0 - in.s * (1.0 - f));
    switch (sector) {
        case 0: rgb[0] = in.v; rgb[1] = t; rgb[2] = p; break;
        case 1: rgb[0] = q; rgb[1] = in.v; rgb[2] = p; break;
        case 2: rgb[0] = p; rgb[1] = in.v; rgb[2] = t; break;
        case 3: rgb[0] = p; rgb[1] = q; rgb[2] = in.v; break;
        case 4: rgb[0] = t; rgb[1] = p; rgb[2] = in.v; break;
        default: rgb[0] = in.v; rgb[1] = p; rgb[2] = q; break;
    }
}

// Per-identity appearance signature: clothing colors plus body shape.
struct IdentitySignature {
    Hsv torso, legs, head;
    double torso_w, torso_h, head_r, leg_h, leg_w;
};

IdentitySignature make_signature(uint64_t seed, int id, int num_ids) {
    Rng rng(mix_seed(seed, 0x1D5Eull, static_cast<uint64_t>(id)));
    IdentitySignature s;
    // Golden-ratio hue spacing keeps identities separable for any count.
    const double golden = 0.618033988749895;
    s.torso.h = std::fmod(id * golden + rng.next_double() * 0.015, 1.0);
    s.torso.s = 0.70 + 0.30 * rng.next_double();
    s.torso.v = 0.62 + 0.33 * rng.next_double();
    s.legs.h = std::fmod(s.torso.h + 0.31 + rng.next_double() * 0.12, 1.0);
    s.legs.s = 0.60 + 0.35 * rng.next_double();
    s.legs.v = 0.50 + 0.40 * rng.next_double();
    s.head.h = 0.07 + 0.03 * rng.next_double();
    s.head.s = 0.35 + 0.15 * rng.next_double();
    s.head.v = 0.75 + 0.20 * rng.next_double();
    s.torso_w = 0.28 + 0.16 * rng.next_double();
    s.torso_h = 0.26 + 0.12 * rng.next_double();
    s.head_r = 0.08 + 0.05 * rng.next_double();
    s.leg_h = 0.22 + 0.10 * rng.next_double();
    s.leg_w = 0.30 + 0.10 * rng.next_double();
    (void)num_ids;
    return s;
}

void fill_rect(ImageBuffer& img, double x0, double y0, double x1, double y1,
               const double rgb[3]) {
    const int ix0 = std::max(0, static_cast<int>(std::floor(x0)));
    const int iy0 = std::max(0, static_cast<int>(std::floor(y0)));
    const int ix1 = std::min(img.width - 1, static_cast<int>(std::ceil(x1)));
    const int iy1 = std::min(img.height - 1, static_cast<int>(std::ceil(y1)));
    for (int y = iy0; y <= iy1; ++y) {
        for (int x = ix0; x <= ix1; ++x) {
            for (int c = 0; c < 3; ++c) img.at(y, x, c) = rgb[c];
        }
    }
}

void fill_circle(ImageBuffer& img, double cx, double cy, double r, const double rgb[3]) {
    const int ix0 = std::max(0, static_cast<int>(std::floor(cx - r)));
    const int iy0 = std::max(0, static_cast<int>(std::floor(cy - r)));
    const int ix1 = std::min(img.width - 1, static_cast<int>(std::ceil(cx + r)));
    const int iy1 = std::min(img.height - 1, static_cast<int>(std::ceil(cy + r)));
    for (int y = iy0; y <= iy1; ++y) {
        for (int x = ix0; x <= ix1; ++x) {
            const double dx = x + 0.5 - cx;
            const double dy = y + 0.5 - cy;
            if (dx * dx + dy * dy <= r * r) {
                for (int c = 0; c < 3; ++c) img.at(y, x, c) = rgb[c];
            }
        }
    }
}

Hsv jitter_color(const Hsv& base, Rng& rng) {
    Hsv out = base;
    out.h = std::fmod(base.h + (rng.next_double() - 0.5) * 0.04 + 1.0, 1.0);
    out.s = std::clamp(base.s * (0.92 + 0.13 * rng.next_double()), 0.0, 1.0);
    out.v = std::clamp(base.v * (0.92 + 0.16 * rng.next_double()), 0.0, 1.0);
    return out;
}

ImageBuffer render_person(const IdentitySignature& sig, int side, int camera,
                          int num_cameras, Rng& rng) {
    ImageBuffer img(side, side, 3);

    // Camera-dependent background and mild color cast.
    const double cam_frac = num_cameras > 1
        ? static_cast<double>(camera) / (num_cameras - 1) : 0.0;
    Hsv bg;
    bg.h = std::fmod(0.52 + 0.21 * camera + (rng.next_double() - 0.5) * 0.05, 1.0);
    bg.s = 0.08 + 0.10 * rng.next_double();
    bg.v = std::clamp(0.50 + 0.20 * cam_frac + (rng.next_double() - 0.5) * 0.10, 0.0, 1.0);
    double bg_rgb[3];
    hsv_to_rgb(bg, bg_rgb);
    fill_rect(img, 0, 0, side - 1, side - 1, bg_rgb);

    const double s = static_cast<double>(side);
    const double dx = (rng.next_double() - 0.5) * 0.12 * s;
    const double dy = (rng.next_double() - 0.5) * 0.10 * s;
    const double scale = 0.92 + 0.16 * rng.next_double();
    const double cx = s * 0.5 + dx;
    const double cy = s * 0.52 + dy;

    const double tw = sig.torso_w * s * scale;
    const double th = sig.torso_h * s * scale;
    const double hr = sig.head_r * s * scale;
    const double lh = sig.leg_h * s * scale;
    const double lw = sig.leg_w * tw;

    double torso_rgb[3], legs_rgb[3], head_rgb[3];
    hsv_to_rgb(jitter_color(sig.torso, rng), torso_rgb);
    hsv_to_rgb(jitter_color(sig.legs, rng), legs_rgb);
    hsv_to_rgb(jitter_color(sig.head, rng), head_rgb);

    // Legs, torso, head from bottom up.
    const double torso_bottom = cy + th * 0.5;
    fill_rect(img, cx - tw * 0.35 - lw * 0.5, torso_bottom,
              cx - tw * 0.35 + lw * 0.5, torso_bottom + lh, legs_rgb);
    fill_rect(img, cx + tw * 0.35 - lw * 0.5, torso_bottom,
              cx + tw * 0.35 + lw * 0.5, torso_bottom + lh, legs_rgb);
    fill_rect(img, cx - tw * 0.5, cy - th * 0.5, cx + tw * 0.5, torso_bottom, torso_rgb);
    fill_circle(img, cx, cy - th * 0.5 - hr - 0.015 * s, hr, head_rgb);

    // Per-camera color cast.
    const double cast[3] = {1.0 - 0.04 * cam_frac, 1.0 - 0.015 * cam_frac,
                            0.96 + 0.04 * cam_frac};
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            for (int c = 0; c < 3; ++c) {
                img.at(y, x, c) = std::clamp(img.at(y, x, c) * cast[c], 0.0, 1.0);
            }
        }
    }
    return img;
}

} // namespace

Manifest synth_toy_dataset(int num_ids, int imgs_per_id, int side, int num_cameras,
                           uint64_t seed, const std::filesystem::path& out_dir) {
    if (num_ids < 2) throw std::invalid_argument("num_ids must be >= 2 (ranking needs at least two identities)");
    if (imgs_per_id < 4) throw std::invalid_argument("imgs_per_id must be >= 4");
    if (num_cameras < 2) throw std::invalid_argument("num_cameras must be >= 2");
    if (side < 8) throw std::invalid_argument("side must be >= 8");

    std::error_code ec;
    std::filesystem::create_directories(out_dir / "images", ec);
    if (ec) throw io_error("cannot create output dir '" + out_dir.string() + "': " + ec.message());

    Manifest m;
    m.root = out_dir;

    // Per identity: first n_query images are queries, next n_gallery are
    // gallery, the rest train. Cameras rotate per image, so consecutive
    // gallery images always span >= 2 cameras and every query has a
    // cross-camera match.
    const int n_query = std::max(1, imgs_per_id / 5);
    const int n_gallery = std::max(2, imgs_per_id / 5);

    for (int id = 0; id < num_ids; ++id) {
        const IdentitySignature sig = make_signature(seed, id, num_ids);
        for (int j = 0; j < imgs_per_id; ++j) {
            const int camera = j % num_cameras;
            Rng rng(mix_seed(seed, 0x2D06ull, static_cast<uint64_t>(id),
                             static_cast<uint64_t>(j)));
            ImageBuffer img = render_person(sig, side, camera, num_cameras, rng);

            char name[64];
            std::snprintf(name, sizeof(name), "images/p%04d_c%d_i%03d.png", id, camera, j);
            write_png(img, out_dir / name);

            SampleRecord r;
            r.image_path = name;
            r.person_id = id;
            r.camera_id = camera;
            r.split = j < n_query ? Split::query
                     : j < n_query + n_gallery ? Split::gallery
                                               : Split::train;
            r.illum_class = 0;
            r.gamma = 1.0;
            m.records.push_back(std::move(r));
        }
    }
    write_manifest(m, out_dir / "manifest.jsonl");
    return m;
}

} // namespace illumid
