#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace illumid {

/// Dense NCHW tensor of doubles. Thin container; math lives in layers.
struct Tensor {
    int n = 0, c = 0, h = 0, w = 0;
    std::vector<double> v;

    Tensor() = default;
    Tensor(int n_, int c_, int h_, int w_)
        : n(n_), c(c_), h(h_), w(w_),
          v(static_cast<size_t>(n_) * c_ * h_ * w_, 0.0) {}

    double* data() { return v.data(); }
    const double* data() const { return v.data(); }
    size_t size() const { return v.size(); }

    double& at(int in, int ic, int iy, int ix) {
        return v[((static_cast<size_t>(in) * c + ic) * h + iy) * w + ix];
    }
    double at(int in, int ic, int iy, int ix) const {
        return v[((static_cast<size_t>(in) * c + ic) * h + iy) * w + ix];
    }

    bool same_shape(const Tensor& o) const {
        return n == o.n && c == o.c && h == o.h && w == o.w;
    }
    void zero() { std::fill(v.begin(), v.end(), 0.0); }

    Tensor& operator+=(const Tensor& o) {
        if (!same_shape(o)) throw std::invalid_argument("tensor shape mismatch in +=");
        for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
        return *this;
    }
};

} // namespace illumid
