#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "svlab/common.hpp"
#include "svlab/rng.hpp"

namespace svlab {

// Dense row-major tensor. Compute is double precision; the on-disk "LGT1"
// container stores float32 (see save_tensor/load_tensor).
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int> shape);

    static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
    static Tensor full(std::vector<int> shape, double v);
    static Tensor randn(std::vector<int> shape, Rng& rng);

    const std::vector<int>& shape() const { return shape_; }
    int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
    int ndim() const { return static_cast<int>(shape_.size()); }
    int64_t numel() const { return static_cast<int64_t>(data_.size()); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& vec() { return data_; }
    const std::vector<double>& vec() const { return data_; }

    double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    // 4-d accessor (t, c, y, x) for latent videos.
    double& at4(int a, int b, int c, int d) {
        return data_[static_cast<size_t>(((static_cast<int64_t>(a) * shape_[1] + b) * shape_[2] + c) * shape_[3] + d)];
    }
    double at4(int a, int b, int c, int d) const {
        return data_[static_cast<size_t>(((static_cast<int64_t>(a) * shape_[1] + b) * shape_[2] + c) * shape_[3] + d)];
    }
    // 2-d accessor (row, col).
    double& at2(int r, int c) { return data_[static_cast<size_t>(static_cast<int64_t>(r) * shape_[1] + c)]; }
    double at2(int r, int c) const { return data_[static_cast<size_t>(static_cast<int64_t>(r) * shape_[1] + c)]; }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }
    bool all_finite() const;
    double mean() const;

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(double s);

private:
    std::vector<int> shape_;
    std::vector<double> data_;
};

// f x c x h x w latent clip. Dims are carried in the tensor header; the type
// exists to give call sites a domain name.
struct LatentVideo {
    Tensor data;  // (f, c, h, w)

    int frames() const { return data.dim(0); }
    int channels() const { return data.dim(1); }
    int height() const { return data.dim(2); }
    int width() const { return data.dim(3); }
};

// ---- LGT1 tensor container ------------------------------------------------
// magic "LGT1" | u32 dtype (0 = float32) | u32 ndim | u32 dims[ndim] |
// row-major float32 payload. All integers little-endian.

void save_tensor(const std::string& path, const Tensor& t);
Tensor load_tensor(const std::string& path);

uint64_t tensor_content_hash(const Tensor& t);

// ---- metadata sidecar -----------------------------------------------------
// UTF-8 text, one "key: value" per line.

using Sidecar = std::map<std::string, std::string>;

void save_sidecar(const std::string& path, const Sidecar& kv);
Sidecar load_sidecar(const std::string& path);

}  // namespace svlab
