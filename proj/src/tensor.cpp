#include "svlab/tensor.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace svlab {

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    int64_t n = 1;
    for (int d : shape_) {
        if (d <= 0) throw ShapeError("tensor dims must be positive");
        n *= d;
    }
    data_.assign(static_cast<size_t>(n), 0.0);
}

Tensor Tensor::full(std::vector<int> shape, double v) {
    Tensor t(std::move(shape));
    for (auto& x : t.data_) x = v;
    return t;
}

Tensor Tensor::randn(std::vector<int> shape, Rng& rng) {
    Tensor t(std::move(shape));
    for (auto& x : t.data_) x = rng.gaussian();
    return t;
}

bool Tensor::all_finite() const {
    for (double x : data_)
        if (!std::isfinite(x)) return false;
    return true;
}

double Tensor::mean() const {
    if (data_.empty()) return 0.0;
    double s = 0.0;
    for (double x : data_) s += x;
    return s / static_cast<double>(data_.size());
}

Tensor& Tensor::operator+=(const Tensor& o) {
    if (!same_shape(o)) throw ShapeError("tensor += shape mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    if (!same_shape(o)) throw ShapeError("tensor -= shape mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Tensor& Tensor::operator*=(double s) {
    for (auto& x : data_) x *= s;
    return *this;
}

namespace {

void put_u32(std::string& out, uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

uint32_t get_u32(const unsigned char* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

std::string encode_tensor(const Tensor& t) {
    std::string out;
    out.reserve(16 + static_cast<size_t>(t.numel()) * 4);
    out += "LGT1";
    put_u32(out, 0);  // dtype: float32
    put_u32(out, static_cast<uint32_t>(t.ndim()));
    for (int i = 0; i < t.ndim(); ++i) put_u32(out, static_cast<uint32_t>(t.dim(i)));
    for (int64_t i = 0; i < t.numel(); ++i) {
        float f = static_cast<float>(t[i]);
        uint32_t bits;
        std::memcpy(&bits, &f, 4);
        put_u32(out, bits);
    }
    return out;
}

}  // namespace

void save_tensor(const std::string& path, const Tensor& t) {
    std::string payload = encode_tensor(t);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw UserError("cannot open for write: " + path);
    f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!f) throw UserError("short write: " + path);
}

Tensor load_tensor(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UserError("cannot open: " + path);
    std::string buf((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (buf.size() < 12 || buf.compare(0, 4, "LGT1") != 0)
        throw UserError("not an LGT1 container: " + path);
    const auto* p = reinterpret_cast<const unsigned char*>(buf.data());
    uint32_t dtype = get_u32(p + 4);
    if (dtype != 0) throw UserError("unsupported dtype code in " + path);
    uint32_t ndim = get_u32(p + 8);
    if (ndim == 0 || ndim > 8) throw UserError("bad ndim in " + path);
    if (buf.size() < 12 + 4ull * ndim) throw UserError("truncated header: " + path);
    std::vector<int> shape(ndim);
    int64_t n = 1;
    for (uint32_t i = 0; i < ndim; ++i) {
        shape[i] = static_cast<int>(get_u32(p + 12 + 4 * i));
        n *= shape[i];
    }
    size_t off = 12 + 4ull * ndim;
    if (buf.size() != off + 4ull * static_cast<size_t>(n))
        throw UserError("payload size mismatch: " + path);
    Tensor t(shape);
    for (int64_t i = 0; i < n; ++i) {
        uint32_t bits = get_u32(p + off + 4 * static_cast<size_t>(i));
        float f;
        std::memcpy(&f, &bits, 4);
        t[i] = static_cast<double>(f);
    }
    return t;
}

uint64_t tensor_content_hash(const Tensor& t) {
    std::string payload = encode_tensor(t);
    return fnv1a64(payload.data(), payload.size());
}

void save_sidecar(const std::string& path, const Sidecar& kv) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw UserError("cannot open for write: " + path);
    for (const auto& [k, v] : kv) f << k << ": " << v << "\n";
}

Sidecar load_sidecar(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UserError("cannot open: " + path);
    Sidecar kv;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto pos = line.find(": ");
        if (pos == std::string::npos)
            throw UserError(path + ":" + std::to_string(lineno) + ": expected 'key: value'");
        kv[line.substr(0, pos)] = line.substr(pos + 2);
    }
    return kv;
}

}  // namespace svlab
