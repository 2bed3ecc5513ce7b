#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rqi/errors.hpp"

namespace rqi {

// Axis-aligned box; the domain every sampling law and target lives on.
struct BoxDomain {
    std::vector<double> lower;
    std::vector<double> upper;

    BoxDomain(std::vector<double> lo, std::vector<double> hi)
        : lower(std::move(lo)), upper(std::move(hi)) {
        if (lower.empty() || lower.size() != upper.size())
            throw ContractError("BoxDomain: lower/upper must be nonempty and equally sized");
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (!(lower[i] < upper[i]))
                throw ContractError("BoxDomain: lower[i] < upper[i] required");
    }

    static BoxDomain cube(std::size_t dim, double lo, double hi) {
        return BoxDomain(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
    }

    std::size_t dim() const noexcept { return lower.size(); }

    bool contains(std::span<const double> x) const noexcept {
        if (x.size() != lower.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] < lower[i] || x[i] > upper[i]) return false;
        return true;
    }

    std::vector<double> center() const {
        std::vector<double> c(dim());
        for (std::size_t i = 0; i < dim(); ++i) c[i] = 0.5 * (lower[i] + upper[i]);
        return c;
    }

    double min_extent() const noexcept {
        double m = upper[0] - lower[0];
        for (std::size_t i = 1; i < dim(); ++i)
            m = std::min(m, upper[i] - lower[i]);
        return m;
    }

    double volume() const noexcept {
        double v = 1.0;
        for (std::size_t i = 0; i < dim(); ++i) v *= upper[i] - lower[i];
        return v;
    }

    bool operator==(const BoxDomain&) const = default;
};

// Fixed-dimension point list in one contiguous row-major buffer.
class PointSet {
public:
    explicit PointSet(std::size_t dim) : dim_(dim) {
        if (dim == 0) throw ContractError("PointSet: dimension must be >= 1");
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return data_.size() / dim_; }
    bool empty() const noexcept { return data_.empty(); }

    std::span<const double> operator[](std::size_t i) const noexcept {
        return {data_.data() + i * dim_, dim_};
    }

    void push_back(std::span<const double> p) {
        if (p.size() != dim_) throw ContractError("PointSet: point has wrong dimension");
        data_.insert(data_.end(), p.begin(), p.end());
    }

    // Uninitialized row to be filled in place.
    double* append_row() {
        data_.resize(data_.size() + dim_);
        return data_.data() + data_.size() - dim_;
    }

    void reserve(std::size_t n) { data_.reserve(n * dim_); }

    std::span<const double> flat() const noexcept { return data_; }

    bool operator==(const PointSet&) const = default;

private:
    std::size_t dim_;
    std::vector<double> data_;
};

inline double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

} // namespace rqi
