#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace hsgn {

/** Scalar field on a structured 2D grid. Row-major, x fastest-varying:
 *  linear index = j*nx + i. */
class Field2D {
public:
    Field2D() = default;
    Field2D(int nx, int ny, double fill = 0.0)
        : nx_(nx), ny_(ny), v_(static_cast<std::size_t>(nx) * ny, fill) {
        assert(nx > 0 && ny > 0);
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    std::size_t size() const { return v_.size(); }

    double& operator()(int i, int j) {
        assert(i >= 0 && i < nx_ && j >= 0 && j < ny_);
        return v_[static_cast<std::size_t>(j) * nx_ + i];
    }
    double operator()(int i, int j) const {
        assert(i >= 0 && i < nx_ && j >= 0 && j < ny_);
        return v_[static_cast<std::size_t>(j) * nx_ + i];
    }

    double& operator[](std::size_t k) { return v_[k]; }
    double operator[](std::size_t k) const { return v_[k]; }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }

    void fill(double value) { v_.assign(v_.size(), value); }

    bool same_shape(const Field2D& other) const {
        return nx_ == other.nx_ && ny_ == other.ny_;
    }

private:
    int nx_ = 0;
    int ny_ = 0;
    std::vector<double> v_;
};

} // namespace hsgn
