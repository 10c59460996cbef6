#pragma once

#include <vector>

#include "ppforge/linalg.hpp"
#include "ppforge/rational.hpp"

namespace ppforge {

// Structure constants of one bilinear product on a chosen basis:
// e_i * e_j = sum_k c[i][j][k] e_k.
class MultTable {
public:
    MultTable() = default;
    explicit MultTable(int dim)
        : dim_(dim), c_(static_cast<std::size_t>(dim) * dim * dim) {}

    int dim() const { return dim_; }

    Rat& c(int i, int j, int k) {
        return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }
    const Rat& c(int i, int j, int k) const {
        return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }

    bool operator==(const MultTable& o) const { return dim_ == o.dim_ && c_ == o.c_; }
    bool operator!=(const MultTable& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    Vec prod_basis(int i, int j) const {
        Vec r = zero_vec(dim_);
        for (int k = 0; k < dim_; ++k) r[static_cast<std::size_t>(k)] = c(i, j, k);
        return r;
    }

    Vec prod(const Vec& x, const Vec& y) const {
        Vec r = zero_vec(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < dim_; ++j) {
                if (y[static_cast<std::size_t>(j)] == 0) continue;
                Rat f = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
                for (int k = 0; k < dim_; ++k)
                    if (c(i, j, k) != 0) r[static_cast<std::size_t>(k)] += f * c(i, j, k);
            }
        }
        return r;
    }

    // Left multiplication operator L(e_i): column j holds e_i * e_j.
    Mat left_op(int i) const {
        Mat m(dim_, dim_);
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) m(k, j) = c(i, j, k);
        return m;
    }

    // Right multiplication operator R(e_i): column j holds e_j * e_i.
    Mat right_op(int i) const {
        Mat m(dim_, dim_);
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) m(k, j) = c(j, i, k);
        return m;
    }

    Mat left_op(const Vec& x) const {
        Mat m(dim_, dim_);
        for (int i = 0; i < dim_; ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (c(i, j, k) != 0) m(k, j) += x[static_cast<std::size_t>(i)] * c(i, j, k);
        }
        return m;
    }

    Mat right_op(const Vec& x) const {
        Mat m(dim_, dim_);
        for (int i = 0; i < dim_; ++i) {
            if (x[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (c(j, i, k) != 0) m(k, j) += x[static_cast<std::size_t>(i)] * c(j, i, k);
        }
        return m;
    }

    // x . y = x * y + y * x.
    MultTable symmetrized() const {
        MultTable t(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) t.c(i, j, k) = c(i, j, k) + c(j, i, k);
        return t;
    }

    // [x, y] = x * y - y * x.
    MultTable antisymmetrized() const {
        MultTable t(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) t.c(i, j, k) = c(i, j, k) - c(j, i, k);
        return t;
    }

    MultTable operator+(const MultTable& o) const {
        MultTable t(dim_);
        for (std::size_t i = 0; i < c_.size(); ++i) t.c_[i] = c_[i] + o.c_[i];
        return t;
    }

    MultTable scaled(const Rat& f) const {
        MultTable t = *this;
        for (auto& x : t.c_) x *= f;
        return t;
    }

    // Structure constants restricted to basis indices [lo, lo+len).
    MultTable restrict_block(int lo, int len) const {
        MultTable t(len);
        for (int i = 0; i < len; ++i)
            for (int j = 0; j < len; ++j)
                for (int k = 0; k < len; ++k) t.c(i, j, k) = c(lo + i, lo + j, lo + k);
        return t;
    }

    // True when products of the block [lo, lo+len) land inside the block.
    bool block_closed(int lo, int len) const {
        for (int i = lo; i < lo + len; ++i)
            for (int j = lo; j < lo + len; ++j)
                for (int k = 0; k < dim_; ++k)
                    if ((k < lo || k >= lo + len) && c(i, j, k) != 0) return false;
        return true;
    }

private:
    int dim_ = 0;
    std::vector<Rat> c_;
};

} // namespace ppforge
