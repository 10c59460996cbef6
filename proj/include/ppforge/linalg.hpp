#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ppforge/errors.hpp"
#include "ppforge/rational.hpp"

namespace ppforge {

// Dense exact-rational matrix. Column j of a map's matrix is the image of
// the j-th basis vector.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_)
            throw DimensionMismatch("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
            }
        return r;
    }

    Mat scaled(const Rat& c) const {
        Mat r = *this;
        for (auto& x : r.a_) x *= c;
        return r;
    }

    Vec apply(const Vec& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw DimensionMismatch("matrix-vector shape mismatch");
        Vec r = zero_vec(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) r[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
        return r;
    }

    Vec col(int j) const {
        Vec r = zero_vec(rows_);
        for (int i = 0; i < rows_; ++i) r[static_cast<std::size_t>(i)] = (*this)(i, j);
        return r;
    }

    // Exact Gauss-Jordan inverse.
    Mat inverse() const {
        if (!is_square())
            throw DimensionMismatch("inverse of a non-square matrix");
        int n = rows_;
        Mat a = *this;
        Mat inv = Mat::identity(n);
        for (int c = 0; c < n; ++c) {
            int pivot = -1;
            for (int r = c; r < n; ++r)
                if (a(r, c) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                throw NotInvertible("matrix is singular");
            if (pivot != c) {
                for (int j = 0; j < n; ++j) {
                    std::swap(a(pivot, j), a(c, j));
                    std::swap(inv(pivot, j), inv(c, j));
                }
            }
            Rat p = a(c, c);
            for (int j = 0; j < n; ++j) {
                a(c, j) /= p;
                inv(c, j) /= p;
            }
            for (int r = 0; r < n; ++r) {
                if (r == c || a(r, c) == 0) continue;
                Rat f = a(r, c);
                for (int j = 0; j < n; ++j) {
                    a(r, j) -= f * a(c, j);
                    inv(r, j) -= f * inv(c, j);
                }
            }
        }
        return inv;
    }

    bool is_invertible() const {
        try {
            inverse();
            return true;
        } catch (const NotInvertible&) {
            return false;
        }
    }

    Vec flatten() const { return a_; }

private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> a_;
};

// The flip tau on 2-tensors; entry'[i][j] = entry[j][i].
inline Mat transpose2(const Mat& t) { return t.transpose(); }

// Skew-symmetric part a = (r - tau(r)) / 2.
inline Mat skew_part(const Mat& r) {
    return (r - r.transpose()).scaled(Rat(1, 2));
}

inline Mat symmetric_part(const Mat& r) {
    return (r + r.transpose()).scaled(Rat(1, 2));
}

inline Mat invert_matrix(const Mat& m) { return m.inverse(); }

// Cubic array of exact scalars; holds Z(r) and S(r) values.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int dim)
        : dim_(dim), a_(static_cast<std::size_t>(dim) * dim * dim) {}

    int dim() const { return dim_; }

    Rat& at(int i, int j, int k) {
        return a_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }
    const Rat& at(int i, int j, int k) const {
        return a_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }

    bool operator==(const Tensor3& o) const { return dim_ == o.dim_ && a_ == o.a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    // Number of nonzero entries.
    int support() const {
        int n = 0;
        for (const auto& x : a_)
            if (x != 0) ++n;
        return n;
    }

    Tensor3 operator+(const Tensor3& o) const {
        Tensor3 r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Tensor3 operator-(const Tensor3& o) const {
        Tensor3 r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    // Contracts one leg with an operator: leg 0 applies A on the first
    // index, leg 1 on the second, leg 2 on the third.
    Tensor3 apply_on_leg(const Mat& op, int leg) const {
        Tensor3 r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) {
                    const Rat& x = at(i, j, k);
                    if (x == 0) continue;
                    for (int m = 0; m < dim_; ++m) {
                        switch (leg) {
                            case 0: r.at(m, j, k) += op(m, i) * x; break;
                            case 1: r.at(i, m, k) += op(m, j) * x; break;
                            default: r.at(i, j, m) += op(m, k) * x; break;
                        }
                    }
                }
        return r;
    }

    Vec flatten() const { return a_; }

private:
    int dim_ = 0;
    std::vector<Rat> a_;
};

// Adds M (x) v to a 3-tensor: entry[i][j][k] += M(i,j) * v[k].
inline void accumulate_mat_otimes_vec(Tensor3& t, const Mat& m, const Vec& v) {
    for (int i = 0; i < t.dim(); ++i)
        for (int j = 0; j < t.dim(); ++j) {
            const Rat& x = m(i, j);
            if (x == 0) continue;
            for (int k = 0; k < t.dim(); ++k)
                if (v[static_cast<std::size_t>(k)] != 0) t.at(i, j, k) += x * v[static_cast<std::size_t>(k)];
        }
}

} // namespace ppforge
