#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hexapauli {

/// Small dense matrix with exact integer entries. Equality is entry-wise.
class DenseIntMatrix {
public:
    DenseIntMatrix() : dim_(0) {}
    explicit DenseIntMatrix(int dim) : dim_(dim), data_(dim * dim, 0) {}

    static DenseIntMatrix identity(int dim) {
        DenseIntMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1;
        return m;
    }

    int dim() const { return dim_; }
    std::int64_t& operator()(int r, int c) { return data_[r * dim_ + c]; }
    std::int64_t operator()(int r, int c) const { return data_[r * dim_ + c]; }

    bool operator==(const DenseIntMatrix& o) const = default;

    DenseIntMatrix operator*(const DenseIntMatrix& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
        DenseIntMatrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const std::int64_t a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < dim_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    DenseIntMatrix operator+(const DenseIntMatrix& o) const {
        DenseIntMatrix r(dim_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    DenseIntMatrix operator-(const DenseIntMatrix& o) const {
        DenseIntMatrix r(dim_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    DenseIntMatrix operator-() const {
        DenseIntMatrix r(dim_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }

    DenseIntMatrix transpose() const {
        DenseIntMatrix r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (auto v : data_) if (v != 0) return false;
        return true;
    }

    /// Kronecker product.
    DenseIntMatrix kron(const DenseIntMatrix& o) const {
        DenseIntMatrix r(dim_ * o.dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                const std::int64_t a = (*this)(i, j);
                if (a == 0) continue;
                for (int k = 0; k < o.dim_; ++k)
                    for (int l = 0; l < o.dim_; ++l)
                        r(i * o.dim_ + k, j * o.dim_ + l) = a * o(k, l);
            }
        return r;
    }

    const std::vector<std::int64_t>& data() const { return data_; }

private:
    int dim_;
    std::vector<std::int64_t> data_;
};

}  // namespace hexapauli
