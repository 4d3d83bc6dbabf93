#pragma once

#include "confighom/errors.hpp"
#include "confighom/integers.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace confighom {

// Dense integer matrix, row-major. Sizes here stay small (thousands of
// entries); sparsity tricks live in callers that need them.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw ValidationError("ragged initializer for IntMatrix");
            for (long v : row) data_.emplace_back(v);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const {
        for (const Int& v : data_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    static IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols() != b.rows())
            throw ValidationError("matrix product shape mismatch");
        IntMatrix out(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const Int& aik = a.at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out.at(i, j) += aik * b.at(k, j);
            }
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

} // namespace confighom
