#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "osculate/error.hpp"

namespace osculate {

/// Dense row-major matrix. Problem sizes here are a few dozen rows at most.
template <class T>
class basic_matrix {
public:
    basic_matrix() = default;

    basic_matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Builds from nested rows; throws ShapeMismatch on ragged input.
    basic_matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static basic_matrix from_rows(const std::vector<std::vector<T>>& rows) {
        basic_matrix out;
        out.rows_ = rows.size();
        out.cols_ = out.rows_ ? rows.front().size() : 0;
        out.data_.reserve(out.rows_ * out.cols_);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != out.cols_)
                throw Error(ErrorKind::ShapeMismatch, "ragged matrix row " + std::to_string(i), i);
            out.data_.insert(out.data_.end(), rows[i].begin(), rows[i].end());
        }
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::span<const T> flat() const noexcept { return data_; }

    std::vector<std::vector<T>> to_rows() const {
        std::vector<std::vector<T>> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.emplace_back(row(i).begin(), row(i).end());
        return out;
    }

    friend bool operator==(const basic_matrix&, const basic_matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = basic_matrix<double>;

}  // namespace osculate
