#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rwm {

// Dense row-major matrix of 64-bit floats.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols); // zero-filled
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }
    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    double frobenius_norm() const;
    bool all_finite() const;
    // Throws NumericError naming `what` if any entry is NaN/Inf.
    void ensure_finite(const char* what) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// C = A * B
Matrix matmul(const Matrix& a, const Matrix& b);
// C = A^T * B
Matrix matmul_trans_a(const Matrix& a, const Matrix& b);
// C = A * B^T
Matrix matmul_trans_b(const Matrix& a, const Matrix& b);
// y += alpha * x (same shape)
void add_scaled(Matrix& y, double alpha, const Matrix& x);
// <A, B> entrywise (Frobenius inner product)
double frobenius_inner(const Matrix& a, const Matrix& b);
// Frobenius cosine similarity; 0 when either norm is 0.
double frobenius_cosine(const Matrix& a, const Matrix& b);

} // namespace rwm
