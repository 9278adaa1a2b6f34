#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ptdiff {

using Vec = std::vector<double>;

/// Small dense row-major matrix. Dimensions here are (n+1) with n <= ~10,
/// so there is no blocking, no views, no sparsity.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Mat diag(const Vec& d) {
        Mat m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Mat operator*(const Mat& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("Mat multiply: dimension mismatch");
        Mat out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const double a = (*this)(i, k);
                if (a == 0.0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    Vec operator*(const Vec& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("Mat*Vec: dimension mismatch");
        Vec out(rows_, 0.0);
        for (std::size_t i = 0; i < rows_; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    Mat operator+(const Mat& rhs) const { return combined(rhs, +1.0); }
    Mat operator-(const Mat& rhs) const { return combined(rhs, -1.0); }

    Mat scaled(double s) const {
        Mat out = *this;
        for (double& x : out.data_) x *= s;
        return out;
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : data_)
            if (std::abs(x) > m) m = std::abs(x);
        return m;
    }

    bool operator==(const Mat& rhs) const = default;

private:
    Mat combined(const Mat& rhs, double sign) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("Mat add/sub: dimension mismatch");
        Mat out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + sign * rhs.data_[i];
        return out;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline double max_abs_diff(const Mat& a, const Mat& b) { return (a - b).max_abs(); }

inline double max_abs(const Vec& v) {
    double m = 0.0;
    for (double x : v)
        if (std::abs(x) > m) m = std::abs(x);
    return m;
}

inline double max_abs_diff(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vec diff: size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > m) m = std::abs(a[i] - b[i]);
    return m;
}

inline double norm2(const Vec& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace ptdiff
