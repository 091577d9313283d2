#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "wsham/errors.hpp"

namespace wsham {

/// Small dense square matrix, row-major.  Sizes in this library stay below
/// ~12x12 (quadrics over polyvector coordinates), so no effort is spent on
/// anything beyond straightforward O(n^3) kernels.
class Mat {
public:
    Mat() = default;
    explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    bool is_symmetric(double tol = 1e-12) const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
        return true;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    Mat scaled(double s) const {
        Mat m = *this;
        for (double& v : m.a_) v *= s;
        return m;
    }

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    int n_ = 0;
    std::vector<double> a_;
};

inline double frobenius_distance(const Mat& a, const Mat& b) {
    double s = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) {
            double d = a(i, j) - b(i, j);
            s += d * d;
        }
    return std::sqrt(s);
}

/// Gauss-Jordan inverse with partial pivoting.  Throws DegeneracyError with
/// the numerical rank when a pivot collapses.
Mat inverse(const Mat& m, double pivot_tol = 1e-13);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, unordered.
std::vector<double> symmetric_eigenvalues(const Mat& m);

/// Numerical rank of a symmetric matrix: count of |eigenvalue| above
/// rel_tol * max |eigenvalue|.
int symmetric_rank(const Mat& m, double rel_tol = 1e-10);

} // namespace wsham
