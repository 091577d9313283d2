#include "wsham/linalg.hpp"

#include <algorithm>

namespace wsham {

Mat inverse(const Mat& m, double pivot_tol) {
    const int n = m.size();
    Mat a = m;
    Mat inv = Mat::identity(n);
    const double scale = std::max(m.max_abs(), 1e-300);

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) <= pivot_tol * scale) {
            throw DegeneracyError("matrix numerically singular",
                                  symmetric_rank(m), n);
        }
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const double d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a(r, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::vector<double> symmetric_eigenvalues(const Mat& m) {
    const int n = m.size();
    Mat a = m;
    // Cyclic Jacobi; converges fast at these sizes.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-30 * std::max(1.0, a.max_abs() * a.max_abs())) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a(i, i);
    return ev;
}

int symmetric_rank(const Mat& m, double rel_tol) {
    auto ev = symmetric_eigenvalues(m);
    double lmax = 0.0;
    for (double e : ev) lmax = std::max(lmax, std::abs(e));
    if (lmax == 0.0) return 0;
    int rank = 0;
    for (double e : ev)
        if (std::abs(e) > rel_tol * lmax) ++rank;
    return rank;
}

} // namespace wsham
