#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace ccnm {

inline constexpr double pi = 3.14159265358979323846;

/// Chebyshev-Gauss-Lobatto point set on [a, b], ascending.
/// n_order = N, so the grid has N+1 points with points[0] = a and
/// points[N] = b exactly.
struct CglGrid {
    int n_order = 0;
    double a = 0.0;
    double b = 0.0;
    std::vector<double> points;

    [[nodiscard]] int size() const { return n_order + 1; }
};

/// Dense first-derivative operator on a CGL grid: samples in, derivative
/// samples out. Exact for polynomials of degree <= N.
struct DiffMatrix {
    CglGrid grid;
    Eigen::MatrixXd entries;
};

[[nodiscard]] inline CglGrid cgl_points(int n_order, double a, double b) {
    if (n_order < 2)
        throw std::invalid_argument("cgl_points: n_order must be >= 2");
    if (!(a < b))
        throw std::invalid_argument("cgl_points: interval start must be below end");
    CglGrid g;
    g.n_order = n_order;
    g.a = a;
    g.b = b;
    g.points.resize(n_order + 1);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int j = 0; j <= n_order; ++j)
        g.points[j] = mid - half * std::cos(j * pi / n_order);
    g.points[0] = a;  // cosine endpoints are exact, but pin them bit-exact
    g.points[n_order] = b;
    return g;
}

namespace detail {

/// Barycentric weights for ascending CGL points (up to an irrelevant
/// common factor): (-1)^j, halved at both endpoints.
[[nodiscard]] inline std::vector<double> cgl_barycentric_weights(int n_order) {
    std::vector<double> w(n_order + 1);
    for (int j = 0; j <= n_order; ++j) {
        double v = (j % 2 == 0) ? 1.0 : -1.0;
        if (j == 0 || j == n_order) v *= 0.5;
        w[j] = v;
    }
    return w;
}

}  // namespace detail

/// Collocation differentiation matrix built from barycentric weights.
/// Diagonal entries use the negative row-sum rule, which keeps the
/// derivative of constants at exactly zero.
[[nodiscard]] inline DiffMatrix diff_matrix(const CglGrid& grid) {
    const int n = grid.n_order;
    const auto w = detail::cgl_barycentric_weights(n);
    Eigen::MatrixXd d(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        double diag = 0.0;
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            const double dij = (w[j] / w[i]) / (grid.points[i] - grid.points[j]);
            d(i, j) = dij;
            diag -= dij;
        }
        d(i, i) = diag;
    }
    return DiffMatrix{grid, std::move(d)};
}

/// Clenshaw-Curtis weights on the grid: positive, sum to (b - a), and
/// integrate polynomials of degree <= N exactly.
[[nodiscard]] inline std::vector<double> quad_weights(const CglGrid& grid) {
    const int n = grid.n_order;
    std::vector<double> w(n + 1);
    const double end = (n % 2 == 0) ? 1.0 / (double(n) * n - 1.0)
                                    : 1.0 / (double(n) * n);
    w[0] = end;
    w[n] = end;
    for (int j = 1; j < n; ++j) {
        const double theta = j * pi / n;
        double v = 1.0;
        for (int k = 1; k <= (n - 1) / 2; ++k)
            v -= 2.0 * std::cos(2.0 * k * theta) / (4.0 * k * k - 1.0);
        if (n % 2 == 0)
            v -= std::cos(n * theta) / (double(n) * n - 1.0);
        w[j] = 2.0 * v / n;
    }
    const double scale = 0.5 * (grid.b - grid.a);
    for (auto& x : w) x *= scale;
    return w;
}

/// Barycentric interpolation of grid samples at z_star in [a, b].
/// Reproduces grid values exactly and is exact for degree <= N.
template <typename T>
[[nodiscard]] T barycentric_interpolate(const CglGrid& grid,
                                        std::span<const T> values,
                                        double z_star) {
    if (values.size() != static_cast<size_t>(grid.size()))
        throw std::invalid_argument("barycentric_interpolate: values length mismatch");
    if (z_star < grid.a || z_star > grid.b)
        throw std::domain_error("barycentric_interpolate: point outside the grid interval");
    const auto w = detail::cgl_barycentric_weights(grid.n_order);
    T numer{};
    double denom = 0.0;
    for (int j = 0; j <= grid.n_order; ++j) {
        const double dz = z_star - grid.points[j];
        if (dz == 0.0) return values[j];
        const double t = w[j] / dz;
        numer += t * values[j];
        denom += t;
    }
    return numer / denom;
}

template <typename T>
[[nodiscard]] T barycentric_interpolate(const CglGrid& grid,
                                        const std::vector<T>& values,
                                        double z_star) {
    return barycentric_interpolate<T>(grid, std::span<const T>(values), z_star);
}

}  // namespace ccnm
