#pragma once

#include <array>
#include <cmath>

namespace ldhull {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    bool operator==(const Vec2&) const = default;

    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    double angle() const { return std::atan2(y, x); }

    Vec2 normalized() const {
        const double n = norm();
        return n > 0 ? Vec2{x / n, y / n} : Vec2{1.0, 0.0};
    }
    Vec2 perp() const { return {-y, x}; }
    Vec2 rotated(double theta) const {
        const double c = std::cos(theta), s = std::sin(theta);
        return {c * x - s * y, s * x + c * y};
    }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

inline Vec2 unit_from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Angular distance between two unit vectors, in [0, pi].
inline double angular_distance(Vec2 a, Vec2 b) {
    return std::atan2(std::abs(a.cross(b)), a.dot(b));
}

struct Mat22 {
    // row-major: [[a, b], [c, d]]
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    constexpr Mat22() = default;
    constexpr Mat22(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Mat22 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Vec2 apply_transposed(Vec2 v) const { return {a * v.x + c * v.y, b * v.x + d * v.y}; }
    Mat22 transposed() const { return {a, c, b, d}; }
    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }

    Mat22 operator+(const Mat22& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat22 operator-(const Mat22& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat22 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

    Mat22 mul(const Mat22& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    /// Solve M x = rhs; caller guarantees det != 0.
    Vec2 solve(Vec2 rhs) const {
        const double dt = det();
        return {(d * rhs.x - b * rhs.y) / dt, (a * rhs.y - c * rhs.x) / dt};
    }
};

/// Outer product v w^T.
inline Mat22 outer(Vec2 v, Vec2 w) { return {v.x * w.x, v.x * w.y, v.y * w.x, v.y * w.y}; }

/// Eigen-decomposition of a symmetric 2x2 matrix. Returns eigenvalues
/// (ascending) with matching orthonormal eigenvectors.
struct SymEigen2 {
    std::array<double, 2> values;
    std::array<Vec2, 2> vectors;
};

inline SymEigen2 sym_eigen(const Mat22& m) {
    const double s = 0.5 * (m.b + m.c);  // symmetrize off-diagonal
    const double tr = m.a + m.d;
    const double disc = std::sqrt(std::max(0.0, 0.25 * (m.a - m.d) * (m.a - m.d) + s * s));
    const double l0 = 0.5 * tr - disc;
    const double l1 = 0.5 * tr + disc;
    Vec2 v1;
    if (std::abs(s) > 1e-300) {
        v1 = Vec2{l1 - m.d, s}.normalized();
    } else {
        v1 = (m.a >= m.d) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
    }
    return {{l0, l1}, {v1.perp(), v1}};
}

/// Symmetric PSD square root (eigenvalue form); negative eigenvalues are clamped to zero.
inline Mat22 sym_sqrt(const Mat22& m) {
    const SymEigen2 e = sym_eigen(m);
    const double s0 = std::sqrt(std::max(0.0, e.values[0]));
    const double s1 = std::sqrt(std::max(0.0, e.values[1]));
    const Mat22 p0 = outer(e.vectors[0], e.vectors[0]);
    const Mat22 p1 = outer(e.vectors[1], e.vectors[1]);
    return p0 * s0 + p1 * s1;
}

}  // namespace ldhull
