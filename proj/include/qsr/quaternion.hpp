// Hamilton quaternion value type.
//
// q = w + x i + y j + z k with i^2 = j^2 = k^2 = -1,
// ij = -ji = k, jk = -kj = i, ki = -ik = j.

#pragma once

#include <cmath>

namespace qsr {

struct Quaternion {
    double w = 0.0;  // scalar part
    double x = 0.0;  // i coefficient
    double y = 0.0;  // j coefficient
    double z = 0.0;  // k coefficient

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w;
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w;
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s;
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
};

inline constexpr Quaternion unit_i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion unit_j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion unit_k{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }

// Hamilton product; non-commutative.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}
constexpr bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double modulus_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double modulus(const Quaternion& q) { return std::sqrt(modulus_sq(q)); }

// e^{i theta} = cos theta + i sin theta, confined to the {1, i} plane.
inline Quaternion exp_i(double theta) { return {std::cos(theta), std::sin(theta), 0.0, 0.0}; }

// e^{j theta} = cos theta + j sin theta, confined to the {1, j} plane.
inline Quaternion exp_j(double theta) { return {std::cos(theta), 0.0, std::sin(theta), 0.0}; }

}  // namespace qsr
