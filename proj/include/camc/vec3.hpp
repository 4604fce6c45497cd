#pragma once

#include <cmath>

namespace camc {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double k) const { return {k * x, k * y, k * z}; }
    Vec3 operator/(double k) const { return {x / k, y / k, z / k}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
};

inline Vec3 operator*(double k, const Vec3& v) { return v * k; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

/// Column-major is unnecessary here; rows are explicit vectors.
struct Mat3 {
    Vec3 r0, r1, r2;

    Vec3 operator*(const Vec3& v) const { return {dot(r0, v), dot(r1, v), dot(r2, v)}; }

    static Mat3 identity() { return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

    static Mat3 rotation_z(double phi) {
        const double c = std::cos(phi), s = std::sin(phi);
        return {{c, -s, 0}, {s, c, 0}, {0, 0, 1}};
    }

    /// Rotation by angle `ang` about the axis through the origin with unit direction `d`.
    static Mat3 axis_angle(const Vec3& d, double ang) {
        const double c = std::cos(ang), s = std::sin(ang), t = 1.0 - c;
        return {{t * d.x * d.x + c, t * d.x * d.y - s * d.z, t * d.x * d.z + s * d.y},
                {t * d.x * d.y + s * d.z, t * d.y * d.y + c, t * d.y * d.z - s * d.x},
                {t * d.x * d.z - s * d.y, t * d.y * d.z + s * d.x, t * d.z * d.z + c}};
    }
};

}  // namespace camc
