#pragma once

#include <cmath>
#include <vector>

namespace kconn {

// Tolerance for the "within communication radius" predicate. Relocation
// places robots at exactly distance h, so comparing strictly against h
// would make those edges flicker under rounding.
inline constexpr double kDistEps = 1e-9;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    bool operator==(const Vec3& o) const = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

// Robot positions plus the communication radius. dim is 2 or 3 at runtime;
// for dim == 2 every z coordinate is zero and the geometry degenerates
// naturally.
struct Instance {
    int dim = 2;
    double h = 1.0;
    std::vector<Vec3> positions;

    int n() const { return static_cast<int>(positions.size()); }

    // Throws std::invalid_argument on non-finite coordinates, h <= 0,
    // an empty position list, or dim outside {2, 3}.
    void validate() const;
};

inline Vec3 centroid(const std::vector<Vec3>& pts) {
    Vec3 c;
    for (const Vec3& p : pts) c += p;
    return c * (pts.empty() ? 0.0 : 1.0 / static_cast<double>(pts.size()));
}

}  // namespace kconn
