#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace rivetkey {

// Pixel coordinate convention used throughout: x = column (rightward),
// y = row (downward), origin at the center of the top-left pixel.
struct Keypoint {
    double x = 0.0;
    double y = 0.0;
};

using KeypointSet = std::vector<Keypoint>;

inline double distance(const Keypoint& a, const Keypoint& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct Rect {
    int x0 = 0;
    int y0 = 0;
    int width = 0;
    int height = 0;

    int x1() const { return x0 + width; }   // exclusive
    int y1() const { return y0 + height; }  // exclusive

    bool contains(double x, double y) const {
        return x >= x0 && x <= x0 + width - 1 && y >= y0 && y <= y0 + height - 1;
    }
};

// 2x3 affine transform, row-major: [a b tx; c d ty].
struct Affine {
    double a = 1.0, b = 0.0, tx = 0.0;
    double c = 0.0, d = 1.0, ty = 0.0;

    Keypoint apply(const Keypoint& p) const {
        return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
    }

    Affine inverse() const {
        double det = a * d - b * c;
        Affine inv;
        inv.a = d / det;
        inv.b = -b / det;
        inv.c = -c / det;
        inv.d = a / det;
        inv.tx = -(inv.a * tx + inv.b * ty);
        inv.ty = -(inv.c * tx + inv.d * ty);
        return inv;
    }

    // this ∘ other: apply `other` first, then this.
    Affine compose(const Affine& o) const {
        Affine r;
        r.a = a * o.a + b * o.c;
        r.b = a * o.b + b * o.d;
        r.c = c * o.a + d * o.c;
        r.d = c * o.b + d * o.d;
        r.tx = a * o.tx + b * o.ty + tx;
        r.ty = c * o.tx + d * o.ty + ty;
        return r;
    }

    static Affine translation(double dx, double dy) { return {1, 0, dx, 0, 1, dy}; }
    static Affine scaling(double s) { return {s, 0, 0, 0, s, 0}; }
};

}  // namespace rivetkey
