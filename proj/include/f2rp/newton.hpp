#pragma once

#include <vector>

#include "f2rp/poly.hpp"

namespace f2rp {

// Lower convex hull of {(i, v_q(c_i)) : c_i != 0} for f = sum c_i x^i.
struct NewtonPolygon {
    struct Point {
        long i;
        Rat v;
    };
    struct Segment {
        Rat slope;
        long length;  // horizontal length
    };
    std::vector<Point> points;    // finite-valuation points, by degree
    std::vector<Point> hull;      // lower hull vertices, left to right
    std::vector<Segment> segments;  // slopes strictly increasing
};

NewtonPolygon newton_polygon(const IntPoly& f, long q);

}  // namespace f2rp
