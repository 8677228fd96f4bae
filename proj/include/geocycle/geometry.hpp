#ifndef GEOCYCLE_GEOMETRY_HPP
#define GEOCYCLE_GEOMETRY_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "geocycle/rational.hpp"

namespace geocycle {

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

// Endpoints must be distinct.
struct Segment {
    Point a;
    Point b;
};

// Sign of the signed area of triangle pqr: +1 counterclockwise,
// -1 clockwise, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

// True iff the open interiors of s and t meet in exactly one point.
// Segments sharing an endpoint do not cross. Collinear overlap throws
// DegeneracyError; it cannot occur in a drawing in general position.
bool segments_cross(const Segment& s, const Segment& t);

// Intersection point of the supporting lines; requires non-parallel lines
// (callers use it only on properly crossing segments).
Point crossing_point(const Segment& s, const Segment& t);

// One violation of general position: either three collinear points or
// three edges through a common interior point.
struct GeneralPositionViolation {
    enum class Kind { collinear_points, concurrent_edges };
    Kind kind;
    // indices into the points (collinear) or edges (concurrent) arrays
    std::array<int, 3> triple;
    std::string describe() const;
};

struct GeneralPositionReport {
    std::vector<GeneralPositionViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks (a) no three points collinear and (b) no three edges through a
// common interior point. Edges are index pairs into `points`. Throws
// DuplicatePointError if two points coincide.
GeneralPositionReport validate_general_position(
    const std::vector<Point>& points,
    const std::vector<std::pair<int, int>>& edges);

} // namespace geocycle

#endif
