#include "geocycle/geometry.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "geocycle/errors.hpp"

namespace geocycle {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty coordinate");
    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw ParseError("not a rational: '" + text + "'");
        return Rational(mpz_class(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-')
        throw ParseError("not a rational: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int orientation(const Point& p, const Point& q, const Point& r) {
    Rational area = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(area);
}

namespace {

bool on_segment_collinear(const Point& a, const Point& b, const Point& p) {
    // p is known collinear with ab; test whether it lies within the closed box
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

} // namespace

bool segments_cross(const Segment& s, const Segment& t) {
    if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) return false;
    int o1 = orientation(s.a, s.b, t.a);
    int o2 = orientation(s.a, s.b, t.b);
    int o3 = orientation(t.a, t.b, s.a);
    int o4 = orientation(t.a, t.b, s.b);
    if (o1 == 0 && o2 == 0) {
        // collinear: overlap is a degeneracy, mere disjointness is not
        if (on_segment_collinear(s.a, s.b, t.a) || on_segment_collinear(s.a, s.b, t.b) ||
            on_segment_collinear(t.a, t.b, s.a) || on_segment_collinear(t.a, t.b, s.b))
            throw DegeneracyError("segments overlap along a common line");
        return false;
    }
    return o1 * o2 < 0 && o3 * o4 < 0;
}

Point crossing_point(const Segment& s, const Segment& t) {
    Rational rx = s.b.x - s.a.x, ry = s.b.y - s.a.y;
    Rational qx = t.b.x - t.a.x, qy = t.b.y - t.a.y;
    Rational den = rx * qy - ry * qx;
    Rational u = ((t.a.x - s.a.x) * qy - (t.a.y - s.a.y) * qx) / den;
    return Point(s.a.x + u * rx, s.a.y + u * ry);
}

std::string GeneralPositionViolation::describe() const {
    std::string what = kind == Kind::collinear_points
                           ? "collinear points"
                           : "edges through a common point";
    return what + " (" + std::to_string(triple[0]) + ", " +
           std::to_string(triple[1]) + ", " + std::to_string(triple[2]) + ")";
}

GeneralPositionReport validate_general_position(
    const std::vector<Point>& points,
    const std::vector<std::pair<int, int>>& edges) {
    int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[i] == points[j])
                throw DuplicatePointError("points " + std::to_string(i) + " and " +
                                          std::to_string(j) + " coincide");

    GeneralPositionReport report;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orientation(points[i], points[j], points[k]) == 0)
                    report.violations.push_back(
                        {GeneralPositionViolation::Kind::collinear_points, {i, j, k}});

    // Each pairwise crossing point is computed exactly; a coincidence of two
    // crossing points means three (or more) edges meet at that point.
    int m = static_cast<int>(edges.size());
    std::map<Point, std::vector<int>> edges_at;
    for (int e = 0; e < m; ++e) {
        Segment se{points[edges[e].first], points[edges[e].second]};
        for (int f = e + 1; f < m; ++f) {
            Segment sf{points[edges[f].first], points[edges[f].second]};
            if (!segments_cross(se, sf)) continue;
            auto& at = edges_at[crossing_point(se, sf)];
            for (int g : {e, f})
                if (std::find(at.begin(), at.end(), g) == at.end()) at.push_back(g);
        }
    }
    for (auto& [pt, es] : edges_at) {
        if (es.size() < 3) continue;
        std::sort(es.begin(), es.end());
        for (std::size_t a = 0; a < es.size(); ++a)
            for (std::size_t b = a + 1; b < es.size(); ++b)
                for (std::size_t c = b + 1; c < es.size(); ++c)
                    report.violations.push_back(
                        {GeneralPositionViolation::Kind::concurrent_edges,
                         {es[a], es[b], es[c]}});
    }
    return report;
}

} // namespace geocycle
