#ifndef HZONO_GEOMETRY2D_HPP_
#define HZONO_GEOMETRY2D_HPP_

#include <vector>

namespace hzono {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

// Vertices in counterclockwise order, no repeated closing vertex.
using Polygon = std::vector<Point2>;

// Andrew's monotone chain. Collinear and duplicate points are dropped; a
// segment comes back as its two endpoints and a point as one vertex.
Polygon convex_hull(std::vector<Point2> points);

// Shoelace formula; zero for fewer than three vertices.
double polygon_area(const Polygon& polygon);

}  // namespace hzono

#endif  // HZONO_GEOMETRY2D_HPP_
