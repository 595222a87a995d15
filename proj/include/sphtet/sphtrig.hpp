#pragma once

#include <array>

#include "sphtet/core.hpp"

namespace sphtet {

// Arc lengths of a spherical triangle, radians, each in (0, pi).
// Side a is opposite angle A, b opposite B, c opposite C.
struct TriangleSides {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

// Interior angles of a spherical triangle, radians, each in (0, pi).
struct TriangleAngles {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
};

// 3x3 matrix of cosines of pairwise arc distances, unit diagonal. Vertex
// order (v0, v1, v2) with a = arc(v1,v2), b = arc(v0,v2), c = arc(v0,v1),
// so m[0][1] = cos c, m[0][2] = cos b, m[1][2] = cos a.
struct TriangleGram {
    std::array<std::array<double, 3>, 3> m{};

    double det() const;
};

// Interior angle opposite `opposite`, with `adj1`, `adj2` the two sides
// meeting at that angle's vertex. Principal branch [0, pi].
double cosine_law_angle(double opposite, double adj1, double adj2);

// Side opposite `opposite`, from the three interior angles. Principal branch.
double dual_cosine_law_side(double opposite, double adj1, double adj2);

TriangleAngles triangle_angles_from_sides(const TriangleSides& sides);
TriangleSides triangle_sides_from_angles(const TriangleAngles& angles);

TriangleGram triangle_gram(const TriangleSides& sides);
double triangle_gram_det(const TriangleSides& sides);

// dA/da with the other two sides fixed: sin a / sqrt(det Gram).
double triangle_wigner(const TriangleSides& sides);

// da/dA with the other two angles fixed: sin A / (sin a sin B sin C), a from
// the dual cosine law. Equals triangle_wigner of the corresponding sides.
double triangle_inverse_wigner(const TriangleAngles& angles);

// Gram-positivity criterion: Valid iff each side is in (0, pi) and the Gram
// determinant exceeds kDetFloor.
Validity validate_triangle(const TriangleSides& sides);

}  // namespace sphtet
