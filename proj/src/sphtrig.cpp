#include "sphtet/sphtrig.hpp"

#include <cmath>
#include <numbers>

namespace sphtet {

namespace {

void require_arc(double x, const char* role) {
    if (!(x > 0.0 && x < std::numbers::pi)) {
        throw DomainError(std::string(role) + " " + std::to_string(x) +
                          " outside (0, pi)");
    }
}

double law_quotient(double opposite, double adj1, double adj2, double sign,
                    const char* what) {
    require_arc(opposite, what);
    require_arc(adj1, what);
    require_arc(adj2, what);
    const double s1 = std::sin(adj1);
    const double s2 = std::sin(adj2);
    if (s1 < kSinFloor || s2 < kSinFloor) {
        throw DomainError(std::string(what) + ": sine factor below floor");
    }
    return (std::cos(opposite) + sign * std::cos(adj1) * std::cos(adj2)) / (s1 * s2);
}

}  // namespace

const char* to_string(ValidityCode code) {
    switch (code) {
        case ValidityCode::Valid: return "valid";
        case ValidityCode::OutOfRange: return "out_of_range";
        case ValidityCode::Degenerate: return "degenerate";
        case ValidityCode::NotRealizable: return "not_realizable";
    }
    return "unknown";
}

double TriangleGram::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double cosine_law_angle(double opposite, double adj1, double adj2) {
    const double q = law_quotient(opposite, adj1, adj2, -1.0, "cosine law");
    return checked_acos(q, "cosine law");
}

double dual_cosine_law_side(double opposite, double adj1, double adj2) {
    const double q = law_quotient(opposite, adj1, adj2, +1.0, "dual cosine law");
    return checked_acos(q, "dual cosine law");
}

TriangleAngles triangle_angles_from_sides(const TriangleSides& s) {
    return TriangleAngles{
        cosine_law_angle(s.a, s.b, s.c),
        cosine_law_angle(s.b, s.c, s.a),
        cosine_law_angle(s.c, s.a, s.b),
    };
}

TriangleSides triangle_sides_from_angles(const TriangleAngles& t) {
    return TriangleSides{
        dual_cosine_law_side(t.A, t.B, t.C),
        dual_cosine_law_side(t.B, t.C, t.A),
        dual_cosine_law_side(t.C, t.A, t.B),
    };
}

TriangleGram triangle_gram(const TriangleSides& s) {
    const double ca = std::cos(s.a);
    const double cb = std::cos(s.b);
    const double cc = std::cos(s.c);
    TriangleGram g;
    g.m = {{{1.0, cc, cb}, {cc, 1.0, ca}, {cb, ca, 1.0}}};
    return g;
}

double triangle_gram_det(const TriangleSides& s) {
    return triangle_gram(s).det();
}

double triangle_wigner(const TriangleSides& s) {
    require_arc(s.a, "side a");
    require_arc(s.b, "side b");
    require_arc(s.c, "side c");
    const double det = triangle_gram_det(s);
    if (!(det > kDetFloor)) {
        throw DegenerateError("triangle Gram determinant " + std::to_string(det) +
                              " below floor");
    }
    return std::sin(s.a) / std::sqrt(det);
}

double triangle_inverse_wigner(const TriangleAngles& t) {
    require_arc(t.A, "angle A");
    require_arc(t.B, "angle B");
    require_arc(t.C, "angle C");
    const double a = dual_cosine_law_side(t.A, t.B, t.C);
    const double sa = std::sin(a);
    if (sa < kSinFloor) {
        throw DegenerateError("side opposite A degenerates (sin a below floor)");
    }
    return std::sin(t.A) / (sa * std::sin(t.B) * std::sin(t.C));
}

Validity validate_triangle(const TriangleSides& s) {
    for (double v : {s.a, s.b, s.c}) {
        if (!(v > 0.0 && v < std::numbers::pi)) {
            return Validity{ValidityCode::OutOfRange, v};
        }
    }
    const double det = triangle_gram_det(s);
    if (!(det > kDetFloor)) {
        return Validity{ValidityCode::Degenerate, det};
    }
    return Validity{ValidityCode::Valid, det};
}

}  // namespace sphtet
