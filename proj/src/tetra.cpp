#include "sphtet/tetra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sphtet {

namespace {

double dot4(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

// Complementary pair of {i, j} in {0,1,2,3}, ascending.
std::pair<int, int> complement(int i, int j) {
    std::array<int, 2> out{};
    int n = 0;
    for (int v = 0; v < 4; ++v) {
        if (v != i && v != j) out[n++] = v;
    }
    return {out[0], out[1]};
}

}  // namespace

double GramMatrix4::det() const {
    auto a = m;
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (a[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < 4; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

GramMatrix4 gram_from_lengths(const TetLengths& lengths) {
    GramMatrix4 g;
    for (int i = 0; i < 4; ++i) g.m[i][i] = 1.0;
    for (const EdgeId e : all_edges()) {
        const double c = std::cos(lengths[e]);
        g.m[e.first()][e.second()] = c;
        g.m[e.second()][e.first()] = c;
    }
    return g;
}

double gram_det(const TetLengths& lengths) {
    return gram_from_lengths(lengths).det();
}

TetVertices vertices_from_lengths(const TetLengths& lengths) {
    const GramMatrix4 g = gram_from_lengths(lengths);
    TetVertices out;
    double minor = 1.0;
    for (int i = 0; i < 4; ++i) {
        double d = g.m[i][i];
        for (int k = 0; k < i; ++k) d -= out.v[i][k] * out.v[i][k];
        minor *= d;
        if (!(minor > kDetFloor)) {
            throw NotRealizableError("Gram leading minor of order " +
                                     std::to_string(i + 1) + " is " +
                                     std::to_string(minor) + ", not positive");
        }
        const double diag = std::sqrt(d);
        out.v[i][i] = diag;
        for (int j = i + 1; j < 4; ++j) {
            double s = g.m[j][i];
            for (int k = 0; k < i; ++k) s -= out.v[j][k] * out.v[i][k];
            out.v[j][i] = s / diag;
        }
    }
    return out;
}

TetLengths lengths_from_vertices(const TetVertices& verts) {
    TetLengths out;
    for (const EdgeId e : all_edges()) {
        const double d = dot4(verts.v[e.first()], verts.v[e.second()]);
        if (std::abs(d) >= 1.0 - kDetFloor) {
            throw DegenerateError("vertices " + e.name() +
                                  " coincident or antipodal (dot " +
                                  std::to_string(d) + ")");
        }
        out[e] = std::acos(d);
    }
    return out;
}

FaceNormals face_normals(const TetVertices& verts) {
    FaceNormals out;
    for (int k = 0; k < 4; ++k) {
        std::array<const Vec4*, 3> rows{};
        int r = 0;
        for (int i = 0; i < 4; ++i) {
            if (i != k) rows[r++] = &verts.v[i];
        }
        // Orthogonal complement of the three face vertices: generalized cross
        // product, component m = (-1)^m det of the 3x3 minor deleting column m.
        Vec4 n{};
        for (int m = 0; m < 4; ++m) {
            double sub[3][3];
            int cc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == m) continue;
                for (int rr = 0; rr < 3; ++rr) sub[rr][cc] = (*rows[rr])[c];
                ++cc;
            }
            const double det3 = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                                sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                                sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
            n[m] = (m % 2 == 0) ? det3 : -det3;
        }
        const double norm2 = dot4(n, n);
        // norm^2 equals the det of the face's 3x3 Gram.
        if (!(norm2 > kDetFloor)) {
            throw DegenerateError("face omitting vertex " + std::to_string(k) +
                                  " is degenerate");
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& x : n) x *= inv;
        if (dot4(n, verts.v[k]) > 0.0) {
            for (double& x : n) x = -x;
        }
        out.w[k] = n;
    }
    return out;
}

TetAngles dihedrals_from_vertices(const TetVertices& verts) {
    const FaceNormals normals = face_normals(verts);
    TetAngles out;
    for (const EdgeId e : all_edges()) {
        const auto [k, l] = complement(e.first(), e.second());
        out[e] = checked_acos(-dot4(normals.w[k], normals.w[l]), "face normal angle");
    }
    return out;
}

double LinkTriangle::side_for_pair(int p, int q) const {
    for (int k = 0; k < 3; ++k) {
        if (others[k] != p && others[k] != q) return sides[k];
    }
    throw DomainError("pair {" + std::to_string(p) + "," + std::to_string(q) +
                      "} does not index a side of this link");
}

double LinkTriangle::side_excluding(int other) const {
    for (int k = 0; k < 3; ++k) {
        if (others[k] == other) return sides[k];
    }
    throw DomainError("vertex " + std::to_string(other) + " not in this link");
}

LinkTriangle link_triangle(const TetLengths& lengths, int vertex) {
    if (vertex < 0 || vertex > 3) {
        throw DomainError("vertex index " + std::to_string(vertex) + " outside 0..3");
    }
    LinkTriangle out;
    out.vertex = vertex;
    int n = 0;
    for (int v = 0; v < 4; ++v) {
        if (v != vertex) out.others[n++] = v;
    }
    for (int k = 0; k < 3; ++k) {
        const auto [p, q] = complement(vertex, out.others[k]);
        // Inner angle at `vertex` in face (vertex, p, q).
        out.sides[k] = cosine_law_angle(lengths.between(p, q),
                                        lengths.between(vertex, p),
                                        lengths.between(vertex, q));
    }
    return out;
}

double link_interior_angle(const LinkTriangle& link, int other) {
    for (int k = 0; k < 3; ++k) {
        if (link.others[k] == other) {
            return cosine_law_angle(link.sides[k], link.sides[(k + 1) % 3],
                                    link.sides[(k + 2) % 3]);
        }
    }
    throw DomainError("vertex " + std::to_string(other) + " not in this link");
}

double dihedral_from_link(const TetLengths& lengths, int at_vertex, int other) {
    return link_interior_angle(link_triangle(lengths, at_vertex), other);
}

TetAngles dihedrals_from_lengths(const TetLengths& lengths) {
    TetAngles out;
    for (int v = 0; v < 4; ++v) {
        const LinkTriangle link = link_triangle(lengths, v);
        for (int other : link.others) {
            if (other < v) continue;  // each edge once, from its smaller endpoint
            out.values[EdgeId(v, other).index()] = link_interior_angle(link, other);
        }
    }
    return out;
}

double link_side_from_dihedrals(const TetAngles& angles, int p, int q, int r) {
    const int u = 6 - p - q - r;
    return dual_cosine_law_side(angles.between(p, u), angles.between(p, q),
                                angles.between(p, r));
}

double length_from_dihedrals(const TetAngles& angles, EdgeId edge) {
    const int i = edge.first();
    const int j = edge.second();
    const int m = edge.opposite().first();
    // Interior angles of the face (m, i, j), each a dual-law link side.
    const double at_m = link_side_from_dihedrals(angles, m, i, j);
    const double at_i = link_side_from_dihedrals(angles, i, m, j);
    const double at_j = link_side_from_dihedrals(angles, j, m, i);
    return dual_cosine_law_side(at_m, at_i, at_j);
}

TetLengths lengths_from_dihedrals(const TetAngles& angles) {
    TetLengths out;
    for (const EdgeId e : all_edges()) {
        try {
            out[e] = length_from_dihedrals(angles, e);
        } catch (const DomainError& err) {
            throw NotRealizableError("dihedral set does not close up at edge " +
                                     e.name() + ": " + err.what());
        }
    }
    return out;
}

Validity validate_lengths(const TetLengths& lengths) {
    for (double v : lengths.values) {
        if (!(v > 0.0 && v < std::numbers::pi)) {
            return Validity{ValidityCode::OutOfRange, v};
        }
    }
    const GramMatrix4 g = gram_from_lengths(lengths);
    std::array<Vec4, 4> chol{};
    double minor = 1.0;
    for (int i = 0; i < 4; ++i) {
        double d = g.m[i][i];
        for (int k = 0; k < i; ++k) d -= chol[i][k] * chol[i][k];
        minor *= d;
        if (!(minor > kDetFloor)) {
            return Validity{ValidityCode::Degenerate, minor};
        }
        const double diag = std::sqrt(d);
        chol[i][i] = diag;
        for (int j = i + 1; j < 4; ++j) {
            double s = g.m[j][i];
            for (int k = 0; k < i; ++k) s -= chol[j][k] * chol[i][k];
            chol[j][i] = s / diag;
        }
    }
    // Positive definiteness already implies valid faces; keep the explicit
    // face check so the returned detail names the collapsed triangle.
    for (int omit = 0; omit < 4; ++omit) {
        std::array<int, 3> f{};
        int n = 0;
        for (int v = 0; v < 4; ++v) {
            if (v != omit) f[n++] = v;
        }
        const TriangleSides sides{lengths.between(f[1], f[2]),
                                  lengths.between(f[0], f[2]),
                                  lengths.between(f[0], f[1])};
        const Validity face = validate_triangle(sides);
        if (!face.ok()) return Validity{ValidityCode::Degenerate, face.detail};
    }
    return Validity{ValidityCode::Valid, minor};
}

Validity validate_angles(const TetAngles& angles) {
    for (double v : angles.values) {
        if (!(v > 0.0 && v < std::numbers::pi)) {
            return Validity{ValidityCode::OutOfRange, v};
        }
    }
    TetLengths lengths;
    try {
        lengths = lengths_from_dihedrals(angles);
    } catch (const NotRealizableError&) {
        return Validity{ValidityCode::NotRealizable, 0.0};
    } catch (const DegenerateError&) {
        return Validity{ValidityCode::Degenerate, 0.0};
    }
    const Validity as_lengths = validate_lengths(lengths);
    if (!as_lengths.ok()) {
        return Validity{ValidityCode::Degenerate, as_lengths.detail};
    }
    TetAngles back;
    try {
        back = dihedrals_from_lengths(lengths);
    } catch (const Error&) {
        return Validity{ValidityCode::NotRealizable, 0.0};
    }
    double residual = 0.0;
    for (int k = 0; k < 6; ++k) {
        residual = std::max(residual, std::abs(back.values[k] - angles.values[k]));
    }
    if (residual >= kAngleRoundTripTol) {
        return Validity{ValidityCode::NotRealizable, residual};
    }
    return Validity{ValidityCode::Valid, residual};
}

}  // namespace sphtet
