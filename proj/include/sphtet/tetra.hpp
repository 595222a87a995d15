#pragma once

#include <array>

#include "sphtet/core.hpp"
#include "sphtet/edge.hpp"
#include "sphtet/sphtrig.hpp"

namespace sphtet {

using Vec4 = std::array<double, 4>;

// Six edge lengths (radians, each in (0, pi)) in canonical EdgeId order
// [l01, l02, l03, l12, l13, l23].
struct TetLengths {
    std::array<double, 6> values{};

    double operator[](EdgeId e) const { return values[e.index()]; }
    double& operator[](EdgeId e) { return values[e.index()]; }
    double between(int i, int j) const { return values[EdgeId(i, j).index()]; }

    static TetLengths uniform(double v) {
        return TetLengths{{v, v, v, v, v, v}};
    }
};

// Six interior dihedral angles (radians, each in (0, pi)) in canonical
// EdgeId order [theta01, theta02, theta03, theta12, theta13, theta23].
struct TetAngles {
    std::array<double, 6> values{};

    double operator[](EdgeId e) const { return values[e.index()]; }
    double& operator[](EdgeId e) { return values[e.index()]; }
    double between(int i, int j) const { return values[EdgeId(i, j).index()]; }

    static TetAngles uniform(double v) {
        return TetAngles{{v, v, v, v, v, v}};
    }
};

// 4x4 matrix of cosines of pairwise arc distances, unit diagonal. Positive
// definite exactly when the lengths are realizable on the 3-sphere.
struct GramMatrix4 {
    std::array<std::array<double, 4>, 4> m{};

    // Gaussian elimination with partial pivoting (the cofactor route lives in
    // the test oracles).
    double det() const;
};

// Four unit 4-vectors, rows v[0..3].
struct TetVertices {
    std::array<Vec4, 4> v{};
};

// Outward unit normals, w[k] orthogonal to the face omitting vertex k and
// pointing away from it (w[k] . v[k] < 0).
struct FaceNormals {
    std::array<Vec4, 4> w{};
};

// The link of `vertex`: the spherical triangle whose sides are the inner
// (face) angles at that vertex. others[k] lists the remaining vertices in
// ascending order; sides[k] is the side subtended by the pair of remaining
// vertices that excludes others[k] (i.e. the side of the link not touching
// the link vertex in direction others[k]). The interior angle of the link at
// that vertex is the dihedral angle of edge {vertex, others[k]}.
struct LinkTriangle {
    int vertex = 0;
    std::array<int, 3> others{};
    std::array<double, 3> sides{};

    // Side subtended by the vertex pair {p, q} (both != vertex).
    double side_for_pair(int p, int q) const;
    // sides[k] with others[k] == other.
    double side_excluding(int other) const;
    TriangleSides as_sides() const {
        return TriangleSides{sides[0], sides[1], sides[2]};
    }
};

GramMatrix4 gram_from_lengths(const TetLengths& lengths);
double gram_det(const TetLengths& lengths);

// Canonical realization: rows of the Cholesky factor of the Gram matrix, so
// v0 = e0, v1 in span(e0, e1), v2 in span(e0, e1, e2). Throws NotRealizable
// when a leading minor falls below kDetFloor.
TetVertices vertices_from_lengths(const TetLengths& lengths);

// l_ij = arccos(v_i . v_j), principal branch. DegenerateError when a pair is
// (anti)podal within kDetFloor.
TetLengths lengths_from_vertices(const TetVertices& verts);

FaceNormals face_normals(const TetVertices& verts);

// Dihedrals from outward face normals: cos theta_ij = -(w_k . w_l) with
// {k, l} the complementary vertex pair.
TetAngles dihedrals_from_vertices(const TetVertices& verts);

LinkTriangle link_triangle(const TetLengths& lengths, int vertex);

// theta_{at,other} as the interior angle of Lk(at) at the link vertex toward
// `other` (the angle opposite the side subtended by the complementary pair).
double dihedral_from_link(const TetLengths& lengths, int at_vertex, int other);

// Dihedral of edge {vertex, other} read off an already-built link.
double link_interior_angle(const LinkTriangle& link, int other);

TetAngles dihedrals_from_lengths(const TetLengths& lengths);

// Side {q, r} of Lk(p) recovered from the dihedral angles by the dual cosine
// law: cos side = (cos theta_pu + cos theta_pq cos theta_pr) /
// (sin theta_pq sin theta_pr), u the remaining vertex.
double link_side_from_dihedrals(const TetAngles& angles, int p, int q, int r);

// Closed-form edge length from the six dihedrals: dual cosine law in the
// face (m, i, j) with m the smaller vertex of the complementary pair, whose
// interior angles are themselves dual-law link sides. No iteration.
double length_from_dihedrals(const TetAngles& angles, EdgeId edge);

TetLengths lengths_from_dihedrals(const TetAngles& angles);

// Valid | OutOfRange | Degenerate: range check, positive-definiteness of the
// Gram matrix (every leading minor > kDetFloor), then the four face triangles.
Validity validate_lengths(const TetLengths& lengths);

// Valid | OutOfRange | Degenerate | NotRealizable: range check, conversion to
// lengths must succeed and validate, and the dihedral round trip must return
// within kAngleRoundTripTol.
Validity validate_angles(const TetAngles& angles);

inline constexpr double kAngleRoundTripTol = 1e-8;

}  // namespace sphtet
