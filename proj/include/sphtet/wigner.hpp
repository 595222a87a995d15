#pragma once

#include <array>
#include <functional>

#include "sphtet/tetra.hpp"

namespace sphtet {

using Vec6 = std::array<double, 6>;
using Map6 = std::function<Vec6(const Vec6&)>;

// Analytic and finite-difference derivatives for one opposite edge pair.
// analytic_wigner is d theta_edge / d l_opposite with the other five lengths
// fixed; analytic_inverse is d l_opposite / d theta_edge with the other five
// dihedrals fixed. Both equal sin(l_edge) sin(l_opposite) / sqrt(det G), so
// the two analytic fields are identical by construction; the finite
// differences probe them along genuinely different variable sets.
// remark_reciprocal = sqrt(det G) / (sin l sin l') is the derivative of the
// *lengths-fixed* one-dimensional inversion, the reciprocal of the other two.
struct DerivativeReport {
    EdgeId edge;
    EdgeId opposite;
    double analytic_wigner = 0.0;
    double analytic_inverse = 0.0;
    double fd_wigner = 0.0;
    double fd_inverse = 0.0;
    double gram_det = 0.0;
    double remark_reciprocal = 0.0;
    double residual_wigner = 0.0;   // |analytic_wigner - fd_wigner|
    double residual_inverse = 0.0;  // |analytic_inverse - fd_inverse|
    double fd_step = kDefaultFdStep;
};

enum class JacobianKind { ThetaByLength, LengthByTheta };

// entries[out][in]; rows and columns in canonical EdgeId order.
struct Jacobian6 {
    std::array<std::array<double, 6>, 6> entries{};
    JacobianKind kind = JacobianKind::ThetaByLength;
    double step = kDefaultFdStep;
};

// d theta_edge / d l_opposite = sin(l_edge) sin(l_opposite) / sqrt(det G).
double wigner_derivative(const TetLengths& lengths, EdgeId edge);

// Same derivative assembled through the link of the edge's smaller endpoint:
// sin(l_opp) / (sin theta_edge * sin alpha * sin beta * sin l_ik * sin l_il)
// with alpha, beta the link sides adjacent to the edge's interior angle and
// k, l the opposite edge's endpoints.
double wigner_via_links(const TetLengths& lengths, EdgeId edge);

// d l_opposite / d theta_edge with the other dihedrals fixed; converts via
// lengths_from_dihedrals and evaluates the same closed form.
double inverse_wigner_derivative(const TetAngles& angles, EdgeId edge);

// The dual-route assembly: sin theta_edge / (sin l_opp * sin kappa *
// sin sigma * sin theta_ik * sin theta_il), kappa and sigma the interior
// angles of the face spanning the opposite edge at its two endpoints.
double inverse_via_links(const TetAngles& angles, EdgeId edge);

// Central difference (map(at + step e_in) - map(at - step e_in))[out] / 2 step.
// Wraps evaluation failures in StepTooLargeError.
double fd_partial(const Map6& map, const Vec6& at, int out_index, int in_index,
                  double step);

// Raw-array adapters of the conversion maps, for fd_partial and the Jacobians.
Vec6 lengths_to_dihedrals(const Vec6& lengths);
Vec6 dihedrals_to_lengths(const Vec6& angles);

// All 36 central differences of the respective conversion map. Throws
// NotRealizable when a perturbed evaluation exits the valid domain.
Jacobian6 jacobian_theta_of_l(const TetLengths& lengths, double step = kDefaultFdStep);
Jacobian6 jacobian_l_of_theta(const TetAngles& angles, double step = kDefaultFdStep);

// d l_opposite / d theta_edge with the five OTHER LENGTHS held fixed: secant
// inversion of the scalar map l_opposite -> theta_edge, differenced centrally
// in theta. Equals sqrt(det G) / (sin l sin l'), the reciprocal of
// wigner_derivative.
double fd_inverse_lengths_fixed(const TetLengths& lengths, EdgeId edge,
                                double step = kDefaultFdStep);

DerivativeReport reciprocity_report(const TetLengths& lengths, EdgeId edge,
                                    double step = kDefaultFdStep);

}  // namespace sphtet
