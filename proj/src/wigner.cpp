#include "sphtet/wigner.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sphtet {

namespace {

double checked_sin(double x, const char* what) {
    const double s = std::sin(x);
    if (s < kSinFloor) {
        throw DegenerateError(std::string(what) + " has sine " + std::to_string(s) +
                              " below floor");
    }
    return s;
}

}  // namespace

double wigner_derivative(const TetLengths& lengths, EdgeId edge) {
    const double det = gram_det(lengths);
    if (!(det > kDetFloor)) {
        throw DegenerateError("Gram determinant " + std::to_string(det) +
                              " below floor");
    }
    return std::sin(lengths[edge]) * std::sin(lengths[edge.opposite()]) /
           std::sqrt(det);
}

double wigner_via_links(const TetLengths& lengths, EdgeId edge) {
    const int i = edge.first();
    const int j = edge.second();
    const EdgeId opp = edge.opposite();
    const int k = opp.first();
    const int l = opp.second();

    const LinkTriangle link = link_triangle(lengths, i);
    const double dihedral = link_interior_angle(link, j);
    const double alpha = link.side_for_pair(j, k);
    const double beta = link.side_for_pair(j, l);

    const double numerator = std::sin(lengths[opp]);
    const double denom = checked_sin(dihedral, "dihedral at edge") *
                         checked_sin(alpha, "link side") *
                         checked_sin(beta, "link side") *
                         checked_sin(lengths.between(i, k), "edge length") *
                         checked_sin(lengths.between(i, l), "edge length");
    return numerator / denom;
}

double inverse_wigner_derivative(const TetAngles& angles, EdgeId edge) {
    const TetLengths lengths = lengths_from_dihedrals(angles);
    return wigner_derivative(lengths, edge);
}

double inverse_via_links(const TetAngles& angles, EdgeId edge) {
    const int i = edge.first();
    const EdgeId opp = edge.opposite();
    const int k = opp.first();
    const int l = opp.second();

    const double opp_length = length_from_dihedrals(angles, opp);
    // Interior angles of face (i, k, l) at the opposite edge's endpoints.
    const double kappa = link_side_from_dihedrals(angles, k, i, l);
    const double sigma = link_side_from_dihedrals(angles, l, i, k);

    const double numerator = std::sin(angles[edge]);
    const double denom = checked_sin(opp_length, "opposite edge length") *
                         checked_sin(kappa, "face angle") *
                         checked_sin(sigma, "face angle") *
                         checked_sin(angles.between(i, k), "dihedral") *
                         checked_sin(angles.between(i, l), "dihedral");
    return numerator / denom;
}

double fd_partial(const Map6& map, const Vec6& at, int out_index, int in_index,
                  double step) {
    if (!(step > 0.0)) {
        throw DomainError("fd step must be positive");
    }
    if (out_index < 0 || out_index > 5 || in_index < 0 || in_index > 5) {
        throw DomainError("fd component index outside 0..5");
    }
    Vec6 plus = at;
    Vec6 minus = at;
    plus[in_index] += step;
    minus[in_index] -= step;
    Vec6 fp, fm;
    try {
        fp = map(plus);
        fm = map(minus);
    } catch (const Error& e) {
        throw StepTooLargeError("perturbed evaluation failed at step " +
                                std::to_string(step) + ": " + e.what());
    }
    return (fp[out_index] - fm[out_index]) / (2.0 * step);
}

Vec6 lengths_to_dihedrals(const Vec6& lengths) {
    return dihedrals_from_lengths(TetLengths{lengths}).values;
}

Vec6 dihedrals_to_lengths(const Vec6& angles) {
    return lengths_from_dihedrals(TetAngles{angles}).values;
}

namespace {

Jacobian6 fd_jacobian(const Vec6& at, double step, JacobianKind kind,
                      Vec6 (*map)(const Vec6&)) {
    if (!(step > 0.0)) {
        throw DomainError("fd step must be positive");
    }
    Jacobian6 jac;
    jac.kind = kind;
    jac.step = step;
    for (int col = 0; col < 6; ++col) {
        Vec6 plus = at;
        Vec6 minus = at;
        plus[col] += step;
        minus[col] -= step;
        Vec6 fp, fm;
        try {
            fp = map(plus);
            fm = map(minus);
        } catch (const Error& e) {
            throw NotRealizableError("Jacobian perturbation of component " +
                                     std::to_string(col) +
                                     " exits the valid domain: " + e.what());
        }
        for (int row = 0; row < 6; ++row) {
            jac.entries[row][col] = (fp[row] - fm[row]) / (2.0 * step);
        }
    }
    return jac;
}

}  // namespace

Jacobian6 jacobian_theta_of_l(const TetLengths& lengths, double step) {
    return fd_jacobian(lengths.values, step, JacobianKind::ThetaByLength,
                       &lengths_to_dihedrals);
}

Jacobian6 jacobian_l_of_theta(const TetAngles& angles, double step) {
    return fd_jacobian(angles.values, step, JacobianKind::LengthByTheta,
                       &dihedrals_to_lengths);
}

double fd_inverse_lengths_fixed(const TetLengths& lengths, EdgeId edge,
                                double step) {
    if (!(step > 0.0)) {
        throw DomainError("fd step must be positive");
    }
    const int opp_index = edge.opposite().index();
    const auto theta_of = [&](double x) {
        TetLengths moved = lengths;
        moved.values[opp_index] = x;
        return dihedral_from_link(moved, edge.first(), edge.second());
    };

    const double x0 = lengths.values[opp_index];
    double theta0;
    try {
        theta0 = theta_of(x0);
    } catch (const Error& e) {
        throw StepTooLargeError(std::string("base evaluation failed: ") + e.what());
    }

    // Monotone in the opposite length (the derivative is strictly positive),
    // so a plain secant iteration converges quadratically-ish.
    const auto invert = [&](double target) {
        double a = x0;
        double fa = theta0 - target;
        double b = x0 + (target > theta0 ? step : -step);
        try {
            for (int it = 0; it < 80; ++it) {
                const double fb = theta_of(b) - target;
                if (std::abs(fb) < 1e-14) return b;
                const double next = b - fb * (b - a) / (fb - fa);
                a = b;
                fa = fb;
                b = next;
            }
        } catch (const Error& e) {
            throw StepTooLargeError(std::string("secant inversion left the valid domain: ") +
                                    e.what());
        }
        throw StepTooLargeError("secant inversion did not converge");
    };

    const double x_plus = invert(theta0 + step);
    const double x_minus = invert(theta0 - step);
    return (x_plus - x_minus) / (2.0 * step);
}

DerivativeReport reciprocity_report(const TetLengths& lengths, EdgeId edge,
                                    double step) {
    DerivativeReport report{edge, edge.opposite()};
    report.fd_step = step;
    report.gram_det = gram_det(lengths);
    report.analytic_wigner = wigner_derivative(lengths, edge);
    // Same closed form on the same Gram data; the reciprocity theorem is what
    // makes this assignment correct. The finite differences below check each
    // side independently.
    report.analytic_inverse = report.analytic_wigner;

    const TetAngles angles = dihedrals_from_lengths(lengths);
    report.fd_wigner = fd_partial(&lengths_to_dihedrals, lengths.values,
                                  edge.index(), report.opposite.index(), step);
    report.fd_inverse = fd_partial(&dihedrals_to_lengths, angles.values,
                                   report.opposite.index(), edge.index(), step);

    const double sl = std::sin(lengths[edge]);
    const double slp = std::sin(lengths[report.opposite]);
    report.remark_reciprocal = std::sqrt(report.gram_det) / (sl * slp);

    report.residual_wigner = std::abs(report.analytic_wigner - report.fd_wigner);
    report.residual_inverse = std::abs(report.analytic_inverse - report.fd_inverse);
    return report;
}

}  // namespace sphtet
