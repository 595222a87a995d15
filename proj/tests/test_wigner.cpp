#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "sphtet/sampling.hpp"
#include "sphtet/wigner.hpp"

using namespace sphtet;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2.0;
constexpr double kThirdPi = kPi / 3.0;
constexpr double kRegularDihedral = 1.3181160716528177;  // acos(1/4)

// sin^2(pi/3)/sqrt(5/16) = (3/4)/(sqrt(5)/4) = 3/sqrt(5); verified against the
// central difference of the length->dihedral map before freezing.
constexpr double kRegularWigner = 1.3416407864998738;

std::vector<TetLengths> population(std::uint64_t seed, std::size_t count,
                                   double margin) {
    SampleConfig config;
    config.seed = seed;
    config.count = count;
    config.min_margin = margin;
    return sample_tetrahedra(config);
}

}  // namespace

TEST_CASE("wigner derivative golden values") {
    CHECK(wigner_derivative(TetLengths::uniform(kHalfPi), EdgeId(0, 1)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    for (const EdgeId e : all_edges()) {
        CHECK(wigner_derivative(TetLengths::uniform(kThirdPi), e) ==
              doctest::Approx(kRegularWigner).epsilon(1e-14));
    }
    TetLengths family = TetLengths::uniform(kHalfPi);
    family[EdgeId(2, 3)] = kThirdPi;
    CHECK(wigner_derivative(family, EdgeId(0, 1)) == doctest::Approx(1.0).epsilon(1e-12));

    TetLengths flat = TetLengths::uniform(kHalfPi);
    flat[EdgeId(0, 2)] = 0.8;
    flat[EdgeId(0, 3)] = 0.8;
    flat[EdgeId(2, 3)] = 1.6;
    CHECK_THROWS_AS(wigner_derivative(flat, EdgeId(0, 1)), DegenerateError);
}

TEST_CASE("link route equals the gram route") {
    CHECK(wigner_via_links(TetLengths::uniform(kHalfPi), EdgeId(0, 1)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(wigner_via_links(TetLengths::uniform(kThirdPi), EdgeId(0, 1)) ==
          doctest::Approx(kRegularWigner).epsilon(1e-13));

    for (const auto& lengths : population(101, 100, 1e-2)) {
        for (const EdgeId e : all_edges()) {
            const double gram_route = wigner_derivative(lengths, e);
            CHECK(wigner_via_links(lengths, e) ==
                  doctest::Approx(gram_route).epsilon(1e-10));
        }
    }
    // Looser near the floor, where conditioning dominates.
    for (const auto& lengths : population(111, 100, 1e-6)) {
        for (const EdgeId e : all_edges()) {
            CHECK(wigner_via_links(lengths, e) ==
                  doctest::Approx(wigner_derivative(lengths, e)).epsilon(1e-8));
        }
    }
}

TEST_CASE("inverse wigner derivative golden values") {
    CHECK(inverse_wigner_derivative(TetAngles::uniform(kHalfPi), EdgeId(0, 1)) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(inverse_wigner_derivative(TetAngles::uniform(kRegularDihedral), EdgeId(0, 1)) ==
          doctest::Approx(kRegularWigner).epsilon(1e-12));
    TetAngles family = TetAngles::uniform(kHalfPi);
    family[EdgeId(0, 1)] = 0.9;
    CHECK(inverse_wigner_derivative(family, EdgeId(0, 1)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(inverse_wigner_derivative(TetAngles::uniform(1.0), EdgeId(0, 1)),
                    NotRealizableError);
}

TEST_CASE("inverse link route equals the converted gram route") {
    CHECK(inverse_via_links(TetAngles::uniform(kHalfPi), EdgeId(0, 1)) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(inverse_via_links(TetAngles::uniform(kRegularDihedral), EdgeId(0, 1)) ==
          doctest::Approx(kRegularWigner).epsilon(1e-12));
    for (const auto& lengths : population(121, 100, 1e-2)) {
        const TetAngles angles = dihedrals_from_lengths(lengths);
        for (const EdgeId e : all_edges()) {
            CHECK(inverse_via_links(angles, e) ==
                  doctest::Approx(inverse_wigner_derivative(angles, e)).epsilon(1e-10));
        }
    }
}

TEST_CASE("fd_partial basics") {
    const Map6 square = [](const Vec6& x) {
        Vec6 out;
        for (int k = 0; k < 6; ++k) out[k] = x[k] * x[k];
        return out;
    };
    const Vec6 ones{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
    for (int k = 0; k < 6; ++k) {
        CHECK(fd_partial(square, ones, k, k, 1e-5) == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(fd_partial(square, ones, k, (k + 1) % 6, 1e-5) ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(fd_partial(square, ones, 0, 0, 0.0), DomainError);
    CHECK_THROWS_AS(fd_partial(square, ones, 7, 0, 1e-5), DomainError);
}

TEST_CASE("fd_partial matches the closed form on the regular tetrahedron") {
    const TetLengths regular = TetLengths::uniform(kThirdPi);
    const double fd = fd_partial(&lengths_to_dihedrals, regular.values,
                                 EdgeId(0, 1).index(), EdgeId(2, 3).index(), 1e-5);
    CHECK(fd == doctest::Approx(kRegularWigner).epsilon(1e-6));

    // Octant point: the Jacobian is the opposite-pair permutation, so a
    // non-opposite entry vanishes.
    const double off = fd_partial(&lengths_to_dihedrals,
                                  TetLengths::uniform(kHalfPi).values,
                                  EdgeId(0, 1).index(), EdgeId(0, 2).index(), 1e-5);
    CHECK(std::abs(off) < 1e-8);
}

TEST_CASE("fd_partial wraps domain exits as StepTooLarge") {
    TetLengths thin = TetLengths::uniform(kHalfPi);
    thin[EdgeId(2, 3)] = 0.05;
    CHECK_THROWS_AS(fd_partial(&lengths_to_dihedrals, thin.values,
                               EdgeId(0, 1).index(), EdgeId(2, 3).index(), 0.1),
                    StepTooLargeError);
}

TEST_CASE("analytic derivatives match central differences on samples") {
    for (const auto& lengths : population(131, 60, 1e-2)) {
        const TetAngles angles = dihedrals_from_lengths(lengths);
        for (const EdgeId e : all_edges()) {
            const double w = wigner_derivative(lengths, e);
            const double fd_w = fd_partial(&lengths_to_dihedrals, lengths.values,
                                           e.index(), e.opposite().index(), 1e-5);
            CHECK(fd_w == doctest::Approx(w).epsilon(1e-5));
            const double fd_iw = fd_partial(&dihedrals_to_lengths, angles.values,
                                            e.opposite().index(), e.index(), 1e-5);
            CHECK(fd_iw == doctest::Approx(w).epsilon(1e-5));
            // The two finite differences probe different variable sets yet
            // agree with each other.
            CHECK(std::abs(fd_w - fd_iw) <= 2e-5 * std::abs(w));
        }
    }
}

TEST_CASE("lengths-fixed inversion gives the reciprocal derivative") {
    for (const auto& lengths : population(141, 40, 1e-2)) {
        for (const EdgeId e : all_edges()) {
            const double expected = std::sqrt(gram_det(lengths)) /
                                    (std::sin(lengths[e]) * std::sin(lengths[e.opposite()]));
            const double fd = fd_inverse_lengths_fixed(lengths, e, 1e-5);
            CHECK(fd == doctest::Approx(expected).epsilon(1e-5));
            // ... which is the reciprocal of the dihedrals-fixed derivative.
            CHECK(fd * wigner_derivative(lengths, e) == doctest::Approx(1.0).epsilon(1e-5));
        }
    }
}

TEST_CASE("jacobians") {
    // Octant point: permutation matrix on opposite pairs.
    const Jacobian6 octant = jacobian_theta_of_l(TetLengths::uniform(kHalfPi), 1e-5);
    for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) {
            const double expected = (c == 5 - r) ? 1.0 : 0.0;
            CHECK(std::abs(octant.entries[r][c] - expected) < 1e-8);
        }
    }
    CHECK(octant.kind == JacobianKind::ThetaByLength);
    CHECK(octant.step == 1e-5);

    const Jacobian6 regular = jacobian_theta_of_l(TetLengths::uniform(kThirdPi), 1e-5);
    CHECK(regular.entries[EdgeId(0, 1).index()][EdgeId(2, 3).index()] ==
          doctest::Approx(kRegularWigner).epsilon(1e-6));

    for (const auto& lengths : population(151, 20, 1e-2)) {
        const TetAngles angles = dihedrals_from_lengths(lengths);
        const Jacobian6 fwd = jacobian_theta_of_l(lengths, 1e-5);
        const Jacobian6 inv = jacobian_l_of_theta(angles, 1e-5);
        CHECK(inv.kind == JacobianKind::LengthByTheta);
        for (int r = 0; r < 6; ++r) {
            for (int c = 0; c < 6; ++c) {
                double acc = 0.0;
                for (int m = 0; m < 6; ++m) acc += fwd.entries[r][m] * inv.entries[m][c];
                CHECK(std::abs(acc - (r == c ? 1.0 : 0.0)) < 1e-4);
            }
        }
        for (const EdgeId e : all_edges()) {
            const double w = wigner_derivative(lengths, e);
            CHECK(std::abs(fwd.entries[e.index()][e.opposite().index()] - w) <=
                  1e-5 * std::abs(w));
            CHECK(std::abs(inv.entries[e.opposite().index()][e.index()] - w) <=
                  1e-5 * std::abs(w));
        }
    }

    TetLengths thin = TetLengths::uniform(kHalfPi);
    thin[EdgeId(2, 3)] = 0.05;
    CHECK_THROWS_AS(jacobian_theta_of_l(thin, 0.1), NotRealizableError);
}

TEST_CASE("reciprocity report") {
    const DerivativeReport octant =
        reciprocity_report(TetLengths::uniform(kHalfPi), EdgeId(0, 1), 1e-5);
    CHECK(octant.edge == EdgeId(0, 1));
    CHECK(octant.opposite == EdgeId(2, 3));
    CHECK(octant.analytic_wigner == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(octant.analytic_inverse == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(octant.fd_wigner == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(octant.fd_inverse == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(octant.gram_det == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(octant.remark_reciprocal == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(octant.residual_wigner < 1e-8);
    CHECK(octant.residual_inverse < 1e-8);

    const DerivativeReport regular =
        reciprocity_report(TetLengths::uniform(kThirdPi), EdgeId(0, 2), 1e-5);
    CHECK(regular.analytic_wigner == doctest::Approx(kRegularWigner).epsilon(1e-13));
    CHECK(regular.fd_wigner == doctest::Approx(kRegularWigner).epsilon(1e-5));
    CHECK(regular.fd_inverse == doctest::Approx(kRegularWigner).epsilon(1e-5));
    CHECK(regular.residual_wigner < 1e-5);
    CHECK(regular.residual_inverse < 1e-5);

    for (const auto& lengths : population(161, 30, 1e-2)) {
        for (const EdgeId e : all_edges()) {
            const DerivativeReport r = reciprocity_report(lengths, e, 1e-5);
            CHECK(r.analytic_wigner == r.analytic_inverse);
            CHECK(r.analytic_wigner * r.remark_reciprocal ==
                  doctest::Approx(1.0).epsilon(1e-12));
            CHECK(r.residual_wigner <= 1e-5 * std::abs(r.analytic_wigner));
            CHECK(r.residual_inverse <= 1e-5 * std::abs(r.analytic_inverse));
        }
    }
}
