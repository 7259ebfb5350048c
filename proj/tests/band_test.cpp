#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "pairlight/band.hpp"
#include "pairlight/errors.hpp"

namespace {

using namespace pairlight;

TEST(BandParams, Validation) {
    EXPECT_NO_THROW(BandParams{}.validate());
    EXPECT_THROW((BandParams{0.0, 0.0, 0.5, 0.0}.validate()), ValidationError);
    EXPECT_THROW((BandParams{1.0, 0.0, -0.1, 0.0}.validate()), ValidationError);
    EXPECT_THROW((BandParams{1.0, 0.0, 0.5, 2.0}.validate()), ValidationError);
    try {
        BandParams{1.0, 0.0, -1.0, 0.0}.validate();
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field(), "lambda");
    }
}

TEST(KineticEnergy, Examples) {
    const BandParams p{1.0, 0.0, 0.5, 0.0};
    EXPECT_DOUBLE_EQ(kinetic_energy({0.0, 0.0}, p), -4.0);
    EXPECT_DOUBLE_EQ(kinetic_energy({kPi, kPi}, p), 4.0);
}

TEST(SocVector, Examples) {
    const Vec2 rashba = soc_vector({kPi / 2, 0.0}, 0.0);
    EXPECT_NEAR(rashba.x, 0.0, 1e-15);
    EXPECT_NEAR(rashba.y, -1.0, 1e-15);
    const Vec2 dressel = soc_vector({kPi / 2, 0.0}, kPi / 2);
    EXPECT_NEAR(dressel.x, 1.0, 1e-15);
    EXPECT_NEAR(dressel.y, 0.0, 1e-15);
}

TEST(HelicalDispersion, Examples) {
    const BandParams p{1.0, 0.0, 0.5, 0.0};
    EXPECT_NEAR(helical_dispersion({kPi / 2, 0.0}, Helicity::plus, p), -1.5, 1e-15);
    EXPECT_NEAR(helical_dispersion({kPi / 2, 0.0}, Helicity::minus, p), -2.5, 1e-15);
}

TEST(HelicalDispersion, C4vCovarianceForPureCoupling) {
    const KGrid grid(64);
    for (double theta : {0.0, kPi / 2}) {
        const BandParams p{1.0, -0.3, 0.5, theta};
        for (const KPoint& k : grid) {
            for (Helicity xi : kHelicities) {
                const double e = helical_dispersion(k, xi, p);
                for (const KPoint& q : c4v_images(k)) ASSERT_NEAR(helical_dispersion(q, xi, p), e, 1e-12);
            }
        }
    }
}

TEST(HelicalDispersion, C2vCovarianceForEqualMixing) {
    const KGrid grid(64);
    const BandParams p{1.0, 0.2, 0.5, kPi / 4};
    for (const KPoint& k : grid) {
        for (Helicity xi : kHelicities) {
            const double e = helical_dispersion(k, xi, p);
            ASSERT_NEAR(helical_dispersion({k.ky, k.kx}, xi, p), e, 1e-12);
            ASSERT_NEAR(helical_dispersion({wrap_to_zone(-k.kx), wrap_to_zone(-k.ky)}, xi, p), e, 1e-12);
        }
    }
}

TEST(HelicalDispersion, LimitingForms) {
    const KGrid grid(48);
    const double lambda = 0.7;
    for (const KPoint& k : grid) {
        const double sx = std::sin(k.kx), sy = std::sin(k.ky);
        for (double theta : {0.0, kPi / 2}) {
            const BandParams p{1.0, 0.0, lambda, theta};
            ASSERT_NEAR(helical_dispersion(k, Helicity::plus, p) - kinetic_energy(k, p),
                        lambda * std::sqrt(sx * sx + sy * sy), 1e-12);
        }
        const BandParams p{1.0, 0.0, lambda, kPi / 4};
        ASSERT_NEAR(helical_dispersion(k, Helicity::plus, p) - kinetic_energy(k, p), lambda * std::abs(sx + sy),
                    1e-12);
    }
}

TEST(HelicalDispersion, NoSplittingWithoutCoupling) {
    const BandParams p{1.0, 0.1, 0.0, 0.3};
    for (const KPoint& k : KGrid(16))
        EXPECT_EQ(helical_dispersion(k, Helicity::plus, p), helical_dispersion(k, Helicity::minus, p));
}

void expect_symmetric_dos(double lambda) {
    const KGrid grid(512);
    const BandParams p{1.0, 0.0, lambda, 0.0};
    const auto mesh = dos_energy_mesh(p, grid, 0.02, 1001);
    for (std::size_t i = 0; i < mesh.size(); ++i) ASSERT_NEAR(mesh[i], -mesh[mesh.size() - 1 - i], 1e-12);
    const DosCurve curve = dos(p, grid, mesh, 0.02);
    for (std::size_t i = 0; i < mesh.size(); ++i)
        ASSERT_NEAR(curve.density[i], curve.density[mesh.size() - 1 - i], 1e-10) << mesh[i];
}

TEST(Dos, ParticleHoleSymmetricWithoutCoupling) { expect_symmetric_dos(0.0); }

TEST(Dos, ParticleHoleSymmetricWithRashba) { expect_symmetric_dos(0.5); }

TEST(Dos, NonNegativeAndNormalized) {
    const KGrid grid(256);
    for (double theta : {0.0, kPi / 4, kPi / 2}) {
        const BandParams p{1.0, 0.3, 0.5, theta};
        const DosCurve curve = dos(p, grid, dos_energy_mesh(p, grid, 0.02, 1024), 0.02);
        for (double d : curve.density) ASSERT_GE(d, 0.0);
        EXPECT_NEAR(curve.integral(), 2.0, 2e-2);
    }
}

TEST(Dos, VanHovePeakAtBandCentre) {
    const KGrid grid(256);
    const BandParams p{1.0, 0.0, 0.0, 0.0};
    const DosCurve curve = dos(p, grid, dos_energy_mesh(p, grid, 0.05, 801), 0.05);
    const auto peak = std::max_element(curve.density.begin(), curve.density.end()) - curve.density.begin();
    EXPECT_LT(std::abs(curve.energies[static_cast<std::size_t>(peak)]), 0.1);
}

TEST(Dos, RejectsBadMesh) {
    const KGrid grid(8);
    const BandParams p;
    EXPECT_THROW(dos(p, grid, {0.0, 1.0, 3.0}, 0.02), ValidationError);
    EXPECT_THROW(dos(p, grid, {0.0, 1.0}, 0.0), ValidationError);
}

TEST(Filling, EmptyAndFullBandLimits) {
    const KGrid grid(64);
    const double scale = 10.0 * (4.0 + 0.5);
    EXPECT_LT(filling({1.0, -scale, 0.5, 0.0}, grid, 0.01), 1e-6);
    EXPECT_GT(filling({1.0, scale, 0.5, 0.0}, grid, 0.01), 2.0 - 1e-6);
}

TEST(Filling, NondecreasingInMu) {
    const KGrid grid(64);
    double previous = -1.0;
    for (int i = 0; i <= 100; ++i) {
        const double mu = -5.0 + 0.1 * i;
        const double n = filling({1.0, mu, 0.5, kPi / 4}, grid, 0.05);
        ASSERT_GE(n, previous) << mu;
        previous = n;
    }
}

TEST(SolveMu, HalfFillingIsBandCentre) {
    const KGrid grid(128);
    for (double theta : {0.0, kPi / 4, kPi / 2})
        EXPECT_LT(std::abs(solve_mu(1.0, {1.0, 0.0, 0.5, theta}, grid, 0.01)), 1e-6);
}

TEST(SolveMu, ReturnedMuReproducesTarget) {
    const KGrid grid(128);
    const BandParams base{1.0, 0.0, 0.5, 0.0};
    for (double target : {0.2, 0.8, 1.5}) {
        BandParams p = base;
        p.mu = solve_mu(target, base, grid, 0.01);
        EXPECT_NEAR(filling(p, grid, 0.01), target, 1e-9);
    }
}

TEST(SolveMu, RejectsUnreachableTarget) {
    const KGrid grid(8);
    EXPECT_THROW(solve_mu(0.0, {}, grid, 0.01), ValidationError);
    EXPECT_THROW(solve_mu(2.5, {}, grid, 0.01), ValidationError);
}

}  // namespace
