#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include "voigt/diagnostics.hpp"
#include "voigt/models.hpp"

#include <numbers>

using namespace voigt;
using namespace voigt::test;

namespace {
constexpr double pi = std::numbers::pi;

DiagnosticSeries series_with_energy(std::initializer_list<double> values) {
    DiagnosticSeries s;
    double t = 0.0;
    for (double e : values) {
        DiagnosticRecord r;
        r.t = t;
        r.alpha_energy = e;
        s.push(r);
        t += 1.0;
    }
    return s;
}

}  // namespace

TEST_CASE("energies of the reference fields") {
    SpectralField tg = taylor_green(GridSpec::cube(32));
    CHECK(energy_l2(tg) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(grad_norm_sq(tg) == doctest::Approx(3.0 * pi * pi).epsilon(1e-14));

    SpectralField s = bbm_initial(GridSpec::line(64));
    CHECK(energy_l2(s) == doctest::Approx(pi).epsilon(1e-14));
    CHECK(grad_norm_sq(s) == doctest::Approx(pi).epsilon(1e-14));

    SpectralField zero(GridSpec::line(16), 1);
    CHECK(energy_l2(zero) == 0.0);
    CHECK(grad_norm_sq(zero) == 0.0);
}

TEST_CASE("alpha_energy includes the dissipation term only when viscous") {
    SpectralField s = bbm_initial(GridSpec::line(64));
    const double base = pi * (1.0 + 0.01);
    CHECK(alpha_energy(s, 0.1) == doctest::Approx(base).epsilon(1e-13));
    CHECK(alpha_energy(s, 0.1, 0.0, 0.5) == doctest::Approx(base).epsilon(1e-13));
    CHECK(alpha_energy(s, 0.1, 0.005, 0.5) == doctest::Approx(base + 0.5).epsilon(1e-13));
}

TEST_CASE("relative_energy_error follows the quoted formula") {
    CHECK(relative_energy_error(series_with_energy({2.5, 2.5, 2.5})) == 0.0);
    CHECK(relative_energy_error(series_with_energy({1.0, 1.0 + 1e-11, 1.0 - 2e-11})) ==
          doctest::Approx(2e-11).epsilon(1e-6));
    CHECK_THROWS_AS(relative_energy_error(DiagnosticSeries{}), std::invalid_argument);
    CHECK_THROWS_AS(relative_energy_error(series_with_energy({0.0, 1.0})),
                    std::invalid_argument);
}

TEST_CASE("spectrum puts all Taylor-Green energy in shell kappa = 2") {
    SpectralField tg = taylor_green(GridSpec::cube(32));
    const auto shells = spectrum(tg);
    REQUIRE(shells.size() >= 2);
    CHECK(shells[1] == doctest::Approx(0.25).epsilon(1e-14));  // |m| = sqrt(3)
    double off_shell = 0.0;
    for (std::size_t k = 0; k < shells.size(); ++k)
        if (k != 1) off_shell += shells[k];
    CHECK(off_shell == 0.0);
}

TEST_CASE("spectrum of the zero field is identically zero") {
    for (double v : spectrum(SpectralField(GridSpec::cube(16), 3))) CHECK(v == 0.0);
}

TEST_CASE("spectrum shells sum to the total energy") {
    for (int dim : {1, 3}) {
        GridSpec g = dim == 1 ? GridSpec::line(128) : GridSpec::cube(16);
        SpectralField f = random_field(g, dim == 1 ? 1 : 3, 23, false);
        const auto shells = spectrum(f);
        double sum = 0.0;
        for (double v : shells) sum += v;
        // The mean mode sits outside every shell; exclude it from the target.
        double mean_energy = 0.0;
        for (int c = 0; c < f.components(); ++c) mean_energy += std::norm(f.at(c, 0, 0, 0));
        mean_energy *= g.volume();
        CHECK(sum == doctest::Approx(energy_l2(f) - mean_energy).epsilon(1e-13));
    }
}

TEST_CASE("vorticity_max matches the analytic Taylor-Green curl") {
    GridSpec g = GridSpec::cube(64);
    SpectralField tg = taylor_green(g);
    // Closed-form curl of the initial data, evaluated on the same lattice.
    double analytic = 0.0;
    for (int i = 0; i < g.n[0]; ++i)
        for (int j = 0; j < g.n[1]; ++j)
            for (int k = 0; k < g.n[2]; ++k) {
                const double x = 2.0 * pi * g.coordinate(0, i);
                const double y = 2.0 * pi * g.coordinate(1, j);
                const double z = 2.0 * pi * g.coordinate(2, k);
                const double w0 = -2.0 * pi * std::cos(x) * std::sin(y) * std::sin(z);
                const double w1 = -2.0 * pi * std::sin(x) * std::cos(y) * std::sin(z);
                const double w2 = 4.0 * pi * std::sin(x) * std::sin(y) * std::cos(z);
                analytic = std::max(analytic, std::sqrt(w0 * w0 + w1 * w1 + w2 * w2));
            }
    CHECK(vorticity_max(tg) == doctest::Approx(analytic).epsilon(1e-12));
    CHECK(analytic == doctest::Approx(4.0 * pi).epsilon(1e-12));
}

TEST_CASE("vorticity_max vanishes for zero and irrotational fields") {
    GridSpec g = GridSpec::cube(16);
    CHECK(vorticity_max(SpectralField(g, 3)) == 0.0);

    SpectralField phi = random_field(g, 1, 5);
    SpectralField gradphi(g, 3);
    for (int a = 0; a < 3; ++a) {
        SpectralField d = derivative(phi, a);
        std::copy(d.component(0).begin(), d.component(0).end(), gradphi.component(a).begin());
    }
    CHECK(vorticity_max(gradphi) < 1e-12 * max_coeff_abs(gradphi));
    CHECK_THROWS_AS(vorticity_max(SpectralField(GridSpec::line(16), 1)), std::invalid_argument);
}

TEST_CASE("max_pointwise_speed of Taylor-Green is 1") {
    CHECK(max_pointwise_speed(taylor_green(GridSpec::cube(32))) ==
          doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("energy plus scaled enstrophy varies per term but not in sum") {
    // Fabricated exchange rows: the invariant constrains the sum only.
    DiagnosticSeries s;
    for (int i = 0; i < 4; ++i) {
        DiagnosticRecord r;
        r.t = i;
        r.l2_energy = 1.0 - 0.1 * i;
        r.scaled_enstrophy = 0.1 * i;
        r.alpha_energy = r.l2_energy + r.scaled_enstrophy;
        s.push(r);
    }
    CHECK(relative_energy_error(s) < 1e-15);
}
