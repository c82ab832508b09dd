#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "wsflow/flows.hpp"
#include "wsflow/kernels.hpp"
#include "wsflow/rng.hpp"

using namespace wsflow;

TEST_SUITE("flows") {

TEST_CASE("interaction flow explodes into the rescaled equilibrium measure") {
    const auto d1 = equilibrium_unit(1, 1.0);
    for (double t : {0.0, 0.5, 1.0, 2.0}) {
        const auto p = interaction_flow_eval(d1, t);
        // d=1, r=1: gamma(t) = U[-t, t], support radius alpha_t * sqrt(3) = t
        CHECK(p.scale * p.base.scale == doctest::Approx(t).epsilon(1e-6));
    }

    const auto d3 = equilibrium_unit(3, 1.0);
    const auto p3 = interaction_flow_eval(d3, 3.0);
    CHECK(p3.scale == doctest::Approx(2.0).epsilon(1e-12));  // t R_3 = 3 * 2/3

    CHECK(interaction_flow_eval(d3, 0.0).scale == 0.0);

    const auto slow = equilibrium_unit(1, 0.5);
    CHECK_THROWS_AS(interaction_flow_eval(slow, 0.0), std::invalid_argument);
    CHECK(interaction_flow_eval(slow, 0.5).scale > 0.0);
}

TEST_CASE("interaction flow has constant speed") {
    for (int d : {1, 2, 3}) {
        const auto sol = equilibrium_unit(d, 1.0);
        const double m2 = sol.eta_star.second_moment();
        const double slope = -sol.energy * std::sqrt(m2);
        for (double t1 : {0.2, 1.0}) {
            for (double t2 : {1.5, 3.0}) {
                const double w2 = w2_scaling_family(interaction_flow_eval(sol, t1),
                                                    interaction_flow_eval(sol, t2));
                CHECK(w2 == doctest::Approx(slope * std::abs(t2 - t1)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("delayed flow family") {
    const auto sol = equilibrium_unit(2, 1.5);
    const auto before = delayed_interaction_flow_eval(sol, 1.0, 0.5);
    CHECK(before.scale == 0.0);
    const auto after = delayed_interaction_flow_eval(sol, 1.0, 2.5);
    CHECK(after.scale == doctest::Approx(interaction_flow_eval(sol, 1.5).scale));
    CHECK_THROWS_AS(delayed_interaction_flow_eval(equilibrium_unit(1, 1.0), 1.0, 0.5),
                    std::invalid_argument);
}

TEST_CASE("one-particle flow follows the closed-form curve") {
    const std::vector<double> p{0.0, 0.0};
    const std::vector<double> q{1.0, 0.0};
    const double r = 1.5;
    CHECK(one_particle_absorption_time(1.0, r) == doctest::Approx(4.0 / 3.0));

    CHECK(one_particle_eval(p, q, r, 0.0).position[0] == doctest::Approx(0.0));
    for (double t : {0.2, 0.6, 1.0, 1.3}) {
        const auto point = one_particle_eval(p, q, r, t);
        const double expected = 1.0 - std::pow(1.0 - 0.75 * t, 2.0);
        CHECK(point.position[0] == doctest::Approx(expected).epsilon(1e-12));
        CHECK_FALSE(point.reached);
    }
    const auto at_star = one_particle_eval(p, q, r, 4.0 / 3.0);
    CHECK(at_star.position[0] == doctest::Approx(1.0));
    CHECK(at_star.reached);

    CHECK_THROWS_AS(one_particle_eval(p, q, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(one_particle_eval(p, p, r, 0.1), std::invalid_argument);
}

TEST_CASE("one-particle flow solves the gradient ODE") {
    const std::vector<double> p{-1.0, 0.0};
    const std::vector<double> q{1.0, 0.0};
    const double r = 1.5;
    const double t_star = one_particle_absorption_time(2.0, r);
    for (double h : {1e-3, 1e-4}) {
        for (double t : {0.1 * t_star, 0.4 * t_star, 0.7 * t_star}) {
            const auto x0 = one_particle_eval(p, q, r, t).position;
            const auto x1 = one_particle_eval(p, q, r, t + h).position;
            // velocity should match -grad V = r (q - x) |q - x|^(r-2)
            const double dist = std::abs(q[0] - x0[0]);
            const double rhs = r * (q[0] - x0[0]) * std::pow(dist, r - 2.0);
            CHECK(std::abs((x1[0] - x0[0]) / h - rhs) <= 20.0 * h * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("explicit 1D discrepancy flow") {
    const std::size_t n = 1024;
    const auto q0 = quantile_of_atomic(DiscreteMeasure::dirac({-1.0}), n);

    SUBCASE("t = 1/4 gives U[-1, -1/2]") {
        const auto qt = disc1d_flow_eval(q0, 0.0, 0.25);
        for (std::size_t k = 0; k < n; k += 97) {
            const double s = QuantileGrid::node(k, n);
            CHECK(qt[k] == doctest::Approx(-1.0 + 0.5 * s).epsilon(1e-12));
        }
    }
    SUBCASE("t = 1 gives the half-absorbed measure") {
        const auto qt = disc1d_flow_eval(q0, 0.0, 1.0);
        for (std::size_t k = 0; k < n; k += 61) {
            const double s = QuantileGrid::node(k, n);
            CHECK(qt[k] == doctest::Approx(std::min(-1.0 + 2.0 * s, 0.0)).epsilon(1e-12));
        }
    }
    SUBCASE("t = 0 reproduces the start") {
        CHECK(disc1d_flow_eval(q0, 0.0, 0.0).values() == q0.values());
    }
    SUBCASE("outputs stay monotone and the energy decays") {
        Rng rng(11);
        const auto mu0 = oracle::random_cloud(rng, 1, 5);
        const auto grid0 = quantile_of_atomic(mu0, 256);
        const auto target = quantile_of_atomic(DiscreteMeasure::dirac({0.3}), 256);
        double prev = 1e100;
        for (double t : {0.0, 0.1, 0.3, 0.7, 1.5, 3.0}) {
            const auto qt = disc1d_flow_eval(grid0, 0.3, t);
            for (std::size_t k = 1; k < qt.size(); ++k) CHECK(qt[k] >= qt[k - 1]);
            const double energy = discrepancy_1d_quantile(qt, target);
            CHECK(energy <= prev + 1e-9);
            prev = energy;
        }
    }
}

TEST_CASE("geodesic comparison curve") {
    const auto sol = equilibrium_unit(2, 1.0);
    const auto start = geodesic_comparison_eval(sol, 0.0);
    CHECK(start.scale == 0.0);
    CHECK(start.shift[0] == doctest::Approx(-1.0));

    const auto at_one = geodesic_comparison_eval(sol, 1.0);
    CHECK(at_one.shift[0] == doctest::Approx(0.0));
    // support radius -E sqrt(3/2) = pi/4
    CHECK(at_one.scale * at_one.base.scale ==
          doctest::Approx(3.14159265358979 / 4.0).epsilon(1e-6));

    // support radius is linear in t
    const double r1 = geodesic_comparison_eval(sol, 0.5).scale * sol.eta_star.scale;
    const double r2 = geodesic_comparison_eval(sol, 1.5).scale * sol.eta_star.scale;
    CHECK(r2 == doctest::Approx(3.0 * r1).epsilon(1e-12));

    CHECK_THROWS_AS(geodesic_comparison_eval(equilibrium_unit(2, 1.5), 1.0),
                    std::invalid_argument);
}

TEST_CASE("centered composite curve") {
    const auto sol = equilibrium_unit(2, 1.5);
    const std::vector<double> p{-1.0, 0.0};
    const std::vector<double> q{1.0, 0.0};

    const auto start = centered_composite_eval(sol, p, q, 0.0);
    CHECK(start.scale == 0.0);
    CHECK(start.shift[0] == doctest::Approx(p[0]).epsilon(1e-12));
    CHECK(start.shift[1] == doctest::Approx(p[1]).epsilon(1e-12));

    for (double t : {0.3, 1.0, 5.0}) {
        const auto point = centered_composite_eval(sol, p, q, t);
        const auto particle = one_particle_eval(p, q, 1.5, t);
        CHECK(point.shift == particle.position);
        const double alpha = std::pow(t * 1.5 * 0.5 * (-sol.energy), 2.0);
        CHECK(point.scale == doctest::Approx(alpha).epsilon(1e-12));
    }
}

TEST_CASE("dirac line flow") {
    CHECK(dirac_line_flow(-1.0, 0.0, 0.5) == doctest::Approx(-0.5));
    CHECK(dirac_line_flow(-1.0, 0.0, 1.0) == doctest::Approx(0.0));
    CHECK(dirac_line_flow(-1.0, 0.0, 7.0) == doctest::Approx(0.0));
    CHECK(dirac_line_flow(0.3, 0.3, 2.0) == doctest::Approx(0.3));
    // 1-Lipschitz in t
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const double x0 = rng.uniform(-2.0, 2.0);
        const double q = rng.uniform(-2.0, 2.0);
        const double t1 = rng.uniform(0.0, 3.0);
        const double t2 = rng.uniform(0.0, 3.0);
        CHECK(std::abs(dirac_line_flow(x0, q, t1) - dirac_line_flow(x0, q, t2)) <=
              std::abs(t1 - t2) + 1e-15);
    }
}

TEST_CASE("msigma value and gradient") {
    const Kernel k = Kernel::riesz(1.0);
    const auto target = quantile_of_atomic(DiscreteMeasure::dirac({0.0}), 512);

    SUBCASE("outer branch closed form") {
        const auto eval = msigma_value_and_grad({2.0, 0.1}, k, target);
        CHECK(eval.grad.unique);
        CHECK(eval.grad.dm == doctest::Approx(1.0));
        CHECK(eval.grad.dsigma == doctest::Approx(-1.0 / std::sqrt(3.0)));
        // F = -sigma/sqrt(3) + |m|
        CHECK(eval.value == doctest::Approx(2.0 - 0.1 / std::sqrt(3.0)).epsilon(1e-2));
    }
    SUBCASE("inner value matches the corrected closed form") {
        // F(0, sigma) = sigma (sqrt(3)/2 - 1/sqrt(3)) = sigma/(2 sqrt(3))
        const auto eval = msigma_value_and_grad({0.0, 1.0}, k, target);
        CHECK(eval.value ==
              doctest::Approx(-1.0 / std::sqrt(3.0) + std::sqrt(3.0) / 2.0).epsilon(1e-2));
    }
    SUBCASE("subgradient set at the Dirac target point") {
        const auto eval = msigma_value_and_grad({0.0, 0.0}, k, target);
        CHECK_FALSE(eval.grad.unique);
    }
    SUBCASE("gradient matches finite differences on random interior states") {
        Rng rng(19);
        int checked = 0;
        while (checked < 50) {
            const double sigma = rng.uniform(0.3, 1.5);
            const double m = rng.uniform(-0.9, 0.9) * std::sqrt(3.0) * sigma;
            if (std::abs(std::abs(m) - std::sqrt(3.0) * sigma) < 0.1 * sigma) continue;
            const auto eval = msigma_value_and_grad({m, sigma}, k, target);
            const auto fd = oracle::finite_difference_gradient(
                [&](const std::vector<double>& x) {
                    return msigma_value_and_grad({x[0], x[1]}, k, target).value;
                },
                {m, sigma});
            CHECK(oracle::max_rel_error({eval.grad.dm, eval.grad.dsigma}, fd) <= 1e-4);
            ++checked;
        }
    }
}

TEST_CASE("msigma flow descends to the Dirac target") {
    const Kernel k = Kernel::riesz(1.0);
    const auto target = quantile_of_atomic(DiscreteMeasure::dirac({0.0}), 256);
    const auto trajectory = msigma_flow({-1.0, 0.0}, k, target, 2e-3, 1600);
    const auto& last = trajectory.back();
    CHECK(std::abs(last.m) <= 1e-2);
    CHECK(std::abs(last.sigma) <= 1e-2);

    // energy is nonincreasing up to Euler slack
    double prev = 1e100;
    for (std::size_t i = 0; i < trajectory.size(); i += 100) {
        const double value = msigma_value_and_grad(trajectory[i], k, target).value;
        CHECK(value <= prev + 5e-3);
        prev = value;
    }
}

TEST_CASE("msigma flow is stationary at the minimizer") {
    const Kernel k = Kernel::riesz(1.0);
    const auto target = quantile_of_atomic(DiscreteMeasure::dirac({0.5}), 256);
    const auto trajectory = msigma_flow({0.5, 0.0}, k, target, 1e-3, 50);
    CHECK(trajectory.back().m == doctest::Approx(0.5));
    CHECK(trajectory.back().sigma == doctest::Approx(0.0));
}

TEST_CASE("msigma flow with the distance kernel reaches the uniform target") {
    // target U[-1,1] is (m, sigma) = (0, 1/sqrt(3)); the Riesz landscape is
    // convex, so the flow reaches the global minimizer where the smooth
    // kernel would stall at the saddle
    const Kernel k = Kernel::riesz(1.0);
    const std::size_t n = 128;
    std::vector<double> uniform(n);
    for (std::size_t i = 0; i < n; ++i) uniform[i] = 2.0 * QuantileGrid::node(i, n) - 1.0;
    const QuantileGrid target{uniform};
    const double sigma_star = 1.0 / std::sqrt(3.0);

    CHECK(std::abs(msigma_value_and_grad({0.0, sigma_star}, k, target).value) <= 2.0 / n);

    const auto trajectory = msigma_flow({0.9, 0.05}, k, target, 5e-3, 2000);
    CHECK(std::abs(trajectory.back().m) <= 0.02);
    CHECK(trajectory.back().sigma == doctest::Approx(sigma_star).epsilon(0.05));
}

TEST_CASE("msigma flow with the smooth kernel approaches the saddle") {
    // target U[-1,1]; the sigma = 0 line is invariant for the smooth kernel,
    // so Dirac starts slide into the saddle (0,0) and never reach the global
    // minimizer (0, 1/sqrt(3))
    const Kernel k = Kernel::wendland();
    const std::size_t n = 128;
    std::vector<double> uniform(n);
    for (std::size_t i = 0; i < n; ++i) uniform[i] = 2.0 * QuantileGrid::node(i, n) - 1.0;
    const QuantileGrid target{uniform};
    const auto trajectory = msigma_flow({-1.0, 0.0}, k, target, 5e-3, 3000);
    CHECK(std::abs(trajectory.back().m) <= 0.05);
    CHECK(trajectory.back().sigma <= 0.05);

    // a strictly interior start escapes the saddle along the unstable
    // direction instead (no descent path from a Dirac to the global minimum)
    const auto interior = msigma_flow({-1.0, 1e-3}, k, target, 5e-3, 3000);
    CHECK(interior.back().sigma > 0.3);
}

TEST_CASE("double-well splitting flow") {
    const auto start = double_well_split_eval(0.5, 0.0);
    for (std::size_t i = 0; i < start.size(); ++i) CHECK(start.point(i)[0] == 0.0);

    const auto late = double_well_split_eval(0.25, 40.0);
    CHECK(late.point(0)[0] == doctest::Approx(-1.0));
    CHECK(late.point(1)[0] == doctest::Approx(1.0));
    CHECK(late.weight(0) == doctest::Approx(0.75));
    CHECK(late.weight(1) == doctest::Approx(0.25));

    const auto all_right = double_well_split_eval(1.0, 2.0);
    CHECK(all_right.size() == 1);
    CHECK(all_right.point(0)[0] == doctest::Approx(1.0 - std::exp(-2.0)));
}

} // TEST_SUITE
