#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "stagflow/initial_data.hpp"
#include "stagflow/operators.hpp"

using namespace stagflow;

namespace {
constexpr double kPi = std::numbers::pi;

Field sample(const PeriodicGrid& grid, const oracle::Fn& f) {
    Field out(grid);
    for (int j = 0; j < grid.size(); ++j) out[j] = f(grid.node(j));
    return out;
}

double max_err_vs(const Field& got, const oracle::Fn& expected) {
    double worst = 0.0;
    for (int j = 0; j < got.size(); ++j)
        worst = std::max(worst, std::abs(got[j] - expected(got.grid().node(j))));
    return worst;
}
}  // namespace

TEST_CASE("mean: trapezoid rule on periodic data") {
    PeriodicGrid grid(64);
    CHECK(mean(sample(grid, [](double) { return 1.0; })) == doctest::Approx(1.0));
    CHECK(std::abs(mean(make_sine(grid, 1.0))) <= 1e-14);
    CHECK(std::abs(mean(sample(grid, [](double x) {
              return 2.0 + std::cos(2.0 * kPi * x);
          })) - 2.0) <= 1e-14);
}

TEST_CASE("deriv: exact on resolved modes") {
    PeriodicGrid grid(64);
    Field u = make_sine(grid, 1.0);

    CHECK(max_err_vs(deriv(u, 1), [](double x) {
              return 2.0 * kPi * std::cos(2.0 * kPi * x);
          }) <= 1e-10);
    CHECK(max_abs(deriv(sample(grid, [](double) { return 0.7; }), 1)) <= 1e-12);
    CHECK(max_err_vs(deriv(u, 2), [](double x) {
              return -4.0 * kPi * kPi * std::sin(2.0 * kPi * x);
          }) <= 1e-9);
}

TEST_CASE("inv_dx: mean-zero periodic antiderivative") {
    PeriodicGrid grid(64);
    Field c = sample(grid, [](double x) { return std::cos(2.0 * kPi * x); });
    CHECK(max_err_vs(inv_dx(c), [](double x) {
              return std::sin(2.0 * kPi * x) / (2.0 * kPi);
          }) <= 1e-12);

    Field s = make_sine(grid, 1.0);
    CHECK(max_err_vs(inv_dx(s), [](double x) {
              return -std::cos(2.0 * kPi * x) / (2.0 * kPi);
          }) <= 1e-12);

    CHECK_THROWS_AS(inv_dx(sample(grid, [](double) { return 1.0; })),
                    NonZeroMeanError);
}

TEST_CASE("nonlocal: symbol route against the quadrature oracle") {
    PeriodicGrid grid(64);

    auto check_against_oracle = [&](const oracle::Fn& f, double tol) {
        Field got = nonlocal(sample(grid, f));
        oracle::Fn expected = oracle::nonlocal(f);
        CHECK(max_err_vs(got, expected) <= tol);
    };

    check_against_oracle([](double x) { return std::cos(2.0 * kPi * x); }, 1e-10);
    check_against_oracle([](double x) { return std::cos(4.0 * kPi * x); }, 1e-10);

    // Closed forms for the same two cases.
    CHECK(max_err_vs(nonlocal(sample(grid, [](double x) {
              return std::cos(2.0 * kPi * x);
          })), [](double x) { return std::sin(2.0 * kPi * x) / (2.0 * kPi); }) <= 1e-12);
    CHECK(max_err_vs(nonlocal(sample(grid, [](double x) {
              return std::cos(4.0 * kPi * x);
          })), [](double x) { return std::sin(4.0 * kPi * x) / (4.0 * kPi); }) <= 1e-12);

    CHECK(max_abs(nonlocal(sample(grid, [](double) { return 5.0; }))) <= 1e-13);
}

TEST_CASE("forcing_f: analytic and quadrature values") {
    PeriodicGrid grid(64);
    Field u = make_sine(grid, 1.0);

    CHECK(forcing_f(sample(grid, [](double) { return 0.4; }), Dimension(3.0)) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(forcing_f(u, Dimension(3.0)) == doctest::Approx(-3.0 * kPi * kPi));
    CHECK(forcing_f(u, Dimension(2.0)) == doctest::Approx(-4.0 * kPi * kPi));

    // Same value from the defining integral.
    const double quad = oracle::integrate(
        [](double x) {
            const double c = 2.0 * kPi * std::cos(2.0 * kPi * x);
            return c * c;
        },
        0.0, 1.0);
    CHECK(forcing_f(u, Dimension(3.0)) == doctest::Approx(-1.5 * quad));
}

TEST_CASE("rhs_eq3: symbolic value on a single mode") {
    PeriodicGrid grid(64);
    Field u = make_sine(grid, 1.0);

    CHECK(max_err_vs(rhs_eq3(u, Dimension(3.0)), [](double x) {
              return -kPi / 4.0 * std::sin(4.0 * kPi * x);
          }) <= 1e-10);

    CHECK(max_abs(rhs_eq3(sample(grid, [](double) { return 0.3; }),
                          Dimension(2.5))) <= 1e-12);
    CHECK(max_abs(rhs_eq3(Field(grid), Dimension(4.0))) == 0.0);
}

TEST_CASE("operator identities on random band-limited fields") {
    PeriodicGrid grid(128);
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        Field f = make_random_bandlimited(grid, 12, 1.0, seed);

        // d/dx of the antiderivative restores mean-zero input.
        CHECK(max_abs_diff(deriv(inv_dx(f), 1), f) <= 1e-8);

        // Antiderivative of the derivative removes the mean.
        Field shifted = f;
        for (int j = 0; j < shifted.size(); ++j) shifted[j] += 2.5;
        Field recovered = inv_dx(deriv(shifted, 1));
        double worst = 0.0;
        for (int j = 0; j < f.size(); ++j)
            worst = std::max(worst, std::abs(recovered[j] - (shifted[j] - 2.5)));
        CHECK(worst <= 1e-8);

        // The two compositions differ exactly by the mean.
        CHECK(mean(shifted) == doctest::Approx(2.5).epsilon(1e-12));

        CHECK(std::abs(mean(nonlocal(shifted))) <= 1e-12);
        CHECK(std::abs(mean(rhs_eq3(shifted, Dimension(3.0)))) <= 1e-10);
        CHECK(std::abs(mean(rhs_eq3(f, Dimension(5.0)))) <= 1e-10);
    }
}

TEST_CASE("rhs_eq3 forcing term against the quadrature oracle") {
    // Assemble the right-hand side from the oracle's nonlocal operator and
    // analytic derivatives, then compare with the spectral implementation.
    PeriodicGrid grid(128);
    const double amp = 0.3;
    auto u_fn = [amp](double x) { return amp * std::sin(2.0 * kPi * x); };
    auto ux_fn = [amp](double x) { return amp * 2.0 * kPi * std::cos(2.0 * kPi * x); };

    Dimension dim(3.0);
    oracle::Fn nl = oracle::nonlocal([ux_fn](double x) {
        const double g = ux_fn(x);
        return g * g;
    });
    auto expected = [&](double x) { return dim.a() * nl(x) - u_fn(x) * ux_fn(x); };

    CHECK(max_err_vs(rhs_eq3(sample(grid, u_fn), dim), expected) <= 1e-8);
}
