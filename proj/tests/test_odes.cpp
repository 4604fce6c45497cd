#include <cmath>
#include <random>
#include <sstream>

#include "camc/odes.hpp"
#include "doctest.h"

using namespace camc;

namespace {

CyclicOdeState state_from_profile(const CyclicFamilyParams& params, double s) {
    const CyclicProfile p = family_profile(params, s);
    return {s, p.r, p.rp, p.a, p.b};
}

}  // namespace

TEST_CASE("right-hand side") {
    SUBCASE("constant-radius rotational solution") {
        const auto d = rhs({0.0, 1.0, 0.0, 0.0, 0.0}, 0.0, 0.0, OdeMode::Anisotropic);
        CHECK(d.rpp == 0.0);
        CHECK(d.ap == 0.0);
        CHECK(d.bp == 0.0);
    }
    SUBCASE("catenoid satisfies the isotropic equation") {
        const double s0 = 0.7;
        const auto d = rhs({s0, std::cosh(s0), std::sinh(s0), 0.0, 0.0}, 0.0, 0.0,
                           OdeMode::Isotropic);
        CHECK(d.rpp == doctest::Approx(std::cosh(s0)).epsilon(1e-14));
    }
    SUBCASE("anisotropic value") {
        const auto d = rhs({0.0, 2.0, 0.0, 0.0, 0.0}, 1.0, 0.0, OdeMode::Anisotropic);
        CHECK(d.rpp == doctest::Approx(8.0).epsilon(1e-15));
        CHECK(d.ap == doctest::Approx(4.0));
    }
    SUBCASE("nonpositive radius rejected") {
        CHECK_THROWS_AS(rhs({0.0, 0.0, 0.0, 0.0, 0.0}, 1.0, 0.0, OdeMode::Anisotropic),
                        DegenerateRadius);
    }
}

TEST_CASE("integration reproduces the closed forms") {
    struct Case {
        CyclicFamilyParams params;
        double s0, s1;
    };
    const Case cases[] = {
        {{FamilyKind::TypeI, 2.0, 0.0, 1.0}, -0.6, 0.6},
        {{FamilyKind::TypeII, 1.0, 0.0, 1.0}, 0.0, 1.5},
        {{FamilyKind::TypeIII, 1.0, 0.0, 1.0}, 0.5, 2.0},
    };
    for (const auto& c : cases) {
        CAPTURE(family_name(c.params.kind));
        const OdeTrajectory traj = integrate(state_from_profile(c.params, c.s0), c.params.lambda,
                                             c.params.mu, OdeMode::Anisotropic, c.s1, 1e-3);
        REQUIRE(traj.stop == StopReason::ReachedEnd);
        const CyclicOdeState& last = traj.states.back();
        CHECK(last.s == doctest::Approx(c.s1).epsilon(1e-14));
        const CyclicProfile exact = family_profile(c.params, c.s1);
        CHECK(std::abs(last.r - exact.r) < 1e-6);
        CHECK(std::abs(last.a - exact.a) < 1e-6);
        CHECK(std::abs(last.b - exact.b) < 1e-6);

        // first-integral drift along the trajectory
        const double c1_0 = first_integral(traj.states.front(), c.params.lambda, c.params.mu);
        double drift = 0.0;
        for (const auto& st : traj.states)
            drift = std::max(drift,
                             std::abs(first_integral(st, c.params.lambda, c.params.mu) - c1_0));
        CHECK(drift < 1e-6);

        // classification round-trip
        CHECK(classify_by_first_integral(c1_0, classification_tolerance(traj)) == c.params.kind);
    }
    SUBCASE("Type III endpoint value is the frozen closed form") {
        const CyclicFamilyParams p{FamilyKind::TypeIII, 1.0, 0.0, 1.0};
        const OdeTrajectory traj =
            integrate(state_from_profile(p, 0.5), 1.0, 0.0, OdeMode::Anisotropic, 2.0, 1e-3);
        CHECK(traj.states.back().r == doctest::Approx(0.27572056477178321).epsilon(1e-9));
    }
}

TEST_CASE("integration guards") {
    SUBCASE("constant trajectory") {
        const OdeTrajectory traj =
            integrate({0.0, 1.0, 0.0, 0.0, 0.0}, 0.0, 0.0, OdeMode::Anisotropic, 2.0, 1e-3);
        CHECK(traj.stop == StopReason::ReachedEnd);
        for (const auto& st : traj.states) CHECK(st.r == doctest::Approx(1.0).epsilon(1e-13));
    }
    SUBCASE("Type I blows up before the domain endpoint") {
        const CyclicFamilyParams p{FamilyKind::TypeI, 2.0, 0.0, 1.0};
        const OdeTrajectory traj =
            integrate(state_from_profile(p, 0.0), 2.0, 0.0, OdeMode::Anisotropic,
                      std::numbers::pi / 2.0, 1e-3);
        CHECK(traj.stop == StopReason::BlowUp);
        CHECK(traj.states.back().s < std::numbers::pi / 2.0);
    }
    SUBCASE("decaying exponential radius collapses") {
        // lambda = mu = 0 with r'(0) = -r(0): r(s) = exp(-s) crosses the floor.
        const OdeTrajectory traj =
            integrate({0.0, 1.0, -1.0, 0.0, 0.0}, 0.0, 0.0, OdeMode::Anisotropic, 30.0, 1e-2);
        CHECK(traj.stop == StopReason::RadiusCollapse);
    }
    SUBCASE("gross steps trip the per-step invariant heuristic") {
        const OdeTrajectory fast =
            integrate({0.0, 1.0, 0.0, 0.0, 0.0}, 2.0, 0.0, OdeMode::Anisotropic, 5.0, 0.25);
        CHECK((fast.stop == StopReason::StepTooLarge || fast.stop == StopReason::BlowUp));
        // moderate growth with a unit step: step failure, not blow-up
        const OdeTrajectory iso =
            integrate({0.0, 1.0, 0.0, 0.0, 0.0}, 0.0, 0.0, OdeMode::Isotropic, 10.0, 1.0);
        CHECK(iso.stop == StopReason::StepTooLarge);
        CHECK(iso.states.back().r < 1e3);
    }
    SUBCASE("bad step") {
        CHECK_THROWS_AS(
            integrate({0.0, 1.0, 0.0, 0.0, 0.0}, 1.0, 0.0, OdeMode::Anisotropic, 1.0, 0.0),
            DomainError);
    }
}

TEST_CASE("backward integration") {
    const CyclicFamilyParams p{FamilyKind::TypeIII, 1.0, 0.0, 1.0};
    const OdeTrajectory traj =
        integrate(state_from_profile(p, 2.0), 1.0, 0.0, OdeMode::Anisotropic, 1.0, 1e-3);
    REQUIRE(traj.stop == StopReason::ReachedEnd);
    CHECK(traj.states.back().s == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(traj.states.back().r - family_profile(p, 1.0).r) < 1e-7);
    // s strictly monotone (decreasing here)
    for (std::size_t i = 1; i < traj.states.size(); ++i)
        CHECK(traj.states[i].s < traj.states[i - 1].s);
}

TEST_CASE("classification tolerance scaling") {
    const CyclicFamilyParams p{FamilyKind::TypeI, 2.0, 0.0, 1.0};
    const OdeTrajectory traj =
        integrate(state_from_profile(p, 0.0), 2.0, 0.0, OdeMode::Anisotropic, 1.0, 1e-3);
    double rmax = 0.0;
    for (const auto& st : traj.states) rmax = std::max(rmax, st.r);
    CHECK(classification_tolerance(traj) ==
          doctest::Approx(1e-8 * std::max(1.0, 4.0 * rmax * rmax)).epsilon(1e-12));
}

TEST_CASE("fourth-order convergence") {
    const CyclicFamilyParams p{FamilyKind::TypeIII, 1.0, 0.0, 1.0};
    const CyclicOdeState init = state_from_profile(p, 0.5);
    const double exact = family_profile(p, 1.5).r;
    auto endpoint_error = [&](double h) {
        const OdeTrajectory t = integrate(init, 1.0, 0.0, OdeMode::Anisotropic, 1.5, h);
        REQUIRE(t.stop == StopReason::ReachedEnd);
        return std::abs(t.states.back().r - exact);
    };
    const double ratio = endpoint_error(0.02) / endpoint_error(0.01);
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("isotropic catenoid profile") {
    const OdeTrajectory traj =
        integrate({0.0, 1.0, 0.0, 0.0, 0.0}, 0.0, 0.0, OdeMode::Isotropic, 1.0, 1e-3);
    REQUIRE(traj.stop == StopReason::ReachedEnd);
    for (const auto& st : traj.states)
        CHECK(std::abs(st.r - std::cosh(st.s)) < 1e-6);
    CHECK(traj.states.back().r == doctest::Approx(1.5430806348152438).epsilon(1e-9));
}

TEST_CASE("first integral values and classification") {
    SUBCASE("closed-form values per family") {
        const CyclicFamilyParams t1{FamilyKind::TypeI, 2.0, 0.0, 1.0};
        const CyclicFamilyParams t2{FamilyKind::TypeII, 1.0, 0.0, 1.0};
        const CyclicFamilyParams t3{FamilyKind::TypeIII, 1.0, 0.0, 1.0};
        for (double s : {-0.8, 0.1, 1.2})
            CHECK(first_integral(state_from_profile(t1, s), 2.0, 0.0) ==
                  doctest::Approx(-1.0).epsilon(1e-11));
        for (double s : {-0.5, 0.0, 2.0})
            CHECK(std::abs(first_integral(state_from_profile(t2, s), 1.0, 0.0)) < 1e-12);
        for (double s : {0.3, 1.0, 2.5})
            CHECK(first_integral(state_from_profile(t3, s), 1.0, 0.0) ==
                  doctest::Approx(1.0).epsilon(1e-11));
    }
    SUBCASE("classification bands") {
        CHECK(classify_by_first_integral(-1.0, 1e-8) == FamilyKind::TypeI);
        CHECK(classify_by_first_integral(3e-9, 1e-8) == FamilyKind::TypeII);
        CHECK(classify_by_first_integral(0.5, 1e-8) == FamilyKind::TypeIII);
    }
    SUBCASE("general lambda, mu stays conserved") {
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> u(0.5, 2.0);
        for (int i = 0; i < 5; ++i) {
            const double lam = u(rng), mu = u(rng) - 1.0;
            const CyclicFamilyParams p{FamilyKind::TypeIII, lam, mu, 1.0};
            const OdeTrajectory traj = integrate(state_from_profile(p, 0.6), lam, mu,
                                                 OdeMode::Anisotropic, 2.2, 1e-3);
            REQUIRE(traj.stop == StopReason::ReachedEnd);
            const double c1_0 = first_integral(traj.states.front(), lam, mu);
            for (const auto& st : traj.states)
                CHECK(std::abs(first_integral(st, lam, mu) - c1_0) < 1e-6);
        }
    }
}

TEST_CASE("rotational residual") {
    CHECK(std::abs(rotational_residual(rotational_solution(1.0, 0.0, 0.0), 0.7)) < 1e-13);
    CHECK(std::abs(rotational_residual(rotational_solution(0.0, 0.0, 8.0), 1.3)) < 1e-13);
    CHECK(rotational_residual(rotational_solution(0.0, 0.0, 0.0), 1.0) == 0.0);
    // u = r^2 measured against the wrong target constant leaves the full residual
    CHECK(rotational_residual(rotational_solution(0.0, 0.0, 8.0), 2.0, 0.0) ==
          doctest::Approx(4.0));
    CHECK_THROWS_AS(rotational_residual(rotational_solution(1.0, 0.0, 0.0), 0.0),
                    DegenerateRadius);
}

TEST_CASE("trajectory dump format") {
    const OdeTrajectory traj =
        integrate({0.0, 1.0, 0.0, 0.0, 0.0}, 0.0, 0.0, OdeMode::Anisotropic, 0.01, 1e-2);
    std::ostringstream os;
    write_trajectory(os, traj);
    const std::string text = os.str();
    CHECK(text.rfind("s,r,rp,a,b,c1\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') ==
          static_cast<long>(traj.states.size()) + 1);
}
