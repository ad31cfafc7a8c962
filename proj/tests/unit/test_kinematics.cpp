#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "linebot/kinematics.hpp"

using namespace linebot;

namespace {

constexpr double kPi = std::numbers::pi;
const ChassisParams kChassis{};  // wheel radius 0.0335 m, track width 0.15 m

}  // namespace

TEST_CASE("kinematics: normalize_angle wraps into (-pi, pi]") {
    CHECK(normalize_angle(0.0) == 0.0);
    CHECK(normalize_angle(kPi) == doctest::Approx(kPi));
    CHECK(normalize_angle(-kPi) == doctest::Approx(kPi));  // -pi maps to the closed end
    CHECK(normalize_angle(3.0 * kPi) == doctest::Approx(kPi));
    CHECK(normalize_angle(2.0 * kPi) == doctest::Approx(0.0));
    CHECK(normalize_angle(-5.5 * kPi) == doctest::Approx(0.5 * kPi));
    for (double a = -50.0; a < 50.0; a += 0.7) {
        const double n = normalize_angle(a);
        CHECK(n > -kPi);
        CHECK(n <= kPi);
        // Same direction: difference is a whole number of turns.
        const double turns = (a - n) / (2.0 * kPi);
        CHECK(std::abs(turns - std::round(turns)) < 1e-9);
    }
}

TEST_CASE("kinematics: equal wheel speeds drive a straight line") {
    Pose p{1.0, 2.0, kPi / 6.0};
    const double omega = 10.0;
    const double dt = 0.25;
    const Pose q = step_pose(p, omega, omega, kChassis, dt);
    const double dist = kChassis.wheel_radius * omega * dt;
    CHECK(q.x == doctest::Approx(p.x + dist * std::cos(p.heading)).epsilon(1e-12));
    CHECK(q.y == doctest::Approx(p.y + dist * std::sin(p.heading)).epsilon(1e-12));
    CHECK(q.heading == p.heading);  // exactly preserved
}

TEST_CASE("kinematics: opposite wheel speeds pivot in place") {
    Pose p{0.5, -0.25, 0.3};
    const Pose q = step_pose(p, -8.0, 8.0, kChassis, 0.1);
    CHECK(q.x == doctest::Approx(p.x).epsilon(1e-12));
    CHECK(q.y == doctest::Approx(p.y).epsilon(1e-12));
    // w = r * (wr - wl) / W = 0.0335 * 16 / 0.15, CCW-positive.
    const double w = kChassis.wheel_radius * 16.0 / kChassis.track_width;
    CHECK(q.heading == doctest::Approx(p.heading + w * 0.1).epsilon(1e-12));
}

TEST_CASE("kinematics: single wheel speeds trace the expected circle") {
    // Only the right wheel turns: the robot arcs CCW about the left contact
    // point, i.e. a circle of radius track_width/2 about a point laterally
    // left... the midpoint traces radius W/2 about the stationary wheel.
    Pose p{0.0, 0.0, 0.0};
    const double omega_r = 5.0;
    const double v = kChassis.wheel_radius * omega_r / 2.0;
    const double w = kChassis.wheel_radius * omega_r / kChassis.track_width;
    const double radius = v / w;  // = track_width / 2
    CHECK(radius == doctest::Approx(kChassis.track_width / 2.0));

    // After many small steps the pose must sit on the circle centered at
    // (0, radius) — the instantaneous center for a left-pivoting arc.
    Pose q = p;
    for (int i = 0; i < 100; ++i) q = step_pose(q, 0.0, omega_r, kChassis, 0.01);
    const double cx = 0.0, cy = radius;
    CHECK(std::hypot(q.x - cx, q.y - cy) == doctest::Approx(radius).epsilon(1e-9));
    const double total = w * 1.0;
    CHECK(q.heading == doctest::Approx(normalize_angle(total)).epsilon(1e-9));
}

TEST_CASE("kinematics: arc step matches the closed-form circle exactly") {
    // Constant wheel speeds for any single step must land exactly on the
    // circle of radius v/w about the instantaneous center, independent of dt.
    const double wl = 3.0, wr = 9.0;
    const double v = kChassis.wheel_radius * (wl + wr) / 2.0;
    const double w = kChassis.wheel_radius * (wr - wl) / kChassis.track_width;
    Pose p{0.2, -0.4, 1.1};
    const double cx = p.x - (v / w) * std::sin(p.heading);
    const double cy = p.y + (v / w) * std::cos(p.heading);
    for (double dt : {1e-4, 0.01, 0.5, 3.0}) {
        const Pose q = step_pose(p, wl, wr, kChassis, dt);
        CHECK(std::hypot(q.x - cx, q.y - cy) == doctest::Approx(v / w).epsilon(1e-12));
        CHECK(q.heading == doctest::Approx(normalize_angle(p.heading + w * dt)).epsilon(1e-12));
    }
}

TEST_CASE("kinematics: composing two half steps equals one full step") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> speed(-20.0, 20.0);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int iter = 0; iter < 200; ++iter) {
        const double wl = speed(rng), wr = speed(rng);
        const Pose p{coord(rng), coord(rng), angle(rng)};
        const double dt = 0.02;
        const Pose whole = step_pose(p, wl, wr, kChassis, dt);
        const Pose halves = step_pose(step_pose(p, wl, wr, kChassis, dt / 2), wl, wr, kChassis, dt / 2);
        CHECK(whole.x == doctest::Approx(halves.x).epsilon(1e-12));
        CHECK(whole.y == doctest::Approx(halves.y).epsilon(1e-12));
        CHECK(std::abs(normalize_angle(whole.heading - halves.heading)) < 1e-12);
    }
}

TEST_CASE("kinematics: zero dt and zero speeds are identities") {
    const Pose p{1.0, -1.0, 2.0};
    const Pose a = step_pose(p, 5.0, -3.0, kChassis, 0.0);
    CHECK(a.x == doctest::Approx(p.x));
    CHECK(a.y == doctest::Approx(p.y));
    const Pose b = step_pose(p, 0.0, 0.0, kChassis, 10.0);
    CHECK(b.x == p.x);
    CHECK(b.y == p.y);
    CHECK(b.heading == p.heading);
}
