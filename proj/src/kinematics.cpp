#include "linebot/kinematics.hpp"

#include <cmath>
#include <numbers>

namespace linebot {

double normalize_angle(double a) {
    double r = std::remainder(a, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    return r;
}

Pose step_pose(Pose pose, double omega_left, double omega_right, const ChassisParams& chassis,
               double dt) {
    const double v = chassis.wheel_radius * (omega_left + omega_right) / 2.0;
    const double w = chassis.wheel_radius * (omega_right - omega_left) / chassis.track_width;

    if (std::abs(w) < 1e-9) {
        pose.x += v * std::cos(pose.heading) * dt;
        pose.y += v * std::sin(pose.heading) * dt;
        return pose;
    }

    // Closed-form arc: the pose moves along a circle of radius v/w.
    const double h0 = pose.heading;
    const double h1 = h0 + w * dt;
    pose.x += (v / w) * (std::sin(h1) - std::sin(h0));
    pose.y -= (v / w) * (std::cos(h1) - std::cos(h0));
    pose.heading = normalize_angle(h1);
    return pose;
}

}  // namespace linebot
