#pragma once

namespace linebot {

struct Pose {
    double x = 0.0;        // m
    double y = 0.0;        // m
    double heading = 0.0;  // rad, CCW from +x, kept in (-pi, pi]
};

struct ChassisParams {
    double wheel_radius = 0.0335;  // m
    double track_width = 0.15;     // m, lateral distance between wheel contacts
};

// Wraps an angle into (-pi, pi].
double normalize_angle(double a);

// Advances the pose under constant wheel speeds (rad/s, forward-positive)
// for dt seconds. Constant inputs trace an exact circular arc, so composing
// two half steps reproduces a full step.
Pose step_pose(Pose pose, double omega_left, double omega_right, const ChassisParams& chassis,
               double dt);

}  // namespace linebot
