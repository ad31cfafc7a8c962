#pragma once

#include <cstdint>

namespace linebot {

enum class Level : std::uint8_t { L, H };

constexpr Level complement(Level v) { return v == Level::H ? Level::L : Level::H; }

// One channel of the dual H-bridge driver.
struct HBridgeInputs {
    Level in1 = Level::L;
    Level in2 = Level::L;
    int pwm_duty = 0;  // 0..255; the PWM pin reads H when duty > 0
    Level stby = Level::H;
};

enum class ChannelMode { ShortBrake, CCW, CW, Stop, Standby };

const char* to_string(ChannelMode mode);

// Driver truth table. STBY low overrides everything; IN1/IN2 select the
// direction; duty 0 on a driven channel degenerates to short brake.
ChannelMode channel_mode(const HBridgeInputs& inputs);

struct MotorParams {
    double omega_max = 20.0;  // rad/s at duty 255
    double tau_drive = 0.05;  // s, driven acceleration
    double tau_coast = 0.4;   // s, freewheel decay (Stop / Standby)
    double tau_brake = 0.02;  // s, short-brake decay
};

struct MotorTarget {
    double omega = 0.0;  // rad/s
    double tau = 0.0;    // s
};

MotorTarget motor_target(ChannelMode mode, int duty, const MotorParams& params);

// First-order response over dt, evaluated exactly.
double step_motor(double omega, double target_omega, double tau, double dt);

// Time-average of that response over the step; integrating the pose with it
// keeps displacement exact through speed transients.
double step_motor_mean(double omega, double target_omega, double tau, double dt);

struct ServoState {
    double angle = 0.0;        // deg, physical position
    double commanded = 0.0;    // deg
    double slew_rate = 400.0;  // deg/s
};

// Moves angle toward commanded at the slew limit.
ServoState step_servo(ServoState s, double dt);

}  // namespace linebot
