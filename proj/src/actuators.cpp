#include "linebot/actuators.hpp"

#include <cmath>

namespace linebot {

const char* to_string(ChannelMode mode) {
    switch (mode) {
        case ChannelMode::ShortBrake: return "ShortBrake";
        case ChannelMode::CCW: return "CCW";
        case ChannelMode::CW: return "CW";
        case ChannelMode::Stop: return "Stop";
        case ChannelMode::Standby: return "Standby";
    }
    return "?";
}

ChannelMode channel_mode(const HBridgeInputs& in) {
    if (in.stby == Level::L) return ChannelMode::Standby;
    const bool pwm_high = in.pwm_duty > 0;
    if (in.in1 == Level::H && in.in2 == Level::H) return ChannelMode::ShortBrake;
    if (in.in1 == Level::L && in.in2 == Level::H)
        return pwm_high ? ChannelMode::CCW : ChannelMode::ShortBrake;
    if (in.in1 == Level::H && in.in2 == Level::L)
        return pwm_high ? ChannelMode::CW : ChannelMode::ShortBrake;
    return ChannelMode::Stop;  // L, L: output floats
}

MotorTarget motor_target(ChannelMode mode, int duty, const MotorParams& params) {
    const double driven = params.omega_max * static_cast<double>(duty) / 255.0;
    switch (mode) {
        case ChannelMode::CW: return {driven, params.tau_drive};
        case ChannelMode::CCW: return {-driven, params.tau_drive};
        case ChannelMode::ShortBrake: return {0.0, params.tau_brake};
        case ChannelMode::Stop:
        case ChannelMode::Standby: return {0.0, params.tau_coast};
    }
    return {0.0, params.tau_coast};
}

double step_motor(double omega, double target_omega, double tau, double dt) {
    return target_omega + (omega - target_omega) * std::exp(-dt / tau);
}

double step_motor_mean(double omega, double target_omega, double tau, double dt) {
    return target_omega + (omega - target_omega) * (tau / dt) * (1.0 - std::exp(-dt / tau));
}

ServoState step_servo(ServoState s, double dt) {
    const double max_delta = s.slew_rate * dt;
    const double delta = s.commanded - s.angle;
    if (std::abs(delta) <= max_delta)
        s.angle = s.commanded;
    else
        s.angle += (delta > 0.0 ? max_delta : -max_delta);
    return s;
}

}  // namespace linebot
