#pragma once

#include <optional>
#include <utility>

#include "linebot/actuators.hpp"
#include "linebot/ir_codec.hpp"
#include "linebot/sensors.hpp"

namespace linebot {

struct ControlConfig {
    int speed = 100;              // straight-line duty
    int tspeed = 120;             // turning duty
    double turn_nudge_s = 0.010;  // pivot burst before re-reading the sensors
    int blink_count = 5;
    double blink_on_s = 0.2;
    double blink_off_s = 0.2;
    double servo_deploy_angle = 160.0;  // deg
    double servo_home_angle = 0.0;      // deg
    double deploy_hold_s = 1.0;
    bool one_shot_delivery = false;  // deliver only once per run
};

enum class Classification { Forward, TurnRight, TurnLeft, Deliver, StopAllWhite, Hold };
enum class DriveKind { Forward, TurnRight, TurnLeft, Stopped };

// The original program used blocking delays inside its loop; here each delay
// becomes a busy phase with a deadline, during which inputs are ignored.
enum class BusyPhase { TurnNudge, DeliverBlink, DeliverHold };

struct BusyState {
    BusyPhase phase = BusyPhase::TurnNudge;
    double deadline = 0.0;  // absolute sim time, s
    int blink_index = 0;    // half-period counter, [0, 2*blink_count)
};

struct ControllerState {
    bool master_enable = true;
    bool delivery_led = false;
    double servo_command = 0.0;
    DriveKind last_drive = DriveKind::Stopped;
    std::optional<BusyState> busy;
    bool delivered_latch = false;
    // Output pins hold their level between writes, so the last written
    // drive state is part of the controller state.
    int duty_right = 0;
    int duty_left = 0;
    Level dir_right = Level::H;
    Level dir_left = Level::H;
};

struct ActuatorCommand {
    int duty_right = 0;
    int duty_left = 0;
    Level dir_right = Level::H;  // H drives the wheel forward
    Level dir_left = Level::H;
    bool master_enable = true;  // driver STBY
    bool delivery_led = false;
    double servo_command = 0.0;  // deg
};

// Sensor pattern -> action, matching the firmware's if-chain.
Classification classify(const SensorReading& reading);

std::pair<ControllerState, ActuatorCommand> controller_init(const ControlConfig& config);

// One control tick: advance or hold any busy phase, else handle at most one
// decoded remote code, else act on the sensor pattern.
std::pair<ControllerState, ActuatorCommand> controller_step(ControllerState state,
                                                            const SensorReading& reading,
                                                            std::optional<IrCode> ir_code,
                                                            double now, const ControlConfig& config);

// Splits a command onto the two driver channels: {right, left}. Direction H
// maps to (IN1 H, IN2 L), the driver's CW entry, which moves the robot forward.
std::pair<HBridgeInputs, HBridgeInputs> command_to_bridge_inputs(const ActuatorCommand& cmd);

}  // namespace linebot
