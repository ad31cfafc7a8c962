#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "linebot/actuators.hpp"
#include "linebot/controller.hpp"
#include "linebot/ir_codec.hpp"
#include "linebot/kinematics.hpp"
#include "linebot/sensors.hpp"
#include "linebot/track.hpp"

namespace linebot {

// Scenario assertions, checked against the finished run.
struct DeliveredCount {
    int n = 1;
    bool at_least = false;  // ">= n" instead of "== n"
};
struct OnLineFraction {
    double min_fraction = 1.0;
    double start_t = 0.0;
    double end_t = 0.0;
};
struct StoppedBy {
    double t = 0.0;  // both wheels below 0.05 rad/s at and after t
};
struct Rect {
    double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0;
};
struct PoseInRegion {
    double t = 0.0;
    Rect region;
};
struct LedBlinkCount {
    int n = 0;  // off->on transitions inside delivery sequences
};

using Assertion = std::variant<DeliveredCount, OnLineFraction, StoppedBy, PoseInRegion, LedBlinkCount>;

// A remote-control key press, delivered to the receiver at a point in time.
// Button presses are encoded and decoded through the real codec; a raw pulse
// train exercises the decoder with arbitrary (possibly damaged) signals.
struct IrEvent {
    double time = 0.0;
    std::variant<Button, PulseTrain> signal;
};

struct Scenario {
    Track track;
    Pose initial_pose;
    ChassisParams chassis;
    SensorGeometry sensor_geometry;
    MotorParams motor_params;
    ControlConfig control;
    NecTiming ir_timing;
    std::vector<IrEvent> ir_events;  // sorted by time
    double physics_dt = 0.001;       // s
    double control_period = 0.010;   // s, integer multiple of physics_dt
    double max_time = 0.0;           // s
    std::vector<Assertion> assertions;
};

// State sampled at each control boundary, before that tick's actuation takes
// effect on the physics.
struct TraceRecord {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;
    SensorReading sensors;
    int duty_left = 0;
    int duty_right = 0;
    ChannelMode mode_left = ChannelMode::Stop;
    ChannelMode mode_right = ChannelMode::Stop;
    double omega_left = 0.0;
    double omega_right = 0.0;
    bool master_enable = true;
    bool led = false;
    double servo_angle = 0.0;
    std::optional<std::string> ir_decoded;  // only on ticks that consumed a signal
};

struct DeliveryWindow {
    double start = 0.0;
    double end = -1.0;  // -1 while still open at the end of the run
};

struct AssertionOutcome {
    Assertion assertion;
    bool pass = false;
    std::string detail;
};

struct SimResult {
    std::vector<TraceRecord> trace;
    std::vector<AssertionOutcome> assertion_outcomes;
    std::vector<double> deliveries;  // completion times
    std::vector<DeliveryWindow> delivery_windows;
    Pose final_pose;
    double end_time = 0.0;

    bool all_passed() const;
};

struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checks parameter ranges and the timing grid; throws ScenarioError.
void validate_scenario(const Scenario& scenario);

SimResult run_scenario(const Scenario& scenario);

struct AssertionResult {
    bool pass = false;
    std::string detail;
};

AssertionResult evaluate_assertion(const Assertion& assertion, const SimResult& result);

std::string describe_assertion(const Assertion& assertion);

}  // namespace linebot
