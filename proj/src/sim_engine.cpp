#include "linebot/sim_engine.hpp"

#include <cmath>
#include <sstream>
#include <tuple>

namespace linebot {

namespace {

constexpr double kEps = 1e-9;

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

void require(bool ok, const std::string& message) {
    if (!ok) throw ScenarioError(message);
}

std::string render_ir_outcome(const NecDecodeResult& res) {
    switch (res.status) {
        case NecStatus::Ok: return format_ir_code(res.code);
        case NecStatus::Repeat: return "repeat";
        case NecStatus::BadHeader: return "bad_header";
        case NecStatus::BadBit: return "bad_bit:" + std::to_string(res.bit_index);
        case NecStatus::Truncated: return "truncated";
    }
    return "?";
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

}  // namespace

bool SimResult::all_passed() const {
    for (const auto& outcome : assertion_outcomes)
        if (!outcome.pass) return false;
    return true;
}

void validate_scenario(const Scenario& s) {
    require(s.track.width_cells >= 1 && s.track.height_cells >= 1, "track must have cells");
    require(s.track.reflectance.size() == static_cast<std::size_t>(s.track.width_cells) *
                                              static_cast<std::size_t>(s.track.height_cells),
            "track reflectance size mismatch");
    require(s.track.cells_per_meter > 0.0, "track cells_per_meter must be positive");
    for (double v : s.track.reflectance)
        require(v >= 0.0 && v <= 1.0, "track reflectance values must lie in [0,1]");

    require(std::isfinite(s.initial_pose.x) && std::isfinite(s.initial_pose.y) &&
                std::isfinite(s.initial_pose.heading),
            "initial pose must be finite");
    require(s.chassis.wheel_radius > 0.0 && s.chassis.track_width > 0.0,
            "chassis dimensions must be positive");
    require(s.sensor_geometry.lateral_spacing > 0.0, "sensor lateral_spacing must be positive");
    require(s.sensor_geometry.threshold > 0.0 && s.sensor_geometry.threshold < 1.0,
            "sensor threshold must lie in (0,1)");
    require(s.motor_params.omega_max > 0.0 && s.motor_params.tau_drive > 0.0 &&
                s.motor_params.tau_coast > 0.0 && s.motor_params.tau_brake > 0.0,
            "motor parameters must be positive");

    require(s.control.speed >= 0 && s.control.speed <= 255, "control speed must be 0..255");
    require(s.control.tspeed >= 0 && s.control.tspeed <= 255, "control tspeed must be 0..255");
    require(s.control.turn_nudge_s > 0.0, "turn_nudge must be positive");
    require(s.control.blink_count >= 0, "blink_count must be non-negative");
    require(s.control.blink_on_s > 0.0 && s.control.blink_off_s > 0.0,
            "blink durations must be positive");
    require(s.control.deploy_hold_s > 0.0, "deploy_hold must be positive");
    require(s.control.servo_deploy_angle >= 0.0 && s.control.servo_deploy_angle <= 180.0 &&
                s.control.servo_home_angle >= 0.0 && s.control.servo_home_angle <= 180.0,
            "servo angles must lie in [0,180]");

    require(s.physics_dt > 0.0, "physics_dt must be positive");
    require(s.control_period + kEps >= s.physics_dt, "control_period must be >= physics_dt");
    const double ratio = s.control_period / s.physics_dt;
    require(std::abs(ratio - std::round(ratio)) < 1e-6 && std::round(ratio) >= 1.0,
            "control_period must be an integer multiple of physics_dt");
    require(s.max_time > 0.0, "max_time must be positive");

    double prev_time = 0.0;
    for (const auto& ev : s.ir_events) {
        require(ev.time >= 0.0, "ir_events times must be non-negative");
        require(ev.time + kEps >= prev_time, "ir_events must be sorted by time");
        prev_time = ev.time;
    }

    for (const auto& a : s.assertions) {
        std::visit(overloaded{
                       [&](const DeliveredCount& c) { require(c.n >= 0, "delivered_count n must be >= 0"); },
                       [&](const OnLineFraction& f) {
                           require(f.start_t < f.end_t, "on_line_fraction window start must precede end");
                           require(f.start_t >= 0.0 && f.end_t <= s.max_time + kEps,
                                   "on_line_fraction window must lie within [0, max_time]");
                           require(f.min_fraction >= 0.0 && f.min_fraction <= 1.0 + kEps,
                                   "on_line_fraction min_fraction must lie in [0,1]");
                       },
                       [&](const StoppedBy& st) {
                           require(st.t >= 0.0 && st.t <= s.max_time + kEps,
                                   "stopped_by time must lie within [0, max_time]");
                       },
                       [&](const PoseInRegion& p) {
                           require(p.t >= 0.0 && p.t <= s.max_time + kEps,
                                   "pose_in_region time must lie within [0, max_time]");
                           require(p.region.x_min <= p.region.x_max && p.region.y_min <= p.region.y_max,
                                   "pose_in_region region must be a valid rectangle");
                       },
                       [&](const LedBlinkCount& l) { require(l.n >= 0, "led_blink_count n must be >= 0"); },
                   },
                   a);
    }
}

SimResult run_scenario(const Scenario& s) {
    validate_scenario(s);

    const double dt = s.physics_dt;
    const long long steps_per_ctrl = std::llround(s.control_period / dt);
    const long long total_steps = static_cast<long long>(std::ceil(s.max_time / dt - kEps));

    auto [state, cmd] = controller_init(s.control);

    Pose pose = s.initial_pose;
    pose.heading = normalize_angle(pose.heading);
    double omega_left = 0.0;
    double omega_right = 0.0;
    ServoState servo{s.control.servo_home_angle, cmd.servo_command, 400.0};

    ChannelMode mode_left = ChannelMode::Stop;
    ChannelMode mode_right = ChannelMode::Stop;
    MotorTarget target_left{0.0, s.motor_params.tau_coast};
    MotorTarget target_right{0.0, s.motor_params.tau_coast};

    auto latch_command = [&] {
        const auto [bridge_right, bridge_left] = command_to_bridge_inputs(cmd);
        mode_right = channel_mode(bridge_right);
        mode_left = channel_mode(bridge_left);
        target_right = motor_target(mode_right, bridge_right.pwm_duty, s.motor_params);
        target_left = motor_target(mode_left, bridge_left.pwm_duty, s.motor_params);
        servo.commanded = cmd.servo_command;
    };

    SimResult out;
    out.trace.reserve(static_cast<std::size_t>(total_steps / steps_per_ctrl) + 1);
    std::size_t next_event = 0;

    for (long long i = 0; i < total_steps; ++i) {
        const double t = static_cast<double>(i) * dt;

        if (i % steps_per_ctrl == 0) {
            const SensorReading reading = read_sensors(s.track, pose, s.sensor_geometry);

            // At most one queued remote signal is consumed per boundary; the
            // receiver hands the loop one decoded value at a time.
            std::optional<IrCode> code;
            std::optional<std::string> ir_log;
            if (next_event < s.ir_events.size() && s.ir_events[next_event].time <= t + kEps) {
                const IrEvent& ev = s.ir_events[next_event++];
                const PulseTrain train =
                    std::holds_alternative<Button>(ev.signal)
                        ? encode_nec(button_code(std::get<Button>(ev.signal)), s.ir_timing)
                        : std::get<PulseTrain>(ev.signal);
                const NecDecodeResult decoded = decode_nec(train, s.ir_timing);
                ir_log = render_ir_outcome(decoded);
                if (decoded.ok()) code = decoded.code;
            }

            const bool was_delivering =
                state.busy && state.busy->phase != BusyPhase::TurnNudge;
            std::tie(state, cmd) = controller_step(std::move(state), reading, code, t, s.control);
            const bool now_delivering =
                state.busy && state.busy->phase != BusyPhase::TurnNudge;

            if (!was_delivering && now_delivering) out.delivery_windows.push_back({t, -1.0});
            if (was_delivering && !now_delivering) {
                out.delivery_windows.back().end = t;
                out.deliveries.push_back(t);
            }

            latch_command();

            TraceRecord rec;
            rec.t = t;
            rec.x = pose.x;
            rec.y = pose.y;
            rec.heading = pose.heading;
            rec.sensors = reading;
            rec.duty_left = cmd.duty_left;
            rec.duty_right = cmd.duty_right;
            rec.mode_left = mode_left;
            rec.mode_right = mode_right;
            rec.omega_left = omega_left;
            rec.omega_right = omega_right;
            rec.master_enable = cmd.master_enable;
            rec.led = cmd.delivery_led;
            rec.servo_angle = servo.angle;
            rec.ir_decoded = ir_log;
            out.trace.push_back(std::move(rec));
        }

        // Pose integrates the step-average wheel speed: together with the
        // closed-form arc this keeps displacement exact through transients.
        const double mean_left = step_motor_mean(omega_left, target_left.omega, target_left.tau, dt);
        const double mean_right =
            step_motor_mean(omega_right, target_right.omega, target_right.tau, dt);
        omega_left = step_motor(omega_left, target_left.omega, target_left.tau, dt);
        omega_right = step_motor(omega_right, target_right.omega, target_right.tau, dt);
        pose = step_pose(pose, mean_left, mean_right, s.chassis, dt);
        servo = step_servo(servo, dt);
    }

    out.final_pose = pose;
    out.end_time = static_cast<double>(total_steps) * dt;

    out.assertion_outcomes.reserve(s.assertions.size());
    for (const auto& a : s.assertions) {
        AssertionResult r = evaluate_assertion(a, out);
        out.assertion_outcomes.push_back({a, r.pass, std::move(r.detail)});
    }
    return out;
}

AssertionResult evaluate_assertion(const Assertion& assertion, const SimResult& result) {
    return std::visit(
        overloaded{
            [&](const DeliveredCount& c) -> AssertionResult {
                const int n = static_cast<int>(result.deliveries.size());
                const bool pass = c.at_least ? n >= c.n : n == c.n;
                return {pass, "completed " + std::to_string(n) + " deliveries, want " +
                                  (c.at_least ? ">= " : "== ") + std::to_string(c.n)};
            },
            [&](const OnLineFraction& f) -> AssertionResult {
                if (f.start_t >= f.end_t)
                    throw ScenarioError("on_line_fraction window start must precede end");
                long long total = 0, dark = 0;
                for (const auto& rec : result.trace) {
                    if (rec.t + kEps < f.start_t || rec.t > f.end_t + kEps) continue;
                    ++total;
                    if (rec.sensors.middle) ++dark;
                }
                if (total == 0) return {false, "no control boundaries inside the window"};
                const double fraction = static_cast<double>(dark) / static_cast<double>(total);
                return {fraction + kEps >= f.min_fraction,
                        "middle sensor dark at " + std::to_string(dark) + "/" + std::to_string(total) +
                            " boundaries = " + fmt(fraction) + ", want >= " + fmt(f.min_fraction)};
            },
            [&](const StoppedBy& st) -> AssertionResult {
                double worst = 0.0;
                double worst_t = st.t;
                for (const auto& rec : result.trace) {
                    if (rec.t + kEps < st.t) continue;
                    const double mag = std::max(std::abs(rec.omega_left), std::abs(rec.omega_right));
                    if (mag > worst) {
                        worst = mag;
                        worst_t = rec.t;
                    }
                }
                return {worst < 0.05, "max |omega| at/after t=" + fmt(st.t) + " is " + fmt(worst) +
                                          " rad/s (at t=" + fmt(worst_t) + "), want < 0.05"};
            },
            [&](const PoseInRegion& p) -> AssertionResult {
                double x = result.final_pose.x;
                double y = result.final_pose.y;
                if (p.t + kEps < result.end_time) {
                    const TraceRecord* last = nullptr;
                    for (const auto& rec : result.trace) {
                        if (rec.t <= p.t + kEps) last = &rec;
                        else break;
                    }
                    if (last == nullptr) return {false, "no sample at or before the requested time"};
                    x = last->x;
                    y = last->y;
                }
                const bool pass = x >= p.region.x_min && x <= p.region.x_max && y >= p.region.y_min &&
                                  y <= p.region.y_max;
                return {pass, "pose at t<=" + fmt(p.t) + " is (" + fmt(x) + ", " + fmt(y) + "), region [" +
                                  fmt(p.region.x_min) + ", " + fmt(p.region.x_max) + "] x [" +
                                  fmt(p.region.y_min) + ", " + fmt(p.region.y_max) + "]"};
            },
            [&](const LedBlinkCount& l) -> AssertionResult {
                long long rises = 0;
                for (const auto& window : result.delivery_windows) {
                    const double end = window.end < 0.0 ? result.end_time : window.end;
                    bool prev = false;
                    // LED level just before the window (normally off).
                    for (const auto& rec : result.trace) {
                        if (rec.t + kEps >= window.start) break;
                        prev = rec.led;
                    }
                    for (const auto& rec : result.trace) {
                        if (rec.t + kEps < window.start) continue;
                        if (rec.t > end + kEps) break;
                        if (rec.led && !prev) ++rises;
                        prev = rec.led;
                    }
                }
                return {rises == l.n, "counted " + std::to_string(rises) +
                                          " led off->on transitions in delivery windows, want == " +
                                          std::to_string(l.n)};
            },
        },
        assertion);
}

std::string describe_assertion(const Assertion& assertion) {
    return std::visit(
        overloaded{
            [](const DeliveredCount& c) {
                return "delivered_count " + std::string(c.at_least ? ">= " : "== ") + std::to_string(c.n);
            },
            [](const OnLineFraction& f) {
                return "on_line_fraction >= " + fmt(f.min_fraction) + " over [" + fmt(f.start_t) + ", " +
                       fmt(f.end_t) + "]";
            },
            [](const StoppedBy& st) { return "stopped_by " + fmt(st.t); },
            [](const PoseInRegion& p) {
                return "pose_in_region t=" + fmt(p.t) + " [" + fmt(p.region.x_min) + ", " +
                       fmt(p.region.x_max) + "] x [" + fmt(p.region.y_min) + ", " + fmt(p.region.y_max) +
                       "]";
            },
            [](const LedBlinkCount& l) { return "led_blink_count == " + std::to_string(l.n); },
        },
        assertion);
}

}  // namespace linebot
