#include "linebot/controller.hpp"

namespace linebot {

namespace {

// Control boundaries land on the busy deadlines up to rounding of t = i*dt;
// a nanosecond of slack keeps "deadline reached" exact on the grid.
constexpr double kTimeEps = 1e-9;

ActuatorCommand make_command(const ControllerState& st) {
    ActuatorCommand cmd;
    cmd.duty_right = st.duty_right;
    cmd.duty_left = st.duty_left;
    cmd.dir_right = st.dir_right;
    cmd.dir_left = st.dir_left;
    cmd.master_enable = st.master_enable;
    cmd.delivery_led = st.delivery_led;
    cmd.servo_command = st.servo_command;
    return cmd;
}

void apply_forward(ControllerState& st, const ControlConfig& cfg) {
    st.duty_right = cfg.speed;
    st.duty_left = cfg.speed;
    st.dir_right = Level::H;
    st.dir_left = Level::H;
    st.last_drive = DriveKind::Forward;
}

void begin_deploy_hold(ControllerState& st, const ControlConfig& cfg, double start) {
    st.delivery_led = false;
    st.servo_command = cfg.servo_deploy_angle;
    st.busy = BusyState{BusyPhase::DeliverHold, start + cfg.deploy_hold_s, 0};
}

// Moves one expired busy phase forward. The caller loops in case several
// deadlines fit inside one control period.
void advance_busy(ControllerState& st, const ControlConfig& cfg) {
    BusyState b = *st.busy;
    switch (b.phase) {
        case BusyPhase::TurnNudge:
            // turn burst done; resume straight travel before the next look
            st.busy.reset();
            apply_forward(st, cfg);
            break;
        case BusyPhase::DeliverBlink:
            b.blink_index += 1;
            if (b.blink_index < 2 * cfg.blink_count) {
                st.delivery_led = (b.blink_index % 2) == 0;
                b.deadline += (b.blink_index % 2) == 0 ? cfg.blink_on_s : cfg.blink_off_s;
                st.busy = b;
            } else {
                begin_deploy_hold(st, cfg, b.deadline);
            }
            break;
        case BusyPhase::DeliverHold:
            st.busy.reset();
            st.master_enable = true;
            st.dir_right = Level::H;
            st.dir_left = Level::H;
            if (cfg.one_shot_delivery) st.delivered_latch = true;
            break;
    }
}

}  // namespace

Classification classify(const SensorReading& r) {
    const bool L = r.left, M = r.middle, R = r.right;
    if (!L && M && !R) return Classification::Forward;
    if (!L && R) return Classification::TurnRight;   // 001, 011
    if (L && !R) return Classification::TurnLeft;    // 100, 110
    if (L && M && R) return Classification::Deliver;
    if (!L && !M && !R) return Classification::StopAllWhite;
    return Classification::Hold;  // 101
}

std::pair<ControllerState, ActuatorCommand> controller_init(const ControlConfig& cfg) {
    ControllerState st;
    st.master_enable = true;
    st.delivery_led = false;
    st.servo_command = cfg.servo_home_angle;
    st.last_drive = DriveKind::Stopped;
    st.duty_right = 0;
    st.duty_left = 0;
    st.dir_right = Level::H;
    st.dir_left = Level::H;
    return {st, make_command(st)};
}

std::pair<ControllerState, ActuatorCommand> controller_step(ControllerState st,
                                                            const SensorReading& reading,
                                                            std::optional<IrCode> ir_code,
                                                            double now, const ControlConfig& cfg) {
    if (st.busy) {
        // Inside a blocking delay: sensors and remote codes are not read.
        while (st.busy && now + kTimeEps >= st.busy->deadline) advance_busy(st, cfg);
        return {st, make_command(st)};
    }

    // Every pass of the firmware loop re-homes the arm before anything else.
    st.servo_command = cfg.servo_home_angle;

    if (ir_code == button_code(Button::One)) {
        st.master_enable = true;
        st.delivery_led = false;
        return {st, make_command(st)};
    }
    if (ir_code == button_code(Button::Two)) {
        st.master_enable = false;
        st.delivery_led = true;
        return {st, make_command(st)};
    }

    switch (classify(reading)) {
        case Classification::Forward:
            apply_forward(st, cfg);
            break;
        case Classification::TurnRight:
            // Pivot clockwise: right wheel backward, left wheel forward.
            st.duty_right = cfg.tspeed;
            st.duty_left = cfg.tspeed;
            st.dir_right = Level::L;
            st.dir_left = Level::H;
            st.last_drive = DriveKind::TurnRight;
            st.busy = BusyState{BusyPhase::TurnNudge, now + cfg.turn_nudge_s, 0};
            break;
        case Classification::TurnLeft:
            st.duty_right = cfg.tspeed;
            st.duty_left = cfg.tspeed;
            st.dir_right = Level::H;
            st.dir_left = Level::L;
            st.last_drive = DriveKind::TurnLeft;
            st.busy = BusyState{BusyPhase::TurnNudge, now + cfg.turn_nudge_s, 0};
            break;
        case Classification::Deliver:
            if (st.delivered_latch) {
                apply_forward(st, cfg);
            } else {
                st.master_enable = false;
                st.servo_command = cfg.servo_home_angle;
                if (cfg.blink_count > 0) {
                    st.delivery_led = true;
                    st.busy = BusyState{BusyPhase::DeliverBlink, now + cfg.blink_on_s, 0};
                } else {
                    begin_deploy_hold(st, cfg, now);
                }
            }
            break;
        case Classification::StopAllWhite:
            st.duty_right = 0;
            st.duty_left = 0;
            st.last_drive = DriveKind::Stopped;
            break;
        case Classification::Hold:
            break;  // ambiguous pattern: keep the previous pin state
    }
    return {st, make_command(st)};
}

std::pair<HBridgeInputs, HBridgeInputs> command_to_bridge_inputs(const ActuatorCommand& cmd) {
    const Level stby = cmd.master_enable ? Level::H : Level::L;
    const HBridgeInputs right{cmd.dir_right, complement(cmd.dir_right), cmd.duty_right, stby};
    const HBridgeInputs left{cmd.dir_left, complement(cmd.dir_left), cmd.duty_left, stby};
    return {right, left};
}

}  // namespace linebot
