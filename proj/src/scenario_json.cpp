#include "linebot/scenario_json.hpp"

#include <cctype>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace linebot {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ScenarioError(message); }

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// "a.b.0.c=value" -> doc["a"]["b"][0]["c"] = value. Values parse as JSON,
// falling back to a plain string; missing objects along the path are created.
void apply_override(json& doc, const std::string& entry) {
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) fail("override must look like dotted.key=value: " + entry);
    const std::string path = entry.substr(0, eq);
    const std::string value_text = entry.substr(eq + 1);

    json value = json::parse(value_text, nullptr, false);
    if (value.is_discarded()) value = value_text;

    std::vector<std::string> tokens;
    std::stringstream ss(path);
    std::string token;
    while (std::getline(ss, token, '.')) {
        if (token.empty()) fail("override path has an empty segment: " + entry);
        tokens.push_back(token);
    }

    json* node = &doc;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        const std::string& part = tokens[i];
        if (node->is_array()) {
            if (!all_digits(part)) fail("array index expected in override path: " + entry);
            const std::size_t idx = std::stoull(part);
            if (idx >= node->size()) fail("override index out of range: " + entry);
            node = &(*node)[idx];
        } else if (node->is_object()) {
            node = &(*node)[part];
            if (node->is_null()) *node = json::object();
        } else {
            fail("override path descends into a scalar: " + entry);
        }
    }

    const std::string& last = tokens.back();
    if (node->is_array()) {
        if (!all_digits(last)) fail("array index expected in override path: " + entry);
        const std::size_t idx = std::stoull(last);
        if (idx >= node->size()) fail("override index out of range: " + entry);
        (*node)[idx] = value;
    } else if (node->is_object()) {
        (*node)[last] = value;
    } else {
        fail("override path descends into a scalar: " + entry);
    }
}

void check_keys(const json& obj, const char* where, std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                known = true;
                break;
            }
        if (!known) fail("unknown key '" + it.key() + "' in " + where);
    }
}

const json& get_object(const json& obj, const char* key) {
    const json& v = obj.at(key);
    if (!v.is_object()) fail(std::string(key) + " must be an object");
    return v;
}

double get_num(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(std::string(key) + " must be a number");
    return v.get<double>();
}

double require_num(const json& obj, const char* key, const char* where) {
    if (!obj.contains(key)) fail(std::string(where) + " is missing required key '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number()) fail(std::string(key) + " must be a number");
    return v.get<double>();
}

int get_int(const json& obj, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(std::string(key) + " must be an integer");
    return v.get<int>();
}

bool get_bool(const json& obj, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_boolean()) fail(std::string(key) + " must be a boolean");
    return v.get<bool>();
}

Assertion parse_assertion(const json& a, std::size_t index) {
    const std::string where = "assertions[" + std::to_string(index) + "]";
    if (!a.is_object() || !a.contains("kind")) fail(where + " must be an object with a 'kind'");
    const std::string kind = a.at("kind").get<std::string>();

    if (kind == "delivered_count") {
        check_keys(a, where.c_str(), {"kind", "n", "at_least"});
        DeliveredCount c;
        c.n = get_int(a, "n", 1);
        c.at_least = get_bool(a, "at_least", false);
        return c;
    }
    if (kind == "on_line_fraction") {
        check_keys(a, where.c_str(), {"kind", "min_fraction", "start_t", "end_t"});
        OnLineFraction f;
        f.min_fraction = require_num(a, "min_fraction", where.c_str());
        f.start_t = require_num(a, "start_t", where.c_str());
        f.end_t = require_num(a, "end_t", where.c_str());
        return f;
    }
    if (kind == "stopped_by") {
        check_keys(a, where.c_str(), {"kind", "t"});
        StoppedBy st;
        st.t = require_num(a, "t", where.c_str());
        return st;
    }
    if (kind == "pose_in_region") {
        check_keys(a, where.c_str(), {"kind", "t", "x_min", "x_max", "y_min", "y_max"});
        PoseInRegion p;
        p.t = require_num(a, "t", where.c_str());
        p.region.x_min = require_num(a, "x_min", where.c_str());
        p.region.x_max = require_num(a, "x_max", where.c_str());
        p.region.y_min = require_num(a, "y_min", where.c_str());
        p.region.y_max = require_num(a, "y_max", where.c_str());
        return p;
    }
    if (kind == "led_blink_count") {
        check_keys(a, where.c_str(), {"kind", "n"});
        LedBlinkCount l;
        l.n = get_int(a, "n", 0);
        return l;
    }
    fail(where + " has unknown kind '" + kind + "'");
}

IrEvent parse_ir_event(const json& e, std::size_t index) {
    const std::string where = "ir_events[" + std::to_string(index) + "]";
    if (!e.is_object()) fail(where + " must be an object");
    check_keys(e, where.c_str(), {"time", "button", "pulses"});
    IrEvent ev;
    ev.time = require_num(e, "time", where.c_str());
    const bool has_button = e.contains("button");
    const bool has_pulses = e.contains("pulses");
    if (has_button == has_pulses) fail(where + " needs exactly one of 'button' or 'pulses'");
    if (has_button) {
        const int b = e.at("button").get<int>();
        if (b != 1 && b != 2) fail(where + " button must be 1 or 2");
        ev.signal = b == 1 ? Button::One : Button::Two;
    } else {
        try {
            ev.signal = parse_pulse_text(e.at("pulses").get<std::string>());
        } catch (const std::invalid_argument& err) {
            fail(where + ": " + err.what());
        }
    }
    return ev;
}

std::string join_path(const std::string& base_dir, const std::string& path) {
    if (path.empty()) fail("track path must not be empty");
    if (path.front() == '/' || base_dir.empty()) return path;
    return base_dir + "/" + path;
}

}  // namespace

Scenario parse_scenario_json(const std::string& json_text, const std::string& base_dir,
                             const std::vector<std::string>& overrides) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("scenario JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("scenario must be a JSON object");

    for (const auto& o : overrides) apply_override(doc, o);

    check_keys(doc, "scenario",
               {"track", "initial_pose", "chassis", "sensor_geometry", "motor_params", "control",
                "ir_events", "physics_dt", "control_period", "max_time", "assertions"});
    for (const char* key : {"track", "initial_pose", "max_time", "assertions"})
        if (!doc.contains(key)) fail(std::string("scenario is missing required key '") + key + "'");

    Scenario s;

    if (!doc.at("track").is_string()) fail("track must be a path string");
    try {
        s.track = load_track_file(join_path(base_dir, doc.at("track").get<std::string>()));
    } catch (const TrackParseError& e) {
        fail(std::string("track: ") + e.what());
    } catch (const std::runtime_error& e) {
        fail(e.what());
    }

    {
        const json& p = get_object(doc, "initial_pose");
        check_keys(p, "initial_pose", {"x", "y", "heading_deg"});
        s.initial_pose.x = require_num(p, "x", "initial_pose");
        s.initial_pose.y = require_num(p, "y", "initial_pose");
        s.initial_pose.heading =
            require_num(p, "heading_deg", "initial_pose") * std::numbers::pi / 180.0;
    }

    if (doc.contains("chassis")) {
        const json& c = get_object(doc, "chassis");
        check_keys(c, "chassis", {"wheel_radius", "track_width"});
        s.chassis.wheel_radius = get_num(c, "wheel_radius", s.chassis.wheel_radius);
        s.chassis.track_width = get_num(c, "track_width", s.chassis.track_width);
    }

    if (doc.contains("sensor_geometry")) {
        const json& g = get_object(doc, "sensor_geometry");
        check_keys(g, "sensor_geometry", {"forward_offset", "lateral_spacing", "threshold"});
        s.sensor_geometry.forward_offset = get_num(g, "forward_offset", s.sensor_geometry.forward_offset);
        s.sensor_geometry.lateral_spacing =
            get_num(g, "lateral_spacing", s.sensor_geometry.lateral_spacing);
        s.sensor_geometry.threshold = get_num(g, "threshold", s.sensor_geometry.threshold);
    }

    if (doc.contains("motor_params")) {
        const json& m = get_object(doc, "motor_params");
        check_keys(m, "motor_params", {"omega_max", "tau_drive", "tau_coast", "tau_brake"});
        s.motor_params.omega_max = get_num(m, "omega_max", s.motor_params.omega_max);
        s.motor_params.tau_drive = get_num(m, "tau_drive", s.motor_params.tau_drive);
        s.motor_params.tau_coast = get_num(m, "tau_coast", s.motor_params.tau_coast);
        s.motor_params.tau_brake = get_num(m, "tau_brake", s.motor_params.tau_brake);
    }

    if (doc.contains("control")) {
        const json& c = get_object(doc, "control");
        check_keys(c, "control",
                   {"speed", "tspeed", "turn_nudge_ms", "blink_count", "blink_on_ms", "blink_off_ms",
                    "servo_deploy_angle", "servo_home_angle", "deploy_hold_ms", "one_shot_delivery"});
        s.control.speed = get_int(c, "speed", s.control.speed);
        s.control.tspeed = get_int(c, "tspeed", s.control.tspeed);
        s.control.turn_nudge_s = get_num(c, "turn_nudge_ms", s.control.turn_nudge_s * 1000.0) / 1000.0;
        s.control.blink_count = get_int(c, "blink_count", s.control.blink_count);
        s.control.blink_on_s = get_num(c, "blink_on_ms", s.control.blink_on_s * 1000.0) / 1000.0;
        s.control.blink_off_s = get_num(c, "blink_off_ms", s.control.blink_off_s * 1000.0) / 1000.0;
        s.control.servo_deploy_angle = get_num(c, "servo_deploy_angle", s.control.servo_deploy_angle);
        s.control.servo_home_angle = get_num(c, "servo_home_angle", s.control.servo_home_angle);
        s.control.deploy_hold_s = get_num(c, "deploy_hold_ms", s.control.deploy_hold_s * 1000.0) / 1000.0;
        s.control.one_shot_delivery = get_bool(c, "one_shot_delivery", s.control.one_shot_delivery);
    }

    if (doc.contains("ir_events")) {
        const json& evs = doc.at("ir_events");
        if (!evs.is_array()) fail("ir_events must be an array");
        for (std::size_t i = 0; i < evs.size(); ++i) s.ir_events.push_back(parse_ir_event(evs[i], i));
    }

    s.physics_dt = get_num(doc, "physics_dt", s.physics_dt);
    s.control_period = get_num(doc, "control_period", s.control_period);
    s.max_time = require_num(doc, "max_time", "scenario");

    const json& asserts = doc.at("assertions");
    if (!asserts.is_array()) fail("assertions must be an array");
    for (std::size_t i = 0; i < asserts.size(); ++i)
        s.assertions.push_back(parse_assertion(asserts[i], i));

    return s;
}

Scenario load_scenario_file(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ScenarioError("cannot open scenario file: " + path);
    std::ostringstream text;
    text << f.rdbuf();

    std::string base_dir = ".";
    const std::size_t slash = path.find_last_of('/');
    if (slash != std::string::npos) base_dir = path.substr(0, slash);
    return parse_scenario_json(text.str(), base_dir, overrides);
}

}  // namespace linebot
