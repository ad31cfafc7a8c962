#include "linebot/trace_io.hpp"

#include <json.hpp>

namespace linebot {

namespace {

// Shortest round-trip formatting, shared by both output formats.
std::string number(double v) { return nlohmann::json(v).dump(); }

std::string sensor_bits(const SensorReading& s) {
    std::string bits = "000";
    bits[0] = s.left ? '1' : '0';
    bits[1] = s.middle ? '1' : '0';
    bits[2] = s.right ? '1' : '0';
    return bits;
}

}  // namespace

std::string trace_record_to_json(const TraceRecord& rec) {
    nlohmann::ordered_json j;
    j["t"] = rec.t;
    j["x"] = rec.x;
    j["y"] = rec.y;
    j["heading"] = rec.heading;
    j["sensors"] = {rec.sensors.left ? 1 : 0, rec.sensors.middle ? 1 : 0, rec.sensors.right ? 1 : 0};
    j["duty_left"] = rec.duty_left;
    j["duty_right"] = rec.duty_right;
    j["mode_left"] = to_string(rec.mode_left);
    j["mode_right"] = to_string(rec.mode_right);
    j["omega_left"] = rec.omega_left;
    j["omega_right"] = rec.omega_right;
    j["master_enable"] = rec.master_enable ? 1 : 0;
    j["led"] = rec.led ? 1 : 0;
    j["servo_angle"] = rec.servo_angle;
    if (rec.ir_decoded) j["ir_decoded"] = *rec.ir_decoded;
    return j.dump();
}

std::string trace_to_jsonl(const std::vector<TraceRecord>& trace) {
    std::string out;
    for (const auto& rec : trace) {
        out += trace_record_to_json(rec);
        out += '\n';
    }
    return out;
}

const char* const kTraceCsvHeader =
    "t,x,y,heading,sensors,duty_left,duty_right,mode_left,mode_right,"
    "omega_left,omega_right,master_enable,led,servo_angle,ir_decoded";

std::string trace_to_csv(const std::vector<TraceRecord>& trace) {
    std::string out = kTraceCsvHeader;
    out += '\n';
    for (const auto& rec : trace) {
        out += number(rec.t);
        out += ',';
        out += number(rec.x);
        out += ',';
        out += number(rec.y);
        out += ',';
        out += number(rec.heading);
        out += ',';
        out += sensor_bits(rec.sensors);
        out += ',';
        out += std::to_string(rec.duty_left);
        out += ',';
        out += std::to_string(rec.duty_right);
        out += ',';
        out += to_string(rec.mode_left);
        out += ',';
        out += to_string(rec.mode_right);
        out += ',';
        out += number(rec.omega_left);
        out += ',';
        out += number(rec.omega_right);
        out += ',';
        out += rec.master_enable ? '1' : '0';
        out += ',';
        out += rec.led ? '1' : '0';
        out += ',';
        out += number(rec.servo_angle);
        out += ',';
        if (rec.ir_decoded) out += *rec.ir_decoded;
        out += '\n';
    }
    return out;
}

}  // namespace linebot
