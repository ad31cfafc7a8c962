#include <doctest.h>

#include <sstream>

#include "linebot/trace_io.hpp"

using namespace linebot;

namespace {

TraceRecord sample_record() {
    TraceRecord rec;
    rec.t = 0.25;
    rec.x = 1.5;
    rec.y = -0.125;
    rec.heading = 0.5;
    rec.sensors = {true, true, false};
    rec.duty_left = 100;
    rec.duty_right = 120;
    rec.mode_left = ChannelMode::CW;
    rec.mode_right = ChannelMode::CCW;
    rec.omega_left = 7.5;
    rec.omega_right = -3.25;
    rec.master_enable = true;
    rec.led = false;
    rec.servo_angle = 12.5;
    return rec;
}

}  // namespace

TEST_CASE("trace: jsonl keys appear in record order") {
    const std::string line = trace_record_to_json(sample_record());
    std::size_t pos = 0;
    for (const char* key :
         {"\"t\":", "\"x\":", "\"y\":", "\"heading\":", "\"sensors\":", "\"duty_left\":",
          "\"duty_right\":", "\"mode_left\":", "\"mode_right\":", "\"omega_left\":",
          "\"omega_right\":", "\"master_enable\":", "\"led\":", "\"servo_angle\":"}) {
        const std::size_t found = line.find(key);
        REQUIRE(found != std::string::npos);
        CHECK(found >= pos);
        pos = found;
    }
    // No decode this tick: the optional key is absent entirely.
    CHECK(line.find("ir_decoded") == std::string::npos);
}

TEST_CASE("trace: values render faithfully") {
    const std::string line = trace_record_to_json(sample_record());
    CHECK(line.find("\"t\":0.25") != std::string::npos);
    CHECK(line.find("\"sensors\":[1,1,0]") != std::string::npos);
    CHECK(line.find("\"mode_left\":\"CW\"") != std::string::npos);
    CHECK(line.find("\"mode_right\":\"CCW\"") != std::string::npos);
    CHECK(line.find("\"master_enable\":1") != std::string::npos);
    CHECK(line.find("\"led\":0") != std::string::npos);
    CHECK(line.find("\"omega_right\":-3.25") != std::string::npos);
}

TEST_CASE("trace: decoded codes appear as uppercase hex strings") {
    TraceRecord rec = sample_record();
    rec.ir_decoded = "0x00FF6897";
    const std::string line = trace_record_to_json(rec);
    CHECK(line.find("\"ir_decoded\":\"0x00FF6897\"") != std::string::npos);
}

TEST_CASE("trace: jsonl emits one line per record") {
    const std::vector<TraceRecord> trace = {sample_record(), sample_record()};
    const std::string text = trace_to_jsonl(trace);
    std::istringstream ss(text);
    std::string line;
    int lines = 0;
    while (std::getline(ss, line)) {
        ++lines;
        CHECK(line.front() == '{');
        CHECK(line.back() == '}');
    }
    CHECK(lines == 2);
    CHECK(text.back() == '\n');
}

TEST_CASE("trace: csv header matches the jsonl key order") {
    CHECK(std::string(kTraceCsvHeader) ==
          "t,x,y,heading,sensors,duty_left,duty_right,mode_left,mode_right,"
          "omega_left,omega_right,master_enable,led,servo_angle,ir_decoded");
}

TEST_CASE("trace: csv rows pack the sensors as a bit string") {
    TraceRecord rec = sample_record();
    rec.ir_decoded = "repeat";
    const std::string text = trace_to_csv({rec});
    std::istringstream ss(text);
    std::string header, row;
    REQUIRE(std::getline(ss, header));
    REQUIRE(std::getline(ss, row));
    CHECK(header == kTraceCsvHeader);
    CHECK(row == "0.25,1.5,-0.125,0.5,110,100,120,CW,CCW,7.5,-3.25,1,0,12.5,repeat");
}

TEST_CASE("trace: csv leaves the decode column empty when absent") {
    const std::string text = trace_to_csv({sample_record()});
    const std::size_t newline = text.find('\n');
    const std::string row = text.substr(newline + 1, text.size() - newline - 2);
    CHECK(row.back() == ',');
}
