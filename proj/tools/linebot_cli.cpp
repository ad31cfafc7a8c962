#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linebot/electrical.hpp"
#include "linebot/ir_codec.hpp"
#include "linebot/scenario_json.hpp"
#include "linebot/sim_engine.hpp"
#include "linebot/trace_io.hpp"

namespace {

using namespace linebot;

std::string fmt(double v) {
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

int run_simulate(const std::string& scenario_path, const std::vector<std::string>& overrides,
                 std::optional<double> max_time, const std::string& trace_path,
                 const std::string& format) {
    Scenario scenario;
    try {
        scenario = load_scenario_file(scenario_path, overrides);
        if (max_time) scenario.max_time = *max_time;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    SimResult result;
    try {
        result = run_scenario(scenario);
    } catch (const ScenarioError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (!trace_path.empty()) {
        std::ofstream f(trace_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write trace file: " << trace_path << "\n";
            return 2;
        }
        f << (format == "csv" ? trace_to_csv(result.trace) : trace_to_jsonl(result.trace));
    }

    int passed = 0;
    for (const auto& outcome : result.assertion_outcomes) {
        if (outcome.pass) ++passed;
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << describe_assertion(outcome.assertion)
                  << " — " << outcome.detail << "\n";
    }
    std::cout << passed << "/" << result.assertion_outcomes.size() << " assertions passed; simulated "
              << fmt(result.end_time) << " s, " << result.trace.size() << " trace records\n";
    return result.all_passed() ? 0 : 1;
}

int run_validate(const std::string& scenario_path, const std::vector<std::string>& overrides) {
    try {
        const Scenario scenario = load_scenario_file(scenario_path, overrides);
        validate_scenario(scenario);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << "ok\n";
    return 0;
}

int run_truth_table() {
    std::cout << "IN1 IN2 PWM STBY -> mode\n";
    for (Level in1 : {Level::L, Level::H})
        for (Level in2 : {Level::L, Level::H})
            for (int pwm : {0, 255})
                for (Level stby : {Level::L, Level::H}) {
                    const ChannelMode mode = channel_mode({in1, in2, pwm, stby});
                    std::cout << (in1 == Level::H ? "H" : "L") << "   " << (in2 == Level::H ? "H" : "L")
                              << "   " << (pwm > 0 ? "H" : "L") << "   " << (stby == Level::H ? "H" : "L")
                              << "    -> " << to_string(mode) << "\n";
                }
    return 0;
}

int run_ir_encode(const std::string& hex) {
    unsigned long code = 0;
    try {
        std::size_t used = 0;
        code = std::stoul(hex, &used, 16);
        if (used != hex.size() || code > 0xFFFFFFFFul) throw std::invalid_argument(hex);
    } catch (const std::exception&) {
        std::cerr << "error: not a 32-bit hex code: " << hex << "\n";
        return 2;
    }
    std::cout << format_pulse_text(encode_nec(static_cast<IrCode>(code))) << "\n";
    return 0;
}

int run_ir_decode() {
    std::ostringstream text;
    text << std::cin.rdbuf();
    PulseTrain train;
    try {
        train = parse_pulse_text(text.str());
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const NecDecodeResult res = decode_nec(train);
    switch (res.status) {
        case NecStatus::Ok:
            std::cout << format_ir_code(res.code) << "\n";
            return 0;
        case NecStatus::Repeat:
            std::cout << "repeat\n";
            return 0;
        case NecStatus::BadHeader:
            std::cerr << "error: bad header\n";
            return 2;
        case NecStatus::BadBit:
            std::cerr << "error: bad bit " << res.bit_index << "\n";
            return 2;
        case NecStatus::Truncated:
            std::cerr << "error: truncated train\n";
            return 2;
    }
    return 2;
}

int run_resistor(double supply, double forward, double current_ma) {
    try {
        const double computed = series_resistor(supply, forward, current_ma / 1000.0);
        const double kit = pick_kit_resistor(computed, default_resistor_kit());
        const double actual_ma = led_current(supply, forward, kit) * 1000.0;
        std::cout << "computed " << fmt(computed) << " ohm\n";
        std::cout << "kit " << fmt(kit) << " ohm\n";
        std::cout << "current " << fmt(actual_ma) << " mA\n";
    } catch (const CircuitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Desk-scale simulator of a tape-guided delivery robot"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string trace_path;
    std::string format = "jsonl";
    std::vector<std::string> overrides;
    std::optional<double> max_time;

    auto* simulate = app.add_subcommand("simulate", "Run a scenario and check its assertions");
    simulate->add_option("scenario", scenario_path, "Scenario JSON file")->required();
    simulate->add_option("--trace", trace_path, "Write the control-boundary trace to this file");
    simulate->add_option("--format", format, "Trace format")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    simulate->add_option("--max-time", max_time, "Override the scenario's simulated duration (s)")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--override", overrides, "Dotted-key override, e.g. control.speed=120");

    std::string validate_path;
    std::vector<std::string> validate_overrides;
    auto* validate = app.add_subcommand("validate", "Parse and validate a scenario without running it");
    validate->add_option("scenario", validate_path, "Scenario JSON file")->required();
    validate->add_option("--override", validate_overrides, "Dotted-key override");

    auto* truth = app.add_subcommand("truth-table", "Print the motor-driver mode for all input rows");

    auto* ir = app.add_subcommand("ir", "Remote-control codec utilities");
    ir->require_subcommand(1);
    std::string encode_hex;
    auto* ir_encode = ir->add_subcommand("encode", "Encode a hex code as a mark/space pulse train");
    ir_encode->add_option("code", encode_hex, "32-bit code, e.g. 0x00FF6897")->required();
    auto* ir_decode = ir->add_subcommand("decode", "Decode a pulse train read from standard input");

    double supply = 0.0, forward = 0.0, current_ma = 0.0;
    auto* resistor = app.add_subcommand("resistor", "Size an indicator-diode series resistor");
    resistor->add_option("supply", supply, "Supply voltage (V)")->required();
    resistor->add_option("forward", forward, "Diode forward voltage (V)")->required();
    resistor->add_option("current", current_ma, "Target current (mA)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (simulate->parsed()) return run_simulate(scenario_path, overrides, max_time, trace_path, format);
    if (validate->parsed()) return run_validate(validate_path, validate_overrides);
    if (truth->parsed()) return run_truth_table();
    if (ir->parsed()) {
        if (ir_encode->parsed()) return run_ir_encode(encode_hex);
        if (ir_decode->parsed()) return run_ir_decode();
    }
    if (resistor->parsed()) return run_resistor(supply, forward, current_ma);
    return 2;
}
