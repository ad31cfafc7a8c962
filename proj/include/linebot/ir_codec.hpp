#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace linebot {

using IrCode = std::uint32_t;

enum class PulseLevel : std::uint8_t { Mark, Space };

struct Pulse {
    PulseLevel level;
    double duration_us;
};

using PulseTrain = std::vector<Pulse>;

struct NecTiming {
    double header_mark_us = 9000.0;
    double header_space_us = 4500.0;
    double bit_mark_us = 560.0;
    double zero_space_us = 560.0;
    double one_space_us = 1690.0;
    double stop_mark_us = 560.0;
    double repeat_space_us = 2250.0;
    double tolerance_fraction = 0.25;  // relative window per pulse
};

enum class NecStatus { Ok, Repeat, BadHeader, BadBit, Truncated };

struct NecDecodeResult {
    NecStatus status = NecStatus::Truncated;
    IrCode code = 0;
    int bit_index = -1;  // which bit failed, for BadBit; 32 means the stop mark
    bool ok() const { return status == NecStatus::Ok; }
};

enum class Button { One = 1, Two = 2 };

// 32 bits MSB-first: header, 32 mark/space bit pairs, stop mark. 67 pulses.
PulseTrain encode_nec(IrCode code, const NecTiming& timing = {});
NecDecodeResult decode_nec(const PulseTrain& train, const NecTiming& timing = {});

// Remote buttons the robot firmware reacts to: One = go, Two = stop.
IrCode button_code(Button button);

// Consumer remotes send the command byte followed by its complement.
bool command_complement_ok(IrCode code);

// Text form: whitespace-separated integers, positive = mark us, negative = space us.
std::string format_pulse_text(const PulseTrain& train);
PulseTrain parse_pulse_text(const std::string& text);  // throws std::invalid_argument

std::string format_ir_code(IrCode code);  // "0x00FF6897"

}  // namespace linebot
