#include "linebot/ir_codec.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace linebot {

PulseTrain encode_nec(IrCode code, const NecTiming& t) {
    PulseTrain out;
    out.reserve(67);
    out.push_back({PulseLevel::Mark, t.header_mark_us});
    out.push_back({PulseLevel::Space, t.header_space_us});
    for (int i = 31; i >= 0; --i) {
        out.push_back({PulseLevel::Mark, t.bit_mark_us});
        const bool one = (code >> i) & 1u;
        out.push_back({PulseLevel::Space, one ? t.one_space_us : t.zero_space_us});
    }
    out.push_back({PulseLevel::Mark, t.stop_mark_us});
    return out;
}

NecDecodeResult decode_nec(const PulseTrain& train, const NecTiming& t) {
    auto within = [&](const Pulse& p, PulseLevel level, double nominal) {
        return p.level == level &&
               std::abs(p.duration_us - nominal) <= t.tolerance_fraction * nominal;
    };

    if (train.size() < 2) return {NecStatus::Truncated, 0, -1};
    if (!within(train[0], PulseLevel::Mark, t.header_mark_us)) return {NecStatus::BadHeader, 0, -1};

    // Repeat frames share the header mark but use the short space.
    if (within(train[1], PulseLevel::Space, t.repeat_space_us)) {
        if (train.size() < 3) return {NecStatus::Truncated, 0, -1};
        if (!within(train[2], PulseLevel::Mark, t.stop_mark_us)) return {NecStatus::BadHeader, 0, -1};
        return {NecStatus::Repeat, 0, -1};
    }

    if (!within(train[1], PulseLevel::Space, t.header_space_us)) return {NecStatus::BadHeader, 0, -1};
    if (train.size() < 67) return {NecStatus::Truncated, 0, -1};

    IrCode code = 0;
    for (int i = 0; i < 32; ++i) {
        const Pulse& mark = train[static_cast<std::size_t>(2 + 2 * i)];
        const Pulse& space = train[static_cast<std::size_t>(3 + 2 * i)];
        if (!within(mark, PulseLevel::Mark, t.bit_mark_us)) return {NecStatus::BadBit, 0, i};
        const bool one = within(space, PulseLevel::Space, t.one_space_us);
        if (!one && !within(space, PulseLevel::Space, t.zero_space_us))
            return {NecStatus::BadBit, 0, i};
        code = (code << 1) | (one ? 1u : 0u);
    }
    if (!within(train[66], PulseLevel::Mark, t.stop_mark_us)) return {NecStatus::BadBit, 0, 32};
    return {NecStatus::Ok, code, -1};
}

IrCode button_code(Button button) {
    switch (button) {
        case Button::One: return 0x00FF6897u;
        case Button::Two: return 0x00FF9867u;
    }
    return 0;
}

bool command_complement_ok(IrCode code) {
    const unsigned cmd = (code >> 8) & 0xFFu;
    const unsigned inv = code & 0xFFu;
    return (cmd ^ inv) == 0xFFu;
}

std::string format_pulse_text(const PulseTrain& train) {
    std::ostringstream out;
    for (std::size_t i = 0; i < train.size(); ++i) {
        if (i) out << ' ';
        const long long us = std::llround(train[i].duration_us);
        out << (train[i].level == PulseLevel::Mark ? us : -us);
    }
    return out.str();
}

PulseTrain parse_pulse_text(const std::string& text) {
    std::istringstream ss(text);
    PulseTrain train;
    std::string token;
    while (ss >> token) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad pulse entry: " + token);
        }
        if (used != token.size() || value == 0)
            throw std::invalid_argument("bad pulse entry: " + token);
        const PulseLevel level = value > 0 ? PulseLevel::Mark : PulseLevel::Space;
        const PulseLevel expected =
            train.size() % 2 == 0 ? PulseLevel::Mark : PulseLevel::Space;
        if (level != expected)
            throw std::invalid_argument("pulse entries must alternate mark/space: " + token);
        train.push_back({level, static_cast<double>(value > 0 ? value : -value)});
    }
    if (train.empty()) throw std::invalid_argument("empty pulse train");
    return train;
}

std::string format_ir_code(IrCode code) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%08X", code);
    return buf;
}

}  // namespace linebot
