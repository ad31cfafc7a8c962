#pragma once

#include <stdexcept>
#include <vector>

namespace linebot {

enum class CircuitFault { NonPositiveDrop, NonPositiveCurrent, NonPositiveResistance, NoSuitableValue };

struct CircuitError : std::runtime_error {
    CircuitFault fault;
    CircuitError(CircuitFault fault_, const std::string& message);
};

// R = (Vs - Vf) / I for an indicator diode fed from a supply rail.
double series_resistor(double supply_v, double forward_v, double current_a);

// I = (Vs - Vf) / R.
double led_current(double supply_v, double forward_v, double resistor_ohm);

// Smallest kit value that limits current at least as hard as computed_ohm.
// An exact kit match is rounded up to the next value so the built circuit
// always carries margin; kit must be strictly ascending.
double pick_kit_resistor(double computed_ohm, const std::vector<double>& kit);

const std::vector<double>& default_resistor_kit();

}  // namespace linebot
