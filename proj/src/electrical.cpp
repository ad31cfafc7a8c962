#include "linebot/electrical.hpp"

namespace linebot {

CircuitError::CircuitError(CircuitFault fault_, const std::string& message)
    : std::runtime_error(message), fault(fault_) {}

double series_resistor(double supply_v, double forward_v, double current_a) {
    if (supply_v - forward_v <= 0.0)
        throw CircuitError(CircuitFault::NonPositiveDrop,
                           "supply must exceed the diode forward voltage");
    if (current_a <= 0.0)
        throw CircuitError(CircuitFault::NonPositiveCurrent, "target current must be positive");
    return (supply_v - forward_v) / current_a;
}

double led_current(double supply_v, double forward_v, double resistor_ohm) {
    if (resistor_ohm <= 0.0)
        throw CircuitError(CircuitFault::NonPositiveResistance, "resistance must be positive");
    if (supply_v - forward_v <= 0.0)
        throw CircuitError(CircuitFault::NonPositiveDrop,
                           "supply must exceed the diode forward voltage");
    return (supply_v - forward_v) / resistor_ohm;
}

double pick_kit_resistor(double computed_ohm, const std::vector<double>& kit) {
    if (kit.empty()) throw CircuitError(CircuitFault::NoSuitableValue, "resistor kit is empty");
    for (std::size_t i = 1; i < kit.size(); ++i) {
        if (!(kit[i] > kit[i - 1])) throw std::invalid_argument("kit values must be strictly ascending");
    }
    for (std::size_t i = 0; i < kit.size(); ++i) {
        if (kit[i] == computed_ohm) {
            // Exact hit: take the next value up so the real part still limits
            // current below the target once tolerances bite.
            if (i + 1 < kit.size()) return kit[i + 1];
            throw CircuitError(CircuitFault::NoSuitableValue,
                               "no kit value above the computed resistance");
        }
        if (kit[i] > computed_ohm) return kit[i];
    }
    throw CircuitError(CircuitFault::NoSuitableValue, "no kit value at or above the computed resistance");
}

const std::vector<double>& default_resistor_kit() {
    static const std::vector<double> kit = {100.0, 150.0, 220.0, 330.0, 470.0, 680.0, 1000.0,
                                            1500.0, 2200.0, 3300.0, 4700.0, 6800.0, 10000.0};
    return kit;
}

}  // namespace linebot
