#include "linebot/sensors.hpp"

#include <cmath>

namespace linebot {

std::array<Point2, 3> sensor_positions(const Pose& pose, const SensorGeometry& geom) {
    const double c = std::cos(pose.heading);
    const double s = std::sin(pose.heading);
    // Body frame: +x forward, +y left of travel.
    auto world = [&](double fwd, double lat) {
        return Point2{pose.x + fwd * c - lat * s, pose.y + fwd * s + lat * c};
    };
    return {world(geom.forward_offset, geom.lateral_spacing),   // left
            world(geom.forward_offset, 0.0),                    // middle
            world(geom.forward_offset, -geom.lateral_spacing)}; // right
}

SensorReading read_sensors(const Track& track, const Pose& pose, const SensorGeometry& geom) {
    const auto pos = sensor_positions(pose, geom);
    auto dark = [&](const Point2& p) { return sample_reflectance(track, p) < geom.threshold; };
    return SensorReading{dark(pos[0]), dark(pos[1]), dark(pos[2])};
}

}  // namespace linebot
