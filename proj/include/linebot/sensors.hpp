#pragma once

#include <array>

#include "linebot/kinematics.hpp"
#include "linebot/track.hpp"

namespace linebot {

struct SensorGeometry {
    double forward_offset = 0.06;    // m ahead of the axle midpoint
    double lateral_spacing = 0.013;  // m from centerline to the side elements
    double threshold = 0.5;          // reflectance below this reads as tape
};

// true = over the dark tape, false = over the bright floor.
struct SensorReading {
    bool left = false;
    bool middle = false;
    bool right = false;
    bool operator==(const SensorReading&) const = default;
};

// World positions of the left, middle, right elements for a given pose.
std::array<Point2, 3> sensor_positions(const Pose& pose, const SensorGeometry& geom);

SensorReading read_sensors(const Track& track, const Pose& pose, const SensorGeometry& geom);

}  // namespace linebot
