#include <doctest.h>

#include <cmath>
#include <numbers>

#include "linebot/sensors.hpp"
#include "track_painter.hpp"

using namespace linebot;

namespace {

// 18 mm tape along y = 0.1 on a 0.6 x 0.2 m board, 1 mm cells.
Track horizontal_tape() {
    TrackPainter p(0.6, 0.2, 1000);
    p.segment({0.0, 0.1}, {0.6, 0.1}, 0.018);
    return p.to_track();
}

}  // namespace

TEST_CASE("sensors: positions sit forward of the axle, left-middle-right") {
    const SensorGeometry geom{};
    const Pose pose{0.2, 0.1, 0.0};
    const auto pos = sensor_positions(pose, geom);
    // Facing +x: forward offset adds to x, left is +y, right is -y.
    CHECK(pos[0].x == doctest::Approx(0.26));
    CHECK(pos[0].y == doctest::Approx(0.1 + 0.013));
    CHECK(pos[1].x == doctest::Approx(0.26));
    CHECK(pos[1].y == doctest::Approx(0.1));
    CHECK(pos[2].x == doctest::Approx(0.26));
    CHECK(pos[2].y == doctest::Approx(0.1 - 0.013));
}

TEST_CASE("sensors: positions rotate with the heading") {
    const SensorGeometry geom{};
    const Pose pose{0.0, 0.0, std::numbers::pi / 2.0};  // facing +y
    const auto pos = sensor_positions(pose, geom);
    CHECK(pos[1].x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(pos[1].y == doctest::Approx(0.06));
    // Left of travel now points toward -x.
    CHECK(pos[0].x == doctest::Approx(-0.013));
    CHECK(pos[2].x == doctest::Approx(0.013));
}

TEST_CASE("sensors: centered on tape reads (0,1,0)") {
    const Track track = horizontal_tape();
    const SensorGeometry geom{};
    // Tape covers |y - 0.1| <= 9 mm; side sensors at +-13 mm are off it.
    CHECK(read_sensors(track, {0.2, 0.1, 0.0}, geom) == SensorReading{false, true, false});
}

TEST_CASE("sensors: lateral offset fires the sensor on the side the tape moved to") {
    const Track track = horizontal_tape();
    const SensorGeometry geom{};
    // 5 mm left of the line: middle still on the 9 mm-half-width tape, and the
    // right sensor (13 mm arm) now sits 8 mm from the tape center -- also on.
    CHECK(read_sensors(track, {0.2, 0.105, 0.0}, geom) == SensorReading{false, true, true});
    // 18 mm left: only the right sensor holds the tape.
    CHECK(read_sensors(track, {0.2, 0.118, 0.0}, geom) == SensorReading{false, false, true});
    // Mirrored for a rightward shift.
    CHECK(read_sensors(track, {0.2, 0.095, 0.0}, geom) == SensorReading{true, true, false});
    CHECK(read_sensors(track, {0.2, 0.082, 0.0}, geom) == SensorReading{true, false, false});
}

TEST_CASE("sensors: all dark over a crossbar, all light off the course") {
    TrackPainter p(0.3, 0.3, 1000);
    p.rect(0.1, 0.0, 0.2, 0.3);
    const Track track = p.to_track();
    const SensorGeometry geom{};
    CHECK(read_sensors(track, {0.09, 0.15, 0.0}, geom) == SensorReading{true, true, true});
    CHECK(read_sensors(track, {0.25, 0.15, 0.0}, geom) == SensorReading{false, false, false});
    // Off the board entirely: light floor.
    CHECK(read_sensors(track, {5.0, 5.0, 0.0}, geom) == SensorReading{false, false, false});
}

TEST_CASE("sensors: threshold splits dark from light") {
    Track track;
    track.width_cells = 1;
    track.height_cells = 1;
    track.cells_per_meter = 1.0;
    track.reflectance = {0.49};
    const Pose pose{0.5, 0.5, 0.0};
    SensorGeometry geom{};
    geom.forward_offset = 0.0;
    geom.lateral_spacing = 0.001;
    CHECK(read_sensors(track, pose, geom).middle == true);  // 0.49 < 0.5
    geom.threshold = 0.49;                                  // strict less: equal reads light
    CHECK(read_sensors(track, pose, geom).middle == false);
}
