#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace linebot {

struct Point2 {
    double x = 0.0;  // m
    double y = 0.0;  // m
};

// The taped course as a reflectance grid. Row 0 is the minimum-y edge;
// cells are square with side 1/cells_per_meter.
struct Track {
    int width_cells = 0;
    int height_cells = 0;
    double cells_per_meter = 1000.0;
    std::vector<double> reflectance;  // row-major, values in [0,1]
    double dark_value = 0.1;
    double light_value = 0.9;

    double cell(int col, int row) const {
        return reflectance[static_cast<std::size_t>(row) * static_cast<std::size_t>(width_cells) +
                           static_cast<std::size_t>(col)];
    }
};

struct TrackParseError : std::runtime_error {
    int line;  // 1-based line number in the input
    TrackParseError(int line_, const std::string& message);
};

// Reads the TRACK v1 text format:
//   TRACK v1
//   cells_per_meter <positive integer>
//   size <width> <height>
//   <height> rows of '#'/'.', first row is the maximum-y edge
Track load_track(std::istream& in);
Track load_track_text(const std::string& text);
Track load_track_file(const std::string& path);

// Inverse of load_track on the character grid.
std::string serialize_track(const Track& track);

// Reflectance of the cell containing p. Points outside the grid read as
// light_value: the floor extends beyond the printed course.
double sample_reflectance(const Track& track, Point2 p);

}  // namespace linebot
