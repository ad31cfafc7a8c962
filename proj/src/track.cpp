#include "linebot/track.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace linebot {

TrackParseError::TrackParseError(int line_, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}

namespace {

// Whole non-negative integer, nothing else in the token.
bool parse_int(const std::string& token, long long& out) {
    if (token.empty()) return false;
    for (char c : token) {
        if (c < '0' || c > '9') return false;
    }
    try {
        out = std::stoll(token);
    } catch (const std::out_of_range&) {
        return false;
    }
    return true;
}

}  // namespace

Track load_track(std::istream& in) {
    std::string line;
    int line_no = 0;

    auto next_line = [&](const char* what) {
        if (!std::getline(in, line)) throw TrackParseError(line_no + 1, std::string("missing ") + what);
        ++line_no;
    };

    next_line("header");
    if (line != "TRACK v1") throw TrackParseError(line_no, "expected 'TRACK v1'");

    next_line("cells_per_meter");
    double cells_per_meter = 0.0;
    {
        std::istringstream ss(line);
        std::string key, value, extra;
        ss >> key >> value;
        if (key != "cells_per_meter" || value.empty() || (ss >> extra))
            throw TrackParseError(line_no, "expected 'cells_per_meter <n>'");
        long long n = 0;
        if (!parse_int(value, n) || n <= 0)
            throw TrackParseError(line_no, "cells_per_meter must be a positive integer");
        cells_per_meter = static_cast<double>(n);
    }

    next_line("size");
    long long width = 0, height = 0;
    {
        std::istringstream ss(line);
        std::string key, w, h, extra;
        ss >> key >> w >> h;
        if (key != "size" || (ss >> extra) || !parse_int(w, width) || !parse_int(h, height) ||
            width < 1 || height < 1)
            throw TrackParseError(line_no, "expected 'size <width> <height>' with positive integers");
    }

    Track track;
    track.width_cells = static_cast<int>(width);
    track.height_cells = static_cast<int>(height);
    track.cells_per_meter = cells_per_meter;
    track.reflectance.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                             track.light_value);

    // Rows arrive top edge first.
    for (long long row = height - 1; row >= 0; --row) {
        next_line("row");
        if (static_cast<long long>(line.size()) != width)
            throw TrackParseError(line_no, "row length mismatch");
        for (long long col = 0; col < width; ++col) {
            const char c = line[static_cast<std::size_t>(col)];
            double value;
            if (c == '#')
                value = track.dark_value;
            else if (c == '.')
                value = track.light_value;
            else
                throw TrackParseError(line_no, std::string("unknown cell character '") + c + "'");
            track.reflectance[static_cast<std::size_t>(row) * static_cast<std::size_t>(width) +
                              static_cast<std::size_t>(col)] = value;
        }
    }

    if (std::getline(in, line)) throw TrackParseError(line_no + 1, "trailing content after last row");
    return track;
}

Track load_track_text(const std::string& text) {
    std::istringstream ss(text);
    return load_track(ss);
}

Track load_track_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open track file: " + path);
    return load_track(f);
}

std::string serialize_track(const Track& track) {
    std::ostringstream out;
    out << "TRACK v1\n";
    out << "cells_per_meter " << static_cast<long long>(std::llround(track.cells_per_meter)) << "\n";
    out << "size " << track.width_cells << " " << track.height_cells << "\n";
    const double split = 0.5 * (track.dark_value + track.light_value);
    for (int row = track.height_cells - 1; row >= 0; --row) {
        for (int col = 0; col < track.width_cells; ++col) out << (track.cell(col, row) < split ? '#' : '.');
        out << '\n';
    }
    return out.str();
}

double sample_reflectance(const Track& track, Point2 p) {
    const double col = std::floor(p.x * track.cells_per_meter);
    const double row = std::floor(p.y * track.cells_per_meter);
    if (col < 0.0 || row < 0.0 || col >= track.width_cells || row >= track.height_cells)
        return track.light_value;
    return track.cell(static_cast<int>(col), static_cast<int>(row));
}

}  // namespace linebot
