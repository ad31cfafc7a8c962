// Regenerates the committed track fixtures under scenarios/tracks/.
#include <fstream>
#include <iostream>
#include <string>

#include "track_painter.hpp"

namespace {

constexpr double kTape = 0.018;  // m
constexpr int kCpm = 500;        // 2 mm cells

void write(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(1);
    }
    f << text;
    std::cout << path << "\n";
}

std::string straight() {
    linebot::TrackPainter p(2.4, 0.2, kCpm);
    p.segment({0.02, 0.1}, {2.38, 0.1}, kTape);
    return p.to_text();
}

// Stadium: two straights joined by two semicircular arcs, run counterclockwise.
std::string loop() {
    linebot::TrackPainter p(1.52, 0.9, kCpm);
    p.segment({0.35, 0.15}, {1.15, 0.15}, kTape);
    p.segment({0.35, 0.75}, {1.15, 0.75}, kTape);
    p.arc({1.15, 0.45}, 0.30, -90.0, 90.0, kTape);
    p.arc({0.35, 0.45}, 0.30, 90.0, 270.0, kTape);
    return p.to_text();
}

// Straight approach ending in a deep crossbar that spans the sensor row.
std::string delivery() {
    linebot::TrackPainter p(0.8, 0.2, kCpm);
    p.segment({0.02, 0.1}, {0.40, 0.1}, kTape);
    p.rect(0.40, 0.02, 0.55, 0.18);
    return p.to_text();
}

std::string blank() {
    linebot::TrackPainter p(0.5, 0.5, kCpm);
    return p.to_text();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "scenarios/tracks";
    write(dir + "/straight.track", straight());
    write(dir + "/loop.track", loop());
    write(dir + "/delivery.track", delivery());
    write(dir + "/blank.track", blank());
    return 0;
}
