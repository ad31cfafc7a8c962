#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "linebot/track.hpp"

namespace linebot {

// Paints tape shapes onto a cell grid and emits TRACK v1 text. A cell is
// dark when its center lies within half the tape width of the shape.
class TrackPainter {
  public:
    TrackPainter(double width_m, double height_m, int cells_per_meter)
        : cpm_(cells_per_meter),
          width_(static_cast<int>(std::lround(width_m * cells_per_meter))),
          height_(static_cast<int>(std::lround(height_m * cells_per_meter))),
          dark_(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_), false) {}

    void segment(Point2 a, Point2 b, double tape_width_m) {
        const double half = tape_width_m / 2.0;
        for_each_cell([&](double x, double y) { return dist_to_segment({x, y}, a, b) <= half; });
    }

    // CCW arc from start_deg to end_deg around center.
    void arc(Point2 center, double radius, double start_deg, double end_deg, double tape_width_m) {
        const double half = tape_width_m / 2.0;
        const double start = deg2rad(start_deg);
        double sweep = deg2rad(end_deg) - start;
        while (sweep < 0.0) sweep += 2.0 * std::numbers::pi;
        for_each_cell([&](double x, double y) {
            const double dx = x - center.x;
            const double dy = y - center.y;
            const double r = std::hypot(dx, dy);
            if (std::abs(r - radius) > half) return false;
            double rel = std::atan2(dy, dx) - start;
            while (rel < 0.0) rel += 2.0 * std::numbers::pi;
            return rel <= sweep;
        });
    }

    void rect(double x0, double y0, double x1, double y1) {
        for_each_cell([&](double x, double y) { return x >= x0 && x <= x1 && y >= y0 && y <= y1; });
    }

    std::string to_text() const {
        std::string out = "TRACK v1\n";
        out += "cells_per_meter " + std::to_string(cpm_) + "\n";
        out += "size " + std::to_string(width_) + " " + std::to_string(height_) + "\n";
        for (int row = height_ - 1; row >= 0; --row) {
            for (int col = 0; col < width_; ++col)
                out += dark_[static_cast<std::size_t>(row) * width_ + col] ? '#' : '.';
            out += '\n';
        }
        return out;
    }

    Track to_track() const { return load_track_text(to_text()); }

  private:
    static double deg2rad(double d) { return d * std::numbers::pi / 180.0; }

    static double dist_to_segment(Point2 p, Point2 a, Point2 b) {
        const double abx = b.x - a.x, aby = b.y - a.y;
        const double apx = p.x - a.x, apy = p.y - a.y;
        const double len2 = abx * abx + aby * aby;
        const double t = len2 > 0.0 ? std::clamp((apx * abx + apy * aby) / len2, 0.0, 1.0) : 0.0;
        return std::hypot(apx - t * abx, apy - t * aby);
    }

    template <class Pred>
    void for_each_cell(Pred inside) {
        for (int row = 0; row < height_; ++row) {
            const double y = (row + 0.5) / cpm_;
            for (int col = 0; col < width_; ++col) {
                const double x = (col + 0.5) / cpm_;
                if (inside(x, y)) dark_[static_cast<std::size_t>(row) * width_ + col] = true;
            }
        }
    }

    int cpm_;
    int width_;
    int height_;
    std::vector<bool> dark_;
};

}  // namespace linebot
