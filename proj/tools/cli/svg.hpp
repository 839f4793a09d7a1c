#pragma once

#include <array>
#include <string>
#include <vector>

#include "tropdegen/tropical.hpp"

namespace tropdegen::cli {

/// Minimal SVG writer over a world-coordinate box (y axis pointing up).
/// Coordinates are emitted in pixels rounded to 1e-3, so output is stable
/// and diffable.
class SvgCanvas {
 public:
  SvgCanvas(const Box2& world, int width_px = 480, int height_px = 480);

  void line(const Point2& a, const Point2& b, const std::string& stroke, double width = 1.5);
  void polyline(const std::vector<Point2>& pts, const std::string& stroke, double width = 1.5,
                bool closed = false);
  void dot(const Point2& p, double radius_px, const std::string& fill, double opacity = 1.0);
  void text(const Point2& p, const std::string& label, int size_px = 12);
  /// Light axes through the origin when it is inside the box.
  void axes();
  void title(const std::string& label);

  std::string str() const;

 private:
  std::array<double, 2> to_px(const Point2& p) const;

  Box2 world_;
  int width_;
  int height_;
  std::vector<std::string> body_;
};

}  // namespace tropdegen::cli
