#include "cli/svg.hpp"

#include <cmath>

#include "tropdegen/io.hpp"

namespace tropdegen::cli {

namespace {

std::string px(double v) { return format_double(std::round(v * 1000.0) / 1000.0); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SvgCanvas::SvgCanvas(const Box2& world, int width_px, int height_px)
    : world_(world), width_(width_px), height_(height_px) {}

std::array<double, 2> SvgCanvas::to_px(const Point2& p) const {
  const double x = (p[0] - world_.lo_x) / (world_.hi_x - world_.lo_x) * width_;
  const double y = (world_.hi_y - p[1]) / (world_.hi_y - world_.lo_y) * height_;
  return {x, y};
}

void SvgCanvas::line(const Point2& a, const Point2& b, const std::string& stroke, double width) {
  const auto pa = to_px(a);
  const auto pb = to_px(b);
  body_.push_back("<line x1=\"" + px(pa[0]) + "\" y1=\"" + px(pa[1]) + "\" x2=\"" + px(pb[0]) +
                  "\" y2=\"" + px(pb[1]) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + px(width) +
                  "\"/>");
}

void SvgCanvas::polyline(const std::vector<Point2>& pts, const std::string& stroke, double width,
                         bool closed) {
  std::string points;
  for (const auto& p : pts) {
    const auto q = to_px(p);
    if (!points.empty()) points += ' ';
    points += px(q[0]) + "," + px(q[1]);
  }
  body_.push_back(std::string(closed ? "<polygon" : "<polyline") + " points=\"" + points +
                  "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + px(width) + "\"/>");
}

void SvgCanvas::dot(const Point2& p, double radius_px, const std::string& fill, double opacity) {
  const auto q = to_px(p);
  body_.push_back("<circle cx=\"" + px(q[0]) + "\" cy=\"" + px(q[1]) + "\" r=\"" + px(radius_px) +
                  "\" fill=\"" + fill + "\" fill-opacity=\"" + px(opacity) + "\"/>");
}

void SvgCanvas::text(const Point2& p, const std::string& label, int size_px) {
  const auto q = to_px(p);
  body_.push_back("<text x=\"" + px(q[0]) + "\" y=\"" + px(q[1]) + "\" font-size=\"" +
                  std::to_string(size_px) + "\" font-family=\"sans-serif\">" + escape(label) + "</text>");
}

void SvgCanvas::axes() {
  if (world_.lo_y <= 0.0 && world_.hi_y >= 0.0) line({world_.lo_x, 0.0}, {world_.hi_x, 0.0}, "#cccccc", 0.5);
  if (world_.lo_x <= 0.0 && world_.hi_x >= 0.0) line({0.0, world_.lo_y}, {0.0, world_.hi_y}, "#cccccc", 0.5);
}

void SvgCanvas::title(const std::string& label) {
  body_.push_back("<text x=\"8\" y=\"16\" font-size=\"13\" font-family=\"sans-serif\">" + escape(label) +
                  "</text>");
}

std::string SvgCanvas::str() const {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_) +
                    "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " + std::to_string(width_) +
                    " " + std::to_string(height_) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& e : body_) out += e + "\n";
  out += "</svg>\n";
  return out;
}

}  // namespace tropdegen::cli
