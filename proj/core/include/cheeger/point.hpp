#pragma once

#include <cmath>

namespace cheeger {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend Point operator-(Point a) { return {-a.x, -a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
// rotate +90 degrees
inline Point perp(Point a) { return {-a.y, a.x}; }
inline Point rotate(Point a, double t) {
  double c = std::cos(t), s = std::sin(t);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}
inline Point unit(Point a) { return a / norm(a); }
inline Point polar(double r, double t) { return {r * std::cos(t), r * std::sin(t)}; }

}  // namespace cheeger
