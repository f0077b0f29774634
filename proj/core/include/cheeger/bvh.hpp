#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "cheeger/point.hpp"

namespace cheeger {

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();

  void add(Point p) {
    x0 = std::min(x0, p.x), y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x), y1 = std::max(y1, p.y);
  }
  void add(const Box& b) {
    x0 = std::min(x0, b.x0), y0 = std::min(y0, b.y0);
    x1 = std::max(x1, b.x1), y1 = std::max(y1, b.y1);
  }
  Box padded(double e) const { return {x0 - e, y0 - e, x1 + e, y1 + e}; }
  bool empty() const { return x0 > x1; }
  bool overlaps(const Box& b) const {
    return x0 <= b.x1 && b.x0 <= x1 && y0 <= b.y1 && b.y0 <= y1;
  }
  bool contains(Point p) const { return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1; }
  double distance(Point p) const {
    double dx = std::max({x0 - p.x, 0.0, p.x - x1});
    double dy = std::max({y0 - p.y, 0.0, p.y - y1});
    return std::hypot(dx, dy);
  }
  double diagonal() const { return empty() ? 0.0 : std::hypot(x1 - x0, y1 - y0); }
  Point center() const { return {(x0 + x1) / 2, (y0 + y1) / 2}; }
};

// Static bounding volume hierarchy over item boxes.
class Bvh {
 public:
  Bvh() = default;
  explicit Bvh(const std::vector<Box>& boxes) { build(boxes); }

  void build(const std::vector<Box>& boxes) {
    boxes_ = boxes;
    order_.resize(boxes.size());
    for (std::uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
    nodes_.clear();
    if (!boxes.empty()) {
      nodes_.reserve(2 * boxes.size() / kLeaf + 2);
      nodes_.push_back({});
      build_into(0, 0, static_cast<std::uint32_t>(boxes.size()));
    }
  }

  std::size_t size() const { return boxes_.size(); }
  const Box& box(std::size_t i) const { return boxes_[i]; }

  // Calls fn(i) for every item whose box passes pred; pred is also applied to node boxes.
  template <class Pred, class Fn>
  void visit(Pred&& pred, Fn&& fn) const {
    if (nodes_.empty()) return;
    std::uint32_t stack[128];
    int top = 0;
    stack[top++] = 0;
    while (top) {
      const Node& n = nodes_[stack[--top]];
      if (!pred(n.box)) continue;
      if (n.count) {
        for (std::uint32_t k = n.first; k < n.first + n.count; ++k)
          if (pred(boxes_[order_[k]])) fn(order_[k]);
      } else {
        stack[top++] = n.first;
        stack[top++] = n.first + 1;
      }
    }
  }

  // Minimum of dist(i) over items, pruned by box distance; dist(i) must be >= box distance.
  template <class Dist>
  double nearest(Point p, Dist&& dist, double best = std::numeric_limits<double>::infinity(),
                 std::int64_t* arg = nullptr) const {
    if (nodes_.empty()) return best;
    struct Entry {
      std::uint32_t node;
      double d;
    };
    Entry stack[128];
    int top = 0;
    stack[top++] = {0, nodes_[0].box.distance(p)};
    while (top) {
      Entry e = stack[--top];
      if (e.d >= best) continue;
      const Node& n = nodes_[e.node];
      if (n.count) {
        for (std::uint32_t k = n.first; k < n.first + n.count; ++k) {
          std::uint32_t i = order_[k];
          if (boxes_[i].distance(p) >= best) continue;
          double d = dist(i);
          if (d < best) {
            best = d;
            if (arg) *arg = i;
          }
        }
      } else {
        Entry a{n.first, nodes_[n.first].box.distance(p)};
        Entry b{n.first + 1, nodes_[n.first + 1].box.distance(p)};
        if (a.d < b.d) std::swap(a, b);
        stack[top++] = a;
        stack[top++] = b;
      }
    }
    return best;
  }

 private:
  static constexpr std::uint32_t kLeaf = 4;
  struct Node {
    Box box;
    std::uint32_t first = 0;  // child index for inner nodes, item offset for leaves
    std::uint32_t count = 0;  // 0 for inner nodes
  };

  void build_into(std::uint32_t slot, std::uint32_t lo, std::uint32_t hi) {
    Box b, cb;
    for (std::uint32_t k = lo; k < hi; ++k) {
      b.add(boxes_[order_[k]]);
      cb.add(boxes_[order_[k]].center());
    }
    nodes_[slot].box = b;
    if (hi - lo <= kLeaf) {
      nodes_[slot].first = lo;
      nodes_[slot].count = hi - lo;
      return;
    }
    bool by_x = (cb.x1 - cb.x0) >= (cb.y1 - cb.y0);
    std::uint32_t mid = lo + (hi - lo) / 2;
    std::nth_element(order_.begin() + lo, order_.begin() + mid, order_.begin() + hi,
                     [&](std::uint32_t a, std::uint32_t c) {
                       Point pa = boxes_[a].center(), pc = boxes_[c].center();
                       return by_x ? pa.x < pc.x : pa.y < pc.y;
                     });
    std::uint32_t left = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back({});
    nodes_.push_back({});
    nodes_[slot].first = left;
    nodes_[slot].count = 0;
    build_into(left, lo, mid);
    build_into(left + 1, mid, hi);
  }

  std::vector<Box> boxes_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace cheeger
