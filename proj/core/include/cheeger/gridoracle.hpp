#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cheeger/arcgeom.hpp"

namespace cheeger {

// Cell (i, j) has center origin + ((i + 0.5) step, (j + 0.5) step); row-major storage.
struct Grid {
  Point origin;
  double step = 0.0;
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> occupancy;
  std::vector<double> distance;  // empty until distance_transform

  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(width) + static_cast<std::size_t>(i);
  }
  bool occupied(int i, int j) const { return occupancy[index(i, j)] != 0; }
  Point center(int i, int j) const { return origin + step * Point{i + 0.5, j + 0.5}; }
  std::size_t occupied_count() const;
  double occupied_area() const { return static_cast<double>(occupied_count()) * step * step; }
};

double default_grid_step(const Box& b);

// Occupied iff the cell center is inside; at least two empty cells of margin on
// every side. `phase` in [0,1)^2 shifts the lattice by -phase * step.
Grid rasterize(const ArcGon& g, double step, Point phase = {});
Grid rasterize(const RegionSet& s, double step, Point phase = {});

// Distance from each cell center to the nearest unoccupied cell center.
void distance_transform(Grid& grid);
Grid distance_transform(const Grid& grid);

// Area of {distance > r}. The cell-center distance overestimates the boundary
// distance by half a step on average, so the threshold is r + step / 2.
double grid_inner_area(const Grid& grid, double r);

struct GridCheeger {
  double r = 0.0;
  double h = 0.0;
  int iterations = 0;
};
GridCheeger grid_cheeger(const Grid& grid, double tol = 1e-12);

// 4-connectivity of {distance > r}; EmptyRegion if the set is empty.
bool grid_connected(const Grid& grid, double r);
int grid_components(const Grid& grid, double r);

void write_pbm(const Grid& grid, std::ostream& os);
// distance scaled to 16 bits by its maximum
void write_pgm(const Grid& grid, std::ostream& os);

}  // namespace cheeger
