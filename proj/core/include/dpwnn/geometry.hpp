#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

namespace dpwnn {

// Points are stored as 3-vectors; in 2D the z component is zero.
using Point = Eigen::Vector3d;

struct BoxDomain {
  Point lo = Point::Zero();
  Point hi = Point::Zero();
  int dim = 2;

  static BoxDomain square(double a, double b);          // [a,b]^2
  static BoxDomain cube(double a, double b);            // [a,b]^3
  static BoxDomain make(int dim, const Point& lo, const Point& hi);

  double extent(int axis) const { return hi[axis] - lo[axis]; }
  double volume() const;
  double surface_measure() const;
  bool contains(const Point& x, double tol = 0.0) const;
  Point center() const { return 0.5 * (lo + hi); }
};

struct Element {
  int index = -1;  // row-major over the grid, x fastest
  BoxDomain bounds;
  Point center() const { return bounds.center(); }
};

// Axis-aligned (d-1)-dimensional box on the mesh skeleton.
// Interior faces store the ordered neighbor pair (elem_k < elem_j); the stored
// normal points from elem_k into elem_j. Boundary faces store the owning
// element and the outward normal.
struct Face {
  int id = -1;
  int axis = 0;
  bool is_boundary = false;
  int elem_k = -1;
  int elem_j = -1;
  Point normal = Point::Zero();
  Point lo = Point::Zero();  // lo[axis] == hi[axis] == plane coordinate
  Point hi = Point::Zero();
  double measure = 0.0;
};

struct Mesh {
  BoxDomain domain;
  std::array<int, 3> cells = {1, 1, 1};
  int dim = 2;
  double h = 0.0;  // uniform meshwidth
  std::vector<Element> elements;
  std::vector<Face> interior_faces;
  std::vector<Face> boundary_faces;

  int element_count() const { return static_cast<int>(elements.size()); }
  int element_index(int ix, int iy, int iz = 0) const;
  // Cell containing x; points on the upper boundary of a cell are assigned to
  // the higher cell, clamped into the grid.
  int locate(const Point& x) const;
};

Mesh build_uniform_mesh(const BoxDomain& domain, const std::array<int, 3>& cells_per_axis);

struct FaceGeometry {
  std::vector<Point> corners;  // 2 corners in 2D, 4 in 3D
  Point normal;
  double measure;
};

FaceGeometry face_geometry(const Face& face, int dim);

}  // namespace dpwnn
