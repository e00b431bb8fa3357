#include "dpwnn/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dpwnn {

BoxDomain BoxDomain::square(double a, double b) {
  BoxDomain d;
  d.dim = 2;
  d.lo = Point(a, a, 0.0);
  d.hi = Point(b, b, 0.0);
  return d;
}

BoxDomain BoxDomain::cube(double a, double b) {
  BoxDomain d;
  d.dim = 3;
  d.lo = Point(a, a, a);
  d.hi = Point(b, b, b);
  return d;
}

BoxDomain BoxDomain::make(int dim, const Point& lo, const Point& hi) {
  BoxDomain d;
  d.dim = dim;
  d.lo = lo;
  d.hi = hi;
  if (dim == 2) {
    d.lo[2] = 0.0;
    d.hi[2] = 0.0;
  }
  for (int a = 0; a < dim; ++a) {
    if (!(d.lo[a] < d.hi[a])) {
      throw std::invalid_argument("BoxDomain: lo must be strictly below hi on every axis");
    }
  }
  return d;
}

double BoxDomain::volume() const {
  double v = 1.0;
  for (int a = 0; a < dim; ++a) v *= extent(a);
  return v;
}

double BoxDomain::surface_measure() const {
  double s = 0.0;
  for (int a = 0; a < dim; ++a) {
    double side = 1.0;
    for (int b = 0; b < dim; ++b) {
      if (b != a) side *= extent(b);
    }
    s += 2.0 * side;
  }
  return s;
}

bool BoxDomain::contains(const Point& x, double tol) const {
  for (int a = 0; a < dim; ++a) {
    if (x[a] < lo[a] - tol || x[a] > hi[a] + tol) return false;
  }
  return true;
}

int Mesh::element_index(int ix, int iy, int iz) const {
  return ix + cells[0] * (iy + cells[1] * iz);
}

int Mesh::locate(const Point& x) const {
  std::array<int, 3> idx = {0, 0, 0};
  for (int a = 0; a < dim; ++a) {
    int i = static_cast<int>(std::floor((x[a] - domain.lo[a]) / h));
    idx[a] = std::clamp(i, 0, cells[a] - 1);
  }
  return element_index(idx[0], idx[1], idx[2]);
}

Mesh build_uniform_mesh(const BoxDomain& domain, const std::array<int, 3>& cells_per_axis) {
  Mesh mesh;
  mesh.domain = domain;
  mesh.dim = domain.dim;
  mesh.cells = cells_per_axis;
  if (mesh.dim == 2) mesh.cells[2] = 1;

  for (int a = 0; a < mesh.dim; ++a) {
    if (mesh.cells[a] < 1) throw std::invalid_argument("build_uniform_mesh: cell count must be >= 1");
  }

  const double h0 = domain.extent(0) / mesh.cells[0];
  for (int a = 1; a < mesh.dim; ++a) {
    const double ha = domain.extent(a) / mesh.cells[a];
    if (std::abs(ha - h0) > 1e-12 * std::max(std::abs(ha), std::abs(h0))) {
      throw std::invalid_argument("build_uniform_mesh: non-uniform meshwidth (h differs across axes)");
    }
  }
  mesh.h = h0;

  const int nx = mesh.cells[0], ny = mesh.cells[1], nz = mesh.cells[2];
  const auto corner = [&](int ix, int iy, int iz) {
    Point p = domain.lo;
    p[0] += ix * h0;
    p[1] += iy * h0;
    if (mesh.dim == 3) p[2] += iz * h0;
    return p;
  };

  mesh.elements.reserve(static_cast<size_t>(nx) * ny * nz);
  for (int iz = 0; iz < nz; ++iz) {
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        Element e;
        e.index = mesh.element_index(ix, iy, iz);
        e.bounds.dim = mesh.dim;
        e.bounds.lo = corner(ix, iy, iz);
        e.bounds.hi = corner(ix + 1, iy + 1, iz + 1);
        if (mesh.dim == 2) {
          e.bounds.lo[2] = 0.0;
          e.bounds.hi[2] = 0.0;
        }
        mesh.elements.push_back(e);
      }
    }
  }

  const auto face_measure = [&](int axis) {
    double m = 1.0;
    for (int b = 0; b < mesh.dim; ++b) {
      if (b != axis) m *= h0;
    }
    return m;
  };

  // Interior faces: axis by axis, lower cell in row-major order.
  int face_id = 0;
  for (int axis = 0; axis < mesh.dim; ++axis) {
    for (int iz = 0; iz < nz; ++iz) {
      for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
          std::array<int, 3> i = {ix, iy, iz};
          if (i[axis] + 1 >= mesh.cells[axis]) continue;
          std::array<int, 3> j = i;
          j[axis] += 1;
          Face f;
          f.id = face_id++;
          f.axis = axis;
          f.is_boundary = false;
          f.elem_k = mesh.element_index(i[0], i[1], i[2]);
          f.elem_j = mesh.element_index(j[0], j[1], j[2]);
          f.normal = Point::Zero();
          f.normal[axis] = 1.0;
          const auto& bk = mesh.elements[f.elem_k].bounds;
          f.lo = bk.lo;
          f.hi = bk.hi;
          f.lo[axis] = bk.hi[axis];
          f.hi[axis] = bk.hi[axis];
          f.measure = face_measure(axis);
          mesh.interior_faces.push_back(f);
        }
      }
    }
  }

  // Boundary faces: axis by axis, low side then high side.
  face_id = 0;
  for (int axis = 0; axis < mesh.dim; ++axis) {
    for (int side = 0; side < 2; ++side) {
      for (int iz = 0; iz < nz; ++iz) {
        for (int iy = 0; iy < ny; ++iy) {
          for (int ix = 0; ix < nx; ++ix) {
            std::array<int, 3> i = {ix, iy, iz};
            if (side == 0 && i[axis] != 0) continue;
            if (side == 1 && i[axis] != mesh.cells[axis] - 1) continue;
            Face f;
            f.id = face_id++;
            f.axis = axis;
            f.is_boundary = true;
            f.elem_k = mesh.element_index(i[0], i[1], i[2]);
            f.elem_j = -1;
            f.normal = Point::Zero();
            f.normal[axis] = (side == 0) ? -1.0 : 1.0;
            const auto& b = mesh.elements[f.elem_k].bounds;
            f.lo = b.lo;
            f.hi = b.hi;
            const double plane = (side == 0) ? b.lo[axis] : b.hi[axis];
            f.lo[axis] = plane;
            f.hi[axis] = plane;
            f.measure = face_measure(axis);
            mesh.boundary_faces.push_back(f);
          }
        }
      }
    }
  }

  return mesh;
}

FaceGeometry face_geometry(const Face& face, int dim) {
  FaceGeometry g;
  g.normal = face.normal;
  g.measure = face.measure;
  std::array<int, 2> tangents{};
  int nt = 0;
  for (int a = 0; a < dim; ++a) {
    if (a != face.axis) tangents[nt++] = a;
  }
  if (dim == 2) {
    Point p0 = face.lo, p1 = face.lo;
    p1[tangents[0]] = face.hi[tangents[0]];
    g.corners = {p0, p1};
  } else {
    const int t0 = tangents[0], t1 = tangents[1];
    for (int c1 = 0; c1 < 2; ++c1) {
      for (int c0 = 0; c0 < 2; ++c0) {
        Point p = face.lo;
        p[t0] = c0 ? face.hi[t0] : face.lo[t0];
        p[t1] = c1 ? face.hi[t1] : face.lo[t1];
        g.corners.push_back(p);
      }
    }
  }
  return g;
}

}  // namespace dpwnn
