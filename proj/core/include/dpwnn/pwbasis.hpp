#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "dpwnn/geometry.hpp"

namespace dpwnn {

using Complex = std::complex<double>;
using Vector3c = Eigen::Vector3cd;

// Width of the per-element direction dictionary. 2D: n directions from n
// angles. 3D: a spherical grid of m_star zenith and t_star = 2*m_star azimuth
// angles, n = m_star * t_star directions.
struct WidthSpec {
  int dim = 2;
  int n = 0;
  int m_star = 0;
  int t_star = 0;

  static WidthSpec make_2d(int n);
  static WidthSpec make_3d(int m_star);

  int directions() const { return dim == 2 ? n : m_star * t_star; }
  int angles_per_element() const { return dim == 2 ? n : t_star + m_star; }
};

// Trainable per-element angles. 2D: theta[k] has n entries in (-pi, pi].
// 3D: theta[k] has t_star entries in (-pi, pi], zeta[k] has m_star entries in
// [0, pi]. Flat layout: element-major; within an element theta first, then
// zeta.
struct DirectionAngles {
  WidthSpec width;
  std::vector<std::vector<double>> theta;
  std::vector<std::vector<double>> zeta;

  int element_count() const { return static_cast<int>(theta.size()); }
  Eigen::VectorXd to_flat() const;
  static DirectionAngles from_flat(const WidthSpec& width, int n_elements,
                                   const Eigen::VectorXd& flat);
};

struct BasisIndex {
  int element = 0;
  int direction = 0;  // 0-based l; Maxwell polarization slot handled separately
};

Point direction_from_angles_2d(double theta);
Point direction_from_angles_3d(double zeta, double theta);

// Uniform initialization, identical on every element. 2D requires n >= 1;
// 3D requires m_star >= 2 (the zenith spacing divides by m_star - 1).
DirectionAngles init_angles_uniform(const WidthSpec& width, int n_elements);

// Shift every zeta with |sin(zeta)| < threshold by +disturbance, reflecting
// back into [0, pi] on overflow. Keeps the azimuthal basis functions linearly
// independent near the poles.
void correct_zeta_degeneracy(DirectionAngles& angles, double threshold,
                             double disturbance);

double wrap_theta(double theta);   // into (-pi, pi]
double reflect_zeta(double zeta);  // into [0, pi]
void wrap_angles(DirectionAngles& angles);

// Directions of one element in basis order l = (m-1)*t_star + t (3D) or
// l = j (2D), 0-based.
std::vector<Point> element_directions(const DirectionAngles& angles, int elem);

struct BasisEval {
  Complex value;
  Vector3c gradient;
};

// value = e^{i omega d.x}, gradient = i omega d value.
BasisEval eval_basis(const Point& direction, double omega, const Point& x);

// Derivative of the layer value sum_l c_l e^{i omega d_l.x} with respect to
// each angle of the element, evaluated at x. Entry order matches the flat
// angle layout (2D: n entries; 3D: t_star theta entries then m_star zeta
// entries).
Eigen::VectorXcd eval_angle_derivative(const DirectionAngles& angles, int elem,
                                       const Eigen::VectorXcd& coeffs,
                                       double omega, const Point& x);

// d(direction)/d(angle) for every (direction l, angle a) pair of one element;
// zero for angles that do not enter direction l. Returned as a dense list of
// per-angle sets to keep gradient assembly simple:
// result[a] = list of (l, d d_l / d a).
struct DirectionDerivs {
  // for angle a: affected direction indices and derivative vectors
  std::vector<std::vector<std::pair<int, Point>>> per_angle;
};
DirectionDerivs direction_derivatives(const DirectionAngles& angles, int elem);

}  // namespace dpwnn
