#include "dpwnn/pwbasis.hpp"

#include <cmath>
#include <stdexcept>

namespace dpwnn {

WidthSpec WidthSpec::make_2d(int n) {
  if (n < 1) throw std::invalid_argument("WidthSpec: 2D width must be >= 1");
  WidthSpec w;
  w.dim = 2;
  w.n = n;
  return w;
}

WidthSpec WidthSpec::make_3d(int m_star) {
  if (m_star < 2) {
    throw std::invalid_argument("WidthSpec: 3D m* must be >= 2 (zenith init divides by m*-1)");
  }
  WidthSpec w;
  w.dim = 3;
  w.m_star = m_star;
  w.t_star = 2 * m_star;
  w.n = w.m_star * w.t_star;
  return w;
}

Eigen::VectorXd DirectionAngles::to_flat() const {
  const int per = width.angles_per_element();
  Eigen::VectorXd flat(static_cast<Eigen::Index>(per) * element_count());
  for (int k = 0; k < element_count(); ++k) {
    int off = k * per;
    for (double t : theta[k]) flat[off++] = t;
    if (width.dim == 3) {
      for (double z : zeta[k]) flat[off++] = z;
    }
  }
  return flat;
}

DirectionAngles DirectionAngles::from_flat(const WidthSpec& width, int n_elements,
                                           const Eigen::VectorXd& flat) {
  const int per = width.angles_per_element();
  if (flat.size() != static_cast<Eigen::Index>(per) * n_elements) {
    throw std::invalid_argument("DirectionAngles::from_flat: size mismatch");
  }
  DirectionAngles a;
  a.width = width;
  a.theta.resize(n_elements);
  if (width.dim == 3) a.zeta.resize(n_elements);
  const int nt = (width.dim == 2) ? width.n : width.t_star;
  for (int k = 0; k < n_elements; ++k) {
    int off = k * per;
    a.theta[k].assign(flat.data() + off, flat.data() + off + nt);
    off += nt;
    if (width.dim == 3) {
      a.zeta[k].assign(flat.data() + off, flat.data() + off + width.m_star);
    }
  }
  return a;
}

Point direction_from_angles_2d(double theta) {
  return Point(std::cos(theta), std::sin(theta), 0.0);
}

Point direction_from_angles_3d(double zeta, double theta) {
  const double sz = std::sin(zeta);
  return Point(sz * std::cos(theta), sz * std::sin(theta), std::cos(zeta));
}

double wrap_theta(double theta) {
  double w = std::remainder(theta, 2.0 * M_PI);  // [-pi, pi]
  if (w <= -M_PI) w += 2.0 * M_PI;
  return w;
}

double reflect_zeta(double zeta) {
  double z = std::fmod(zeta, 2.0 * M_PI);
  if (z < 0.0) z += 2.0 * M_PI;
  if (z > M_PI) z = 2.0 * M_PI - z;
  return z;
}

void wrap_angles(DirectionAngles& angles) {
  for (auto& ts : angles.theta) {
    for (double& t : ts) t = wrap_theta(t);
  }
  for (auto& zs : angles.zeta) {
    for (double& z : zs) z = reflect_zeta(z);
  }
}

DirectionAngles init_angles_uniform(const WidthSpec& width, int n_elements) {
  DirectionAngles a;
  a.width = width;
  a.theta.resize(n_elements);
  if (width.dim == 3) a.zeta.resize(n_elements);

  if (width.dim == 2) {
    std::vector<double> t(width.n);
    for (int j = 1; j <= width.n; ++j) {
      t[j - 1] = wrap_theta(-M_PI + (2.0 * M_PI / width.n) * j);
    }
    for (int k = 0; k < n_elements; ++k) a.theta[k] = t;
  } else {
    std::vector<double> z(width.m_star), t(width.t_star);
    for (int m = 1; m <= width.m_star; ++m) {
      z[m - 1] = reflect_zeta(M_PI * (m - 1) / (width.m_star - 1) + M_PI / (3.0 * width.m_star));
    }
    for (int j = 1; j <= width.t_star; ++j) {
      t[j - 1] = wrap_theta(-M_PI + (2.0 * M_PI / width.t_star) * j);
    }
    for (int k = 0; k < n_elements; ++k) {
      a.theta[k] = t;
      a.zeta[k] = z;
    }
    correct_zeta_degeneracy(a, 1e-3, 1e-2);
  }
  return a;
}

void correct_zeta_degeneracy(DirectionAngles& angles, double threshold,
                             double disturbance) {
  for (auto& zs : angles.zeta) {
    for (double& z : zs) {
      if (std::abs(std::sin(z)) < threshold) {
        z = reflect_zeta(z + disturbance);
      }
    }
  }
}

std::vector<Point> element_directions(const DirectionAngles& angles, int elem) {
  std::vector<Point> dirs;
  if (angles.width.dim == 2) {
    dirs.reserve(angles.width.n);
    for (double t : angles.theta[elem]) dirs.push_back(direction_from_angles_2d(t));
  } else {
    dirs.reserve(angles.width.directions());
    for (int m = 0; m < angles.width.m_star; ++m) {
      for (int t = 0; t < angles.width.t_star; ++t) {
        dirs.push_back(direction_from_angles_3d(angles.zeta[elem][m], angles.theta[elem][t]));
      }
    }
  }
  return dirs;
}

BasisEval eval_basis(const Point& direction, double omega, const Point& x) {
  const Complex i(0.0, 1.0);
  BasisEval e;
  e.value = std::exp(i * omega * direction.dot(x));
  e.gradient = (i * omega * e.value) * direction.cast<Complex>();
  return e;
}

DirectionDerivs direction_derivatives(const DirectionAngles& angles, int elem) {
  DirectionDerivs d;
  if (angles.width.dim == 2) {
    d.per_angle.resize(angles.width.n);
    for (int j = 0; j < angles.width.n; ++j) {
      const double t = angles.theta[elem][j];
      d.per_angle[j] = {{j, Point(-std::sin(t), std::cos(t), 0.0)}};
    }
  } else {
    const int ms = angles.width.m_star, ts = angles.width.t_star;
    d.per_angle.resize(ts + ms);
    for (int t = 0; t < ts; ++t) {
      auto& list = d.per_angle[t];
      list.reserve(ms);
      const double th = angles.theta[elem][t];
      for (int m = 0; m < ms; ++m) {
        const double sz = std::sin(angles.zeta[elem][m]);
        list.emplace_back(m * ts + t, Point(-sz * std::sin(th), sz * std::cos(th), 0.0));
      }
    }
    for (int m = 0; m < ms; ++m) {
      auto& list = d.per_angle[ts + m];
      list.reserve(ts);
      const double cz = std::cos(angles.zeta[elem][m]);
      const double sz = std::sin(angles.zeta[elem][m]);
      for (int t = 0; t < ts; ++t) {
        const double th = angles.theta[elem][t];
        list.emplace_back(m * ts + t, Point(cz * std::cos(th), cz * std::sin(th), -sz));
      }
    }
  }
  return d;
}

Eigen::VectorXcd eval_angle_derivative(const DirectionAngles& angles, int elem,
                                       const Eigen::VectorXcd& coeffs,
                                       double omega, const Point& x) {
  const int n = angles.width.directions();
  if (coeffs.size() != n) {
    throw std::invalid_argument("eval_angle_derivative: coefficient length mismatch");
  }
  const Complex i(0.0, 1.0);
  const std::vector<Point> dirs = element_directions(angles, elem);
  const DirectionDerivs dd = direction_derivatives(angles, elem);

  Eigen::VectorXcd out(angles.width.angles_per_element());
  for (int a = 0; a < out.size(); ++a) {
    Complex s(0.0, 0.0);
    for (const auto& [l, dv] : dd.per_angle[a]) {
      s += coeffs[l] * (i * omega * dv.dot(x)) * std::exp(i * omega * dirs[l].dot(x));
    }
    out[a] = s;
  }
  return out;
}

}  // namespace dpwnn
