#include "dpwnn/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace dpwnn {

GaussLegendre1D gauss_legendre_1d(int order) {
  if (order < 1 || order > 64) {
    throw std::invalid_argument("gauss_legendre_1d: order must be in [1,64]");
  }
  const int n = order;
  GaussLegendre1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  // Newton iteration on P_n from the Chebyshev initial guess; each root is
  // polished to machine precision, weights from the derivative recurrence.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (n == 1) p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      const double pnm1 = (n == 1) ? 1.0 : p0;
      pp = n * (x * pn - pnm1) / (x * x - 1.0);
      const double dx = pn / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // One more derivative evaluation at the converged root.
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      const double pnm1 = (n == 1) ? 1.0 : p0;
      pp = n * (x * pn - pnm1) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

int default_face_order(double omega, double h) {
  // The integrands carry phase up to 2*omega*h across a face, i.e. beta =
  // omega*h after mapping to [-1,1]. Gauss-Legendre needs about beta/2 + 17
  // nodes to resolve e^{i beta s} to 1e-13; +20 leaves margin up to
  // omega*h = 40.
  const int n = std::max(20, static_cast<int>(std::ceil(0.5 * omega * h)) + 20);
  return std::min(n, 64);
}

FaceQuadrature face_rule(const Mesh& mesh, const Face& face, int order) {
  const GaussLegendre1D g = gauss_legendre_1d(order);
  FaceQuadrature q;
  q.face_index = face.id;

  std::array<int, 2> tangents{};
  int nt = 0;
  for (int a = 0; a < mesh.dim; ++a) {
    if (a != face.axis) tangents[nt++] = a;
  }

  if (mesh.dim == 2) {
    const int t = tangents[0];
    const double a = face.lo[t], b = face.hi[t];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    q.nodes.reserve(order);
    q.weights.reserve(order);
    for (int i = 0; i < order; ++i) {
      Point p = face.lo;
      p[t] = mid + half * g.nodes[i];
      q.nodes.push_back(p);
      q.weights.push_back(half * g.weights[i]);
    }
  } else {
    const int t0 = tangents[0], t1 = tangents[1];
    const double a0 = face.lo[t0], b0 = face.hi[t0];
    const double a1 = face.lo[t1], b1 = face.hi[t1];
    const double m0 = 0.5 * (a0 + b0), h0 = 0.5 * (b0 - a0);
    const double m1 = 0.5 * (a1 + b1), h1 = 0.5 * (b1 - a1);
    q.nodes.reserve(static_cast<size_t>(order) * order);
    q.weights.reserve(static_cast<size_t>(order) * order);
    for (int j = 0; j < order; ++j) {
      for (int i = 0; i < order; ++i) {
        Point p = face.lo;
        p[t0] = m0 + h0 * g.nodes[i];
        p[t1] = m1 + h1 * g.nodes[j];
        q.nodes.push_back(p);
        q.weights.push_back(h0 * g.weights[i] * h1 * g.weights[j]);
      }
    }
  }
  return q;
}

SkeletonQuadrature build_skeleton_quadrature(const Mesh& mesh, int order) {
  SkeletonQuadrature s;
  s.order = order;
  s.interior.reserve(mesh.interior_faces.size());
  s.boundary.reserve(mesh.boundary_faces.size());
  int offset = 0;
  for (const Face& f : mesh.interior_faces) {
    s.interior.push_back(face_rule(mesh, f, order));
    s.interior_offset.push_back(offset);
    offset += static_cast<int>(s.interior.back().nodes.size());
  }
  for (const Face& f : mesh.boundary_faces) {
    s.boundary.push_back(face_rule(mesh, f, order));
    s.boundary_offset.push_back(offset);
    offset += static_cast<int>(s.boundary.back().nodes.size());
  }
  s.total_nodes = offset;
  return s;
}

namespace {

// integral over [a,b] of e^{i beta t} dt / with the beta -> 0 linear limit
Complex segment_factor(const Complex& beta, double a, double b) {
  const Complex i(0.0, 1.0);
  if (std::abs(beta) * std::abs(b - a) < 1e-8) {
    return Complex(b - a, 0.0);
  }
  return (std::exp(i * beta * b) - std::exp(i * beta * a)) / (i * beta);
}

}  // namespace

Complex plane_wave_face_integral_oracle(const Face& face, int dim,
                                        const Vector3c& k1, const Vector3c& k2) {
  // e^{i k1.x} conj(e^{i k2.x}) = e^{i K.x}, K = k1 - conj(k2).
  Vector3c K;
  for (int a = 0; a < 3; ++a) K[a] = k1[a] - std::conj(k2[a]);

  const Complex i(0.0, 1.0);
  Complex result = std::exp(i * K[face.axis] * Complex(face.lo[face.axis], 0.0));
  for (int a = 0; a < dim; ++a) {
    if (a == face.axis) continue;
    result *= segment_factor(K[a], face.lo[a], face.hi[a]);
  }
  return result;
}

}  // namespace dpwnn
