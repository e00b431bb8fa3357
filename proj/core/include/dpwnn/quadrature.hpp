#pragma once

#include <complex>
#include <vector>

#include "dpwnn/geometry.hpp"

namespace dpwnn {

using Complex = std::complex<double>;
using Vector3c = Eigen::Vector3cd;

struct GaussLegendre1D {
  std::vector<double> nodes;    // strictly increasing in (-1,1)
  std::vector<double> weights;  // positive, sum to 2
};

// Gauss-Legendre rule on [-1,1], exact for polynomials of degree <= 2*order-1.
// Valid orders: 1..64.
GaussLegendre1D gauss_legendre_1d(int order);

// Nodes per 1D direction used for skeleton integrals of products of plane
// waves with phase speed up to `omega` on faces of width `h`.
int default_face_order(double omega, double h);

struct FaceQuadrature {
  int face_index = -1;  // index into the owning mesh face list
  std::vector<Point> nodes;
  std::vector<double> weights;  // sum to the face measure
};

FaceQuadrature face_rule(const Mesh& mesh, const Face& face, int order);

// All face rules for a mesh, with a flat global numbering of the quadrature
// nodes: interior faces first (in list order), then boundary faces. The flat
// numbering doubles as the training-sample index space.
struct SkeletonQuadrature {
  int order = 0;
  std::vector<FaceQuadrature> interior;
  std::vector<FaceQuadrature> boundary;
  std::vector<int> interior_offset;
  std::vector<int> boundary_offset;
  int total_nodes = 0;
};

SkeletonQuadrature build_skeleton_quadrature(const Mesh& mesh, int order);

// Closed-form integral over an axis-aligned face of
//   e^{i k1 . x} * conj(e^{i k2 . x})
// by products of one-dimensional antiderivatives. Testing oracle for the
// skeleton integrands.
Complex plane_wave_face_integral_oracle(const Face& face, int dim,
                                        const Vector3c& k1, const Vector3c& k2);

}  // namespace dpwnn
