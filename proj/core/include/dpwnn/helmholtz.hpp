#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dpwnn/geometry.hpp"
#include "dpwnn/model.hpp"
#include "dpwnn/pwbasis.hpp"
#include "dpwnn/quadrature.hpp"

namespace dpwnn {

// Wave number per element, interface weights alpha = omega_k*omega_j and a
// global derivative-jump weight beta. The homogeneous case reduces to
// alpha = omega^2, beta = 1.
struct HelmholtzMedia {
  std::vector<double> omega;  // per element
  std::vector<double> alpha;  // per interior face
  double beta = 1.0;

  static HelmholtzMedia homogeneous(const Mesh& mesh, double omega);
  // omega_at must be constant on every element; the constructor verifies that
  // the mesh aligns with the media jumps.
  static HelmholtzMedia piecewise(const Mesh& mesh,
                                  const std::function<double(const Point&)>& omega_at);
  double max_omega() const;
};

// One trained network: per-element direction angles plus complex activation
// coefficients (length = width.directions() on every element).
struct Layer {
  DirectionAngles angles;
  std::vector<Eigen::VectorXcd> coeffs;

  static Layer zero(const DirectionAngles& angles);
  Eigen::VectorXcd coeffs_flat() const;
  static Layer from_flat(const WidthSpec& width, int n_elements,
                         const Eigen::VectorXd& phi, const Eigen::VectorXcd& coeffs);
};

// Single basis function psi_{k,j} as a layer with one unit coefficient.
Layer layer_from_basis(const DirectionAngles& angles, const BasisIndex& idx);

// u_r as the ordered sum of trained layers; the empty list is u_0 = 0.
struct DiscreteSolution {
  std::vector<Layer> layers;
};

struct AssembledSystem {
  Eigen::MatrixXcd A;  // Hermitian PSD over all (element, direction) indices
  Eigen::VectorXcd b;
};

using ScalarBoundaryData = std::function<Complex(const Point& x, const Point& n)>;

struct ExactScalar {
  std::function<Complex(const Point&)> value;
  std::function<Vector3c(const Point&)> gradient;
};

// Skeleton least-squares machinery for one (mesh, media, boundary data,
// quadrature) tuple. Keeps the traces of an accumulated solution frozen at
// the quadrature nodes so candidate layers can be evaluated incrementally.
// All reductions run in fixed face/node order.
class HelmholtzAssembler {
 public:
  HelmholtzAssembler(const Mesh& mesh, const HelmholtzMedia& media,
                     ScalarBoundaryData g, const SkeletonQuadrature& quad);

  const Mesh& mesh() const { return *mesh_; }
  const HelmholtzMedia& media() const { return *media_; }
  const SkeletonQuadrature& quadrature() const { return *quad_; }
  int node_count() const { return quad_->total_nodes; }

  void reset();
  void add_layer(const WidthSpec& width, const Eigen::VectorXd& phi,
                 const Eigen::VectorXcd& coeffs);
  void set_solution(const DiscreteSolution& solution);

  // J(u + candidate); pass width/phi/coeffs = nullptr for J(u).
  double functional(const WidthSpec* width, const Eigen::VectorXd* phi,
                    const Eigen::VectorXcd* coeffs) const;
  AssembledSystem assemble(const WidthSpec& width, const Eigen::VectorXd& phi) const;
  Eigen::VectorXd grad_angles(const WidthSpec& width, const Eigen::VectorXd& phi,
                              const Eigen::VectorXcd& coeffs) const;
  double node_loss(int node, const WidthSpec* width, const Eigen::VectorXd* phi,
                   const Eigen::VectorXcd* coeffs) const;
  NodeGrad node_grad(int node, const WidthSpec& width, const Eigen::VectorXd& phi,
                     const Eigen::VectorXcd& coeffs) const;

  // |||exact - (u + candidate)|||; interface traces of the exact solution
  // cancel, so only its boundary traces are evaluated.
  double energy_error(const ExactScalar& exact, const WidthSpec* width,
                      const Eigen::VectorXd* phi, const Eigen::VectorXcd* coeffs) const;
  double energy_norm_exact(const ExactScalar& exact) const;

 private:
  struct SideTrace;
  void side_traces(const WidthSpec& width, const Eigen::VectorXd& phi,
                   const Eigen::VectorXcd& coeffs, int elem, const FaceQuadrature& fq,
                   const Point& normal, std::vector<Complex>& val,
                   std::vector<Complex>& dn) const;

  const Mesh* mesh_;
  const HelmholtzMedia* media_;
  const SkeletonQuadrature* quad_;
  ScalarBoundaryData g_;

  int n_interior_nodes_ = 0;
  std::vector<Complex> bnd_g_;      // g at boundary nodes
  std::vector<Complex> bnd_Bu_;     // (d_n + i omega_k) u at boundary nodes
  std::vector<Complex> int_jump_;   // u_k - u_j at interior nodes
  std::vector<Complex> int_dsum_;   // d_{n_k} u_k + d_{n_j} u_j
};

// Spec-level operations in terms of whole layers / solutions.

double functional_J(const Mesh& mesh, const HelmholtzMedia& media,
                    const ScalarBoundaryData& g, const SkeletonQuadrature& quad,
                    const DiscreteSolution& solution, const Layer* candidate = nullptr);

Complex sesquilinear_a(const Mesh& mesh, const HelmholtzMedia& media,
                       const SkeletonQuadrature& quad, const Layer& v, const Layer& w);

Complex functional_L(const Mesh& mesh, const HelmholtzMedia& media,
                     const ScalarBoundaryData& g, const SkeletonQuadrature& quad,
                     const Layer& v);

double energy_norm(const Mesh& mesh, const HelmholtzMedia& media,
                   const SkeletonQuadrature& quad, const Layer& v);

AssembledSystem assemble_system(const Mesh& mesh, const HelmholtzMedia& media,
                                const ScalarBoundaryData& g, const SkeletonQuadrature& quad,
                                const DiscreteSolution& solution,
                                const DirectionAngles& angles);

Eigen::VectorXd grad_J_angles(const Mesh& mesh, const HelmholtzMedia& media,
                              const ScalarBoundaryData& g, const SkeletonQuadrature& quad,
                              const DiscreteSolution& solution, const Layer& candidate);

double energy_error(const Mesh& mesh, const HelmholtzMedia& media,
                    const ScalarBoundaryData& g, const SkeletonQuadrature& quad,
                    const DiscreteSolution& solution, const ExactScalar& exact);

// Point evaluation of a discrete solution (element chosen by Mesh::locate).
Complex eval_solution_value(const Mesh& mesh, const HelmholtzMedia& media,
                            const DiscreteSolution& solution, const Point& x);
Vector3c eval_solution_gradient(const Mesh& mesh, const HelmholtzMedia& media,
                                const DiscreteSolution& solution, const Point& x);

// Greedy-solver model for the Helmholtz functional.
class HelmholtzModel final : public TrainableModel {
 public:
  HelmholtzModel(Mesh mesh, HelmholtzMedia media, ScalarBoundaryData g,
                 SkeletonQuadrature quad, std::optional<ExactScalar> exact = {});

  int dimension() const override { return mesh_.dim; }
  void set_width(int width_param) override;
  int width_param() const override { return width_param_; }
  int angles_per_element() const override { return width_.angles_per_element(); }
  int element_count() const override { return mesh_.element_count(); }
  int coeff_dim() const override;
  Eigen::VectorXd initial_angles() const override;
  Eigen::VectorXd sanitize(Eigen::VectorXd phi) const override;
  int node_count() const override { return assembler_.node_count(); }
  DlsqResult solve_coefficients(const Eigen::VectorXd& phi, double truncation) const override;
  double loss(const Eigen::VectorXd& phi, const Eigen::VectorXcd& coeffs) const override;
  double loss_current() const override;
  Eigen::VectorXd loss_grad(const Eigen::VectorXd& phi,
                            const Eigen::VectorXcd& coeffs) const override;
  NodeGrad node_grad(int node, const Eigen::VectorXd& phi,
                     const Eigen::VectorXcd& coeffs) const override;
  void append_layer(const Eigen::VectorXd& phi, const Eigen::VectorXcd& coeffs) override;
  double energy_error(const Eigen::VectorXd* phi, const Eigen::VectorXcd* coeffs) const override;
  double energy_norm_exact() const override;

  const Mesh& mesh() const { return mesh_; }
  const HelmholtzMedia& media() const { return media_; }
  const SkeletonQuadrature& quadrature() const { return quad_; }
  const DiscreteSolution& solution() const { return solution_; }
  const WidthSpec& width() const { return width_; }
  Layer make_layer(const Eigen::VectorXd& phi, const Eigen::VectorXcd& coeffs) const;

 private:
  Mesh mesh_;
  HelmholtzMedia media_;
  SkeletonQuadrature quad_;
  HelmholtzAssembler assembler_;
  std::optional<ExactScalar> exact_;
  WidthSpec width_;
  int width_param_ = 0;
  DiscreteSolution solution_;
  double zeta_threshold_ = 1e-3;
  double zeta_disturbance_ = 1e-2;
};

}  // namespace dpwnn
