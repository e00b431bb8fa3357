#pragma once

#include <Eigen/Dense>

#include "dpwnn/linsolve.hpp"

namespace dpwnn {

// Gradient of one per-node loss with respect to the candidate's angles.
// Only the one or two elements adjacent to the node's face have nonzero
// blocks; block a of element e starts at flat index e * angles_per_element.
struct NodeGrad {
  int elem_k = -1;
  int elem_j = -1;
  Eigen::VectorXd gk;
  Eigen::VectorXd gj;
};

// What the greedy solver needs from a physics backend: a dictionary of fixed
// width per element, parametrized by a flat angle vector, with a quadratic
// skeleton functional in the activation coefficients. Angle and coefficient
// vectors use element-major flat layouts.
class TrainableModel {
 public:
  virtual ~TrainableModel() = default;

  virtual int dimension() const = 0;
  virtual void set_width(int width_param) = 0;  // n_r in 2D, m*_r in 3D
  virtual int width_param() const = 0;
  virtual int angles_per_element() const = 0;
  virtual int element_count() const = 0;
  int angle_dim() const { return angles_per_element() * element_count(); }
  virtual int coeff_dim() const = 0;

  virtual Eigen::VectorXd initial_angles() const = 0;
  // Wrap angles into their ranges and fix zenith degeneracies.
  virtual Eigen::VectorXd sanitize(Eigen::VectorXd phi) const = 0;

  virtual int node_count() const = 0;  // N_G, the training-sample count
  virtual DlsqResult solve_coefficients(const Eigen::VectorXd& phi,
                                        double truncation) const = 0;
  // J(u + layer(phi, coeffs)) for the accumulated solution u.
  virtual double loss(const Eigen::VectorXd& phi, const Eigen::VectorXcd& coeffs) const = 0;
  virtual double loss_current() const = 0;  // J(u)
  virtual Eigen::VectorXd loss_grad(const Eigen::VectorXd& phi,
                                    const Eigen::VectorXcd& coeffs) const = 0;
  virtual NodeGrad node_grad(int node, const Eigen::VectorXd& phi,
                             const Eigen::VectorXcd& coeffs) const = 0;

  virtual void append_layer(const Eigen::VectorXd& phi, const Eigen::VectorXcd& coeffs) = 0;

  // |||exact - (u + candidate)|||, NaN when no exact solution is attached.
  // Pass nullptrs for the error of the accumulated solution alone.
  virtual double energy_error(const Eigen::VectorXd* phi,
                              const Eigen::VectorXcd* coeffs) const = 0;
  virtual double energy_norm_exact() const = 0;  // |||exact|||, NaN if absent
};

}  // namespace dpwnn
