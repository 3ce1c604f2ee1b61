/**
 * @file socp.hpp
 * @brief Second-order cone programming: problem form and a self-contained
 *        primal-dual interior-point solver.
 *
 * Standard conic form, no equality constraints:
 *
 *     minimize    c'x
 *     subject to  Gx + s = h,   s in K
 *
 * where K = R+^l  x  Q_{d1} x ... x Q_{dN}  (nonnegative orthant rows first,
 * then second-order cone blocks; Q_d = { (t, v) : ||v|| <= t }).
 *
 * The solver interface is pluggable so an external conic solver can be
 * adapted; the default is an in-tree dense implementation of the homogeneous
 * self-dual embedding with Nesterov-Todd scaling and Mehrotra
 * predictor-corrector steps, with Ruiz equilibration of the problem data.
 * Intended for problems up to a few thousand cone rows and a few hundred
 * variables, which covers every power-control instance built here.
 */
#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

namespace cellfree {

/// Sparse row of G: sorted list of (column, value).
using SparseRow = std::vector<std::pair<int, double>>;

struct ConeProblem {
    int num_vars = 0;
    std::vector<SparseRow> rows;  ///< all m rows of G, orthant rows first
    Eigen::VectorXd h;            ///< size m
    Eigen::VectorXd c;            ///< size num_vars
    int orthant_rows = 0;
    std::vector<int> soc_dims;    ///< each >= 2, consecutive after the orthant

    int num_rows() const { return static_cast<int>(rows.size()); }
};

enum class SolveStatus {
    Optimal,
    PrimalInfeasible,
    DualInfeasible,
    MaxIterations,
    NumericalProblem,
};

struct ConeSolution {
    SolveStatus status = SolveStatus::NumericalProblem;
    Eigen::VectorXd x;
    Eigen::VectorXd s;
    Eigen::VectorXd z;
    double objective = 0.0;
    int iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double duality_gap = 0.0;
};

class ConeSolver {
  public:
    virtual ~ConeSolver() = default;
    virtual ConeSolution solve(const ConeProblem& problem) = 0;
};

class InteriorPointSolver final : public ConeSolver {
  public:
    struct Settings {
        int max_iterations = 100;
        double feas_tol = 1e-8;
        double abs_gap_tol = 1e-8;
        double rel_gap_tol = 1e-8;
        int equilibration_iters = 3;
        double step_fraction = 0.99;
    };

    InteriorPointSolver() = default;
    explicit InteriorPointSolver(Settings settings) : settings_(settings) {}

    ConeSolution solve(const ConeProblem& problem) override;

    Settings& settings() { return settings_; }

  private:
    Settings settings_;
};

std::unique_ptr<ConeSolver> make_default_solver();

}  // namespace cellfree
