#pragma once

#include <optional>
#include <string>
#include <vector>

#include "safectl/linalg.hpp"

namespace safectl::lmi {

// ---------------------------------------------------------------------------
// Structured matrix variables over a flat decision vector.
//
// Scalarization maps each variable to a contiguous slice of the decision
// vector; pack/unpack round-trips exactly.
//   Symmetric:     upper triangle, row-major; n(n+1)/2 scalars
//   Diagonal:      n scalars
//   BlockDiagonal: given blocks, dense row-major inside each block
//   Full:          dense row-major
// ---------------------------------------------------------------------------

enum class Structure { Symmetric, Diagonal, BlockDiagonal, Full };

struct MatrixVariable {
    std::string name;
    int rows = 0;
    int cols = 0;
    Structure structure = Structure::Full;
    std::vector<std::pair<int, int>> block_shapes;  // BlockDiagonal only
    int offset = 0;  // index of first scalar in the decision vector

    int size() const;
    // Coefficient matrix of scalar k (local index): d(unpack)/dz_k.
    MatrixXd basis(int k) const;
    MatrixXd unpack(const VectorXd& z) const;
    void pack(const MatrixXd& value, VectorXd& z) const;
};

// ---------------------------------------------------------------------------
// One affine symmetric matrix form F(z) = constant + sum_i z_i * coeff_i.
// Senses: Psd          F(z) >= 0
//         PsdStrict    F(z) >= tau*I   (tau from solver options)
//         NsdStrict    F(z) <= -tau*I
// ---------------------------------------------------------------------------

enum class Sense { Psd, PsdStrict, NsdStrict };

struct AffineBlock {
    std::string name;  // constraint-family label, used in diagnostics
    int dim = 0;
    Sense sense = Sense::Psd;
    MatrixXd constant;                                 // dim x dim, symmetric
    std::vector<std::pair<int, MatrixXd>> coeff;       // decision index -> symmetric matrix

    MatrixXd evaluate(const VectorXd& z) const;
    void add_coeff(int index, const MatrixXd& C);      // accumulates per index
};

struct LinearEquality {
    VectorXd a;   // over the full decision vector
    double rhs = 0.0;
};

// ---------------------------------------------------------------------------
// minimize  c.z - w * logdet(G(z))   s.t. blocks, equalities
// w = 0  -> linear-objective SDP; empty objective -> feasibility problem.
// ---------------------------------------------------------------------------

struct MaxDetProgram {
    std::vector<MatrixVariable> variables;
    std::vector<AffineBlock> blocks;
    std::vector<LinearEquality> equalities;
    VectorXd c;                          // empty => zero
    double logdet_weight = 0.0;          // w >= 0
    std::optional<AffineBlock> logdet_arg;  // G(z); sense ignored

    MatrixVariable& add_variable(const std::string& name, int rows, int cols,
                                 Structure structure,
                                 std::vector<std::pair<int, int>> block_shapes = {});
    const MatrixVariable& variable(const std::string& name) const;
    int num_scalars() const;

    // Initialize z from per-variable values (others zero).
    VectorXd zero_point() const { return VectorXd::Zero(num_scalars()); }
};

enum class SolveStatus { Optimal, Infeasible, MaxIterations };

struct SolverOptions {
    double tol = 1e-8;            // duality-gap target (barrier degree / t)
    double feas_tol = 1e-8;       // feasibility tolerance for reporting
    double tau_factor = 1e-7;     // strict margin = tau_factor * max const norm
    double t0 = 1.0;              // initial barrier weight
    double t_mult = 10.0;         // outer-loop multiplier
    int max_newton = 4000;        // total Newton step budget
    int max_inner = 80;           // Newton steps per centering
    double var_bound = 1e8;       // box trust region |z_i| <= var_bound
    bool verbose = false;
};

struct SolveReport {
    SolveStatus status = SolveStatus::MaxIterations;
    VectorXd point;                      // full decision vector
    double objective = 0.0;              // c.z - w*logdet(G)
    std::vector<double> block_margins;   // per block; see margin convention below
    int newton_iters = 0;
    double tau = 0.0;                    // strict margin actually used
    std::string diagnostic;              // e.g. most violated family when infeasible
};

// Margin convention: Psd and PsdStrict blocks report lambda_min(F(z)); NsdStrict
// blocks report lambda_min(-F(z)).  Negative margin on a Psd block means violated;
// strict blocks require margin >= tau.
std::vector<double> check_point(const std::vector<AffineBlock>& blocks, const VectorXd& z);

SolveReport solve(const MaxDetProgram& program, const SolverOptions& options = {});

}  // namespace safectl::lmi
