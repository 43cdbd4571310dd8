#ifndef HZONO_LP_HPP_
#define HZONO_LP_HPP_

#include "hzono/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hzono {

// min objective^T x  s.t.  A_eq x = b_eq,  lower <= x <= upper. All bounds finite.
struct LinearProgram {
    Vector objective;
    Matrix A_eq;
    Vector b_eq;
    Vector lower;
    Vector upper;
};

enum class LpStatus { Optimal, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    double value = 0.0;
    Vector point;

    bool optimal() const { return status == LpStatus::Optimal; }
};

struct SimplexOptions {
    double feasibility_tol = 1e-8;
    double optimality_tol = 1e-9;
    double pivot_tol = 1e-9;
    // consecutive degenerate pivots before switching from Dantzig to Bland pricing
    std::size_t degenerate_switch = 50;
    std::size_t max_iterations = 500000;
    std::size_t reinvert_every = 200;
};

/// Bounded-variable primal simplex on a dense tableau.
///
/// Phase 1 runs once (artificial basis, sum of infeasibilities); afterwards
/// any number of objectives can be minimized, each warm-started from the
/// previous optimal basis. Reentrant; no shared state between instances.
class BoundedSimplex {
public:
    explicit BoundedSimplex(const LinearProgram& lp, SimplexOptions options = {});

    // Runs phase 1 on first call; cached afterwards.
    bool feasible();

    // Phase 2 from the current basis. Infeasible if phase 1 failed.
    LpResult minimize(const Vector& cost);

    std::size_t iterations() const { return iterations_; }

private:
    enum class Where : unsigned char { Lower, Upper, Basic };

    // Scales rows to unit max-norm and sets aside linearly dependent rows.
    void reduce_rows();
    void run_phase1();
    // Iterate with the current reduced-cost row; returns when optimal.
    void iterate(const Vector& cost);
    void compute_reduced_costs(const Vector& cost);
    void pivot(Index row, Index col);
    void reinvert();
    void drive_out_artificials();
    double residual() const;
    Vector current_point() const;
    double column_cost(const Vector& cost, Index basis_entry) const;

    SimplexOptions opt_;
    Matrix A_;        // original rows, sign-normalized in phase 1
    Vector b_;
    Matrix dependent_A_;
    Vector dependent_b_;
    Vector lower_;
    Vector upper_;
    Index m_ = 0;
    Index n_ = 0;

    Matrix T_;                  // B^-1 A
    Vector xB_;                 // basic values
    std::vector<Index> basis_;  // structural index, or -1 - row for artificial
    std::vector<Where> where_;  // status of structural columns
    Vector x_;                  // values of nonbasic structural columns
    Vector d_;                  // reduced costs

    std::optional<bool> feasible_;
    std::size_t iterations_ = 0;
    std::size_t since_reinvert_ = 0;
};

// Single solve: phase 1 then phase 2. Deterministic.
LpResult solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

}  // namespace hzono

#endif  // HZONO_LP_HPP_
