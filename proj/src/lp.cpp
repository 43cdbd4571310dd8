#include "hzono/lp.hpp"

#include "hzono/errors.hpp"

#include <Eigen/LU>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>

namespace hzono {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRankTol = 1e-10;

bool is_artificial(Index entry) { return entry < 0; }
Index artificial_row(Index entry) { return -1 - entry; }

}  // namespace

BoundedSimplex::BoundedSimplex(const LinearProgram& lp, SimplexOptions options)
    : opt_(options), A_(lp.A_eq), b_(lp.b_eq), lower_(lp.lower), upper_(lp.upper)
{
    m_ = A_.rows();
    n_ = A_.cols();
    if (b_.size() != m_ || lower_.size() != n_ || upper_.size() != n_ ||
        (lp.objective.size() != 0 && lp.objective.size() != n_))
        throw DimensionMismatch("LinearProgram: inconsistent dimensions");
    for (Index j = 0; j < n_; ++j) {
        if (!std::isfinite(lower_(j)) || !std::isfinite(upper_(j)))
            throw DimensionMismatch("LinearProgram: bounds must be finite");
        if (lower_(j) > upper_(j))
            throw DimensionMismatch("LinearProgram: lower bound above upper bound");
    }
    reduce_rows();
}

void BoundedSimplex::reduce_rows()
{
    for (Index i = 0; i < m_; ++i) {
        const double scale = n_ > 0 ? A_.row(i).cwiseAbs().maxCoeff() : 0.0;
        if (scale > 0.0) {
            A_.row(i) /= scale;
            b_(i) /= scale;
        }
    }
    if (m_ == 0)
        return;
    // keep a maximal independent subset of the rows; the rest must agree with it
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Eigen::MatrixXd(A_.transpose()));
    qr.setThreshold(kRankTol);
    const Index rank = qr.rank();
    if (rank == m_)
        return;
    std::vector<Index> kept;
    std::vector<bool> is_kept(static_cast<std::size_t>(m_), false);
    for (Index k = 0; k < rank; ++k)
        is_kept[static_cast<std::size_t>(qr.colsPermutation().indices()(k))] = true;
    Matrix A(rank, n_);
    Vector b(rank);
    dependent_A_.resize(m_ - rank, n_);
    dependent_b_.resize(m_ - rank);
    Index r = 0;
    Index d = 0;
    for (Index i = 0; i < m_; ++i) {
        if (is_kept[static_cast<std::size_t>(i)]) {
            A.row(r) = A_.row(i);
            b(r++) = b_(i);
        } else {
            dependent_A_.row(d) = A_.row(i);
            dependent_b_(d++) = b_(i);
        }
    }
    A_ = std::move(A);
    b_ = std::move(b);
    m_ = rank;
}

bool BoundedSimplex::feasible()
{
    if (!feasible_)
        run_phase1();
    return *feasible_;
}

double BoundedSimplex::column_cost(const Vector& cost, Index entry) const
{
    if (is_artificial(entry))
        return cost.size() == 0 ? 1.0 : 0.0;
    return cost.size() == 0 ? 0.0 : cost(entry);
}

void BoundedSimplex::compute_reduced_costs(const Vector& cost)
{
    Vector cb(m_);
    for (Index i = 0; i < m_; ++i)
        cb(i) = column_cost(cost, basis_[static_cast<std::size_t>(i)]);
    d_ = (cost.size() == 0 ? Vector(Vector::Zero(n_)) : cost) - T_.transpose() * cb;
}

void BoundedSimplex::run_phase1()
{
    where_.assign(static_cast<std::size_t>(n_), Where::Lower);
    x_ = lower_;
    const Vector r = b_ - A_ * x_;
    for (Index i = 0; i < m_; ++i)
        if (r(i) < 0.0) {
            A_.row(i) *= -1.0;
            b_(i) = -b_(i);
        }
    T_ = A_;
    xB_ = r.cwiseAbs();
    basis_.resize(static_cast<std::size_t>(m_));
    for (Index i = 0; i < m_; ++i)
        basis_[static_cast<std::size_t>(i)] = -1 - i;

    // an empty cost vector selects the phase-1 objective
    const Vector phase1;
    compute_reduced_costs(phase1);
    iterate(phase1);

    double infeasibility = 0.0;
    for (Index i = 0; i < m_; ++i)
        if (is_artificial(basis_[static_cast<std::size_t>(i)]))
            infeasibility += xB_(i);
    const double scale = 1.0 + (m_ > 0 ? b_.cwiseAbs().maxCoeff() : 0.0);
    feasible_ = infeasibility <= opt_.feasibility_tol * scale;
    if (*feasible_)
        drive_out_artificials();
    if (*feasible_ && dependent_A_.rows() > 0) {
        // dependent rows are constant on the solution set of the kept rows
        const Vector r = dependent_A_ * current_point() - dependent_b_;
        const double dscale = 1.0 + dependent_b_.cwiseAbs().maxCoeff();
        feasible_ = r.cwiseAbs().maxCoeff() <= 1e3 * opt_.feasibility_tol * dscale;
    }
}

void BoundedSimplex::drive_out_artificials()
{
    std::vector<Index> redundant;
    for (Index i = 0; i < m_; ++i) {
        const Index entry = basis_[static_cast<std::size_t>(i)];
        if (!is_artificial(entry))
            continue;
        Index best = -1;
        double best_abs = std::max(opt_.pivot_tol, 1e-7);
        for (Index j = 0; j < n_; ++j) {
            if (where_[static_cast<std::size_t>(j)] == Where::Basic)
                continue;
            const double a = std::abs(T_(i, j));
            if (a > best_abs) {
                best_abs = a;
                best = j;
            }
        }
        if (best < 0) {
            redundant.push_back(i);
            continue;
        }
        // degenerate pivot that zeroes the artificial
        const double step = xB_(i) / T_(i, best);
        xB_ -= step * T_.col(best);
        const double entering = x_(best) + step;
        xB_(i) = entering;
        pivot(i, best);
    }
    if (!redundant.empty()) {
        std::vector<bool> drop_pos(static_cast<std::size_t>(m_), false);
        std::vector<bool> drop_row(static_cast<std::size_t>(m_), false);
        for (Index pos : redundant) {
            drop_pos[static_cast<std::size_t>(pos)] = true;
            drop_row[static_cast<std::size_t>(artificial_row(basis_[static_cast<std::size_t>(pos)]))] =
                true;
        }
        const Index keep = m_ - static_cast<Index>(redundant.size());
        Matrix A(keep, n_);
        Vector b(keep);
        std::vector<Index> basis;
        Index k = 0;
        for (Index i = 0; i < m_; ++i)
            if (!drop_row[static_cast<std::size_t>(i)]) {
                A.row(k) = A_.row(i);
                b(k) = b_(i);
                ++k;
            }
        for (Index i = 0; i < m_; ++i)
            if (!drop_pos[static_cast<std::size_t>(i)])
                basis.push_back(basis_[static_cast<std::size_t>(i)]);
        A_ = std::move(A);
        b_ = std::move(b);
        basis_ = std::move(basis);
        m_ = keep;
        reinvert();
    }
}

void BoundedSimplex::pivot(Index row, Index col)
{
    const double p = T_(row, col);
    T_.row(row) /= p;
    for (Index i = 0; i < m_; ++i) {
        if (i == row)
            continue;
        const double a = T_(i, col);
        if (a != 0.0)
            T_.row(i) -= a * T_.row(row);
    }
    if (d_.size() == n_) {
        const double dq = d_(col);
        if (dq != 0.0)
            d_ -= dq * T_.row(row).transpose();
    }
    basis_[static_cast<std::size_t>(row)] = col;
    where_[static_cast<std::size_t>(col)] = Where::Basic;
    // the leaving column's nonbasic status is set by the caller
    ++iterations_;
    ++since_reinvert_;
}

void BoundedSimplex::iterate(const Vector& cost)
{
    std::size_t degenerate_run = 0;
    int refinements = 0;
    for (;;) {
        if (iterations_ > opt_.max_iterations)
            throw NumericalFailure("simplex: iteration limit reached");
        if (since_reinvert_ >= opt_.reinvert_every) {
            reinvert();
            compute_reduced_costs(cost);
        }

        const bool bland = degenerate_run >= opt_.degenerate_switch;
        Index q = -1;
        double best_score = 0.0;
        for (Index j = 0; j < n_; ++j) {
            const Where w = where_[static_cast<std::size_t>(j)];
            if (w == Where::Basic || lower_(j) == upper_(j))
                continue;
            double score = 0.0;
            if (w == Where::Lower && d_(j) < -opt_.optimality_tol)
                score = -d_(j);
            else if (w == Where::Upper && d_(j) > opt_.optimality_tol)
                score = d_(j);
            else
                continue;
            if (bland) {
                q = j;
                break;
            }
            if (score > best_score) {
                best_score = score;
                q = j;
            }
        }

        if (q < 0) {
            // optimal for the current tableau; confirm against the original rows
            const double scale = 1.0 + (m_ > 0 ? b_.cwiseAbs().maxCoeff() : 0.0);
            if (refinements < 3 && residual() > 1e-9 * scale) {
                reinvert();
                compute_reduced_costs(cost);
                ++refinements;
                continue;
            }
            return;
        }

        const double dir = where_[static_cast<std::size_t>(q)] == Where::Lower ? 1.0 : -1.0;
        const auto alpha = T_.col(q);
        const double tiny = opt_.pivot_tol * std::max(1.0, m_ > 0 ? alpha.cwiseAbs().maxCoeff() : 0.0);

        // Harris ratio test: bounds relaxed by the feasibility tolerance give
        // the admissible step, then the largest pivot within that step wins.
        auto row_ratio = [&](Index i, double slack, bool& to_upper) {
            const double rate = dir * alpha(i);
            const Index entry = basis_[static_cast<std::size_t>(i)];
            const double lo = is_artificial(entry) ? 0.0 : lower_(entry);
            const double hi = is_artificial(entry) ? kInf : upper_(entry);
            to_upper = rate < 0.0;
            if (rate > 0.0)
                return (std::max(0.0, xB_(i) - lo) + slack) / rate;
            if (hi == kInf)
                return kInf;
            return (std::max(0.0, hi - xB_(i)) + slack) / -rate;
        };
        double theta = kInf;
        for (Index i = 0; i < m_; ++i) {
            if (std::abs(alpha(i)) <= tiny)
                continue;
            bool to_upper;
            theta = std::min(theta, row_ratio(i, opt_.feasibility_tol, to_upper));
        }

        Index leave = -1;
        bool leave_to_upper = false;
        double best_ratio = upper_(q) - lower_(q);
        if (best_ratio > theta) {
            double best_pivot = 0.0;
            Index best_entry = std::numeric_limits<Index>::max();
            for (Index i = 0; i < m_; ++i) {
                const double a = std::abs(alpha(i));
                if (a <= tiny)
                    continue;
                bool to_upper;
                const double ratio = row_ratio(i, 0.0, to_upper);
                if (ratio > theta)
                    continue;
                const Index entry = basis_[static_cast<std::size_t>(i)];
                const Index key = is_artificial(entry) ? -1 : entry;
                const bool take = leave < 0 || (bland ? key < best_entry : a > best_pivot);
                if (take) {
                    leave = i;
                    leave_to_upper = to_upper;
                    best_pivot = a;
                    best_entry = key;
                    best_ratio = ratio;
                }
            }
        }

        const double step = best_ratio;
        degenerate_run = step <= 1e-12 ? degenerate_run + 1 : 0;

        if (leave < 0) {
            // bound flip of the entering column
            xB_ -= (dir * step) * alpha;
            const bool to_upper = dir > 0.0;
            where_[static_cast<std::size_t>(q)] = to_upper ? Where::Upper : Where::Lower;
            x_(q) = to_upper ? upper_(q) : lower_(q);
            ++iterations_;
            continue;
        }

        const Index leaving = basis_[static_cast<std::size_t>(leave)];
        const double entering_value = x_(q) + dir * step;
        xB_ -= (dir * step) * alpha;
        pivot(leave, q);
        xB_(leave) = entering_value;
        if (!is_artificial(leaving)) {
            where_[static_cast<std::size_t>(leaving)] = leave_to_upper ? Where::Upper : Where::Lower;
            x_(leaving) = leave_to_upper ? upper_(leaving) : lower_(leaving);
        }
    }
}

void BoundedSimplex::reinvert()
{
    since_reinvert_ = 0;
    if (m_ == 0) {
        T_.resize(0, n_);
        xB_.resize(0);
        return;
    }
    Eigen::MatrixXd B(m_, m_);
    for (Index i = 0; i < m_; ++i) {
        const Index entry = basis_[static_cast<std::size_t>(i)];
        if (is_artificial(entry)) {
            B.col(i).setZero();
            B(artificial_row(entry), i) = 1.0;
        } else {
            B.col(i) = A_.col(entry);
        }
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    if (!(lu.rcond() > 1e-14))
        throw NumericalFailure("simplex: basis matrix is singular");

    Vector rhs = b_;
    for (Index j = 0; j < n_; ++j)
        if (where_[static_cast<std::size_t>(j)] != Where::Basic)
            rhs -= x_(j) * A_.col(j);
    xB_ = lu.solve(rhs);
    const Eigen::MatrixXd A = A_;
    T_ = lu.solve(A);
}

double BoundedSimplex::residual() const
{
    if (m_ == 0)
        return 0.0;
    Vector r = A_ * current_point() - b_;
    for (Index i = 0; i < m_; ++i) {
        const Index entry = basis_[static_cast<std::size_t>(i)];
        if (is_artificial(entry))
            r(artificial_row(entry)) += xB_(i);
    }
    return r.cwiseAbs().maxCoeff();
}

Vector BoundedSimplex::current_point() const
{
    Vector x = x_;
    for (Index i = 0; i < m_; ++i) {
        const Index entry = basis_[static_cast<std::size_t>(i)];
        if (!is_artificial(entry))
            x(entry) = xB_(i);
    }
    return x;
}

LpResult BoundedSimplex::minimize(const Vector& cost)
{
    if (cost.size() != n_)
        throw DimensionMismatch("simplex: cost length differs from column count");
    LpResult result;
    if (!feasible())
        return result;
    compute_reduced_costs(cost);
    iterate(cost);
    result.status = LpStatus::Optimal;
    result.point = current_point().cwiseMax(lower_).cwiseMin(upper_);
    result.value = cost.dot(result.point);
    return result;
}

LpResult solve_lp(const LinearProgram& lp, const SimplexOptions& options)
{
    BoundedSimplex simplex(lp, options);
    const Vector cost = lp.objective.size() == 0 ? Vector(Vector::Zero(lp.A_eq.cols())) : lp.objective;
    return simplex.minimize(cost);
}

}  // namespace hzono
