#include "hzono/rlt.hpp"

#include "hzono/errors.hpp"
#include "hzono/set_ops.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

namespace hzono {

std::map<IndexSet, int> f_coefficients(IndexSet J1, IndexSet J2)
{
    if (!J1.disjoint(J2))
        throw OverlappingIndexSets("f_coefficients: " + to_string(J1) + " and " + to_string(J2) +
                                   " intersect");
    std::map<IndexSet, int> out;
    for (IndexSet I : J2.subsets())
        out[J1 | I] = I.size() % 2 == 0 ? 1 : -1;
    return out;
}

std::size_t RltVariableTable::order_bound_slacks() const
{
    return static_cast<std::size_t>(std::count_if(slacks.begin(), slacks.end(), [](const SlackInfo& s) {
        return s.kind == SlackKind::OrderBound;
    }));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

ComplexityTuple rlt_complexity(const ComplexityTuple& t, int d)
{
    if (d < 1 || static_cast<std::size_t>(d) > t.n_b)
        throw LevelOutOfRange("rlt: level " + std::to_string(d) + " outside 1.." +
                              std::to_string(t.n_b));
    const std::uint64_t nb = t.n_b;
    const std::uint64_t ng = t.n_g;
    const std::uint64_t pow_nb = std::uint64_t{1} << nb;
    const std::uint64_t products = (std::uint64_t{1} << (d + 1)) * binomial(nb, static_cast<std::uint64_t>(d)) * ng;
    std::uint64_t eq_sets = 0;
    for (int i = 0; i <= d; ++i)
        eq_sets += binomial(nb, static_cast<std::uint64_t>(i));
    ComplexityTuple out;
    out.n_g = pow_nb * (ng + 1) + products - nb - 1;
    out.n_b = t.n_b;
    out.n_c = t.n_c * eq_sets + products;
    return out;
}

namespace {

using Pair = std::pair<IndexSet, IndexSet>;

// (J1, J2) of the given order: J ascending by mask, J1 ascending submask of J.
std::vector<Pair> ordered_pairs(int n, int order)
{
    std::vector<Pair> out;
    for (IndexSet J : subsets_of_size(n, order))
        for (IndexSet J1 : J.subsets())
            out.emplace_back(J1, J - J1);
    return out;
}

struct Assembly {
    Matrix Ac;
    Matrix Ab;
    Vector b;

    void add(Index row, const ColumnRef& ref, double coef)
    {
        switch (ref.kind) {
        case ColumnRef::Kind::Constant:
            b(row) -= coef;
            break;
        case ColumnRef::Kind::Binary:
            Ab(row, ref.index) += coef;
            break;
        case ColumnRef::Kind::Continuous:
            Ac(row, ref.index) += coef;
            break;
        }
    }
};

ColumnRef continuous(Index i) { return {ColumnRef::Kind::Continuous, i}; }

}  // namespace

RltLift build_xd(const HybridZonotope& H, int d, Exec exec)
{
    const int n = static_cast<int>(H.n_b());
    if (n == 0 || d < 1 || d > n)
        throw LevelOutOfRange("rlt: level " + std::to_string(d) + " outside 1.." + std::to_string(n));
    if (n > 30)
        throw EnumerationCapExceeded("rlt: too many binary factors");

    const HybridZonotope Z = convert_form(H, FactorForm::ZO);
    const Index m = Z.n_g();
    const Index r = Z.n_c();
    const Matrix& A = Z.Ab();  // binary part, x
    const Matrix& B = Z.Ac();  // continuous part, y
    const Vector& beta = Z.b();
    const int D = std::min(d + 1, n);
    const std::uint32_t all = (std::uint32_t{1} << n);

    // column allocation
    RltVariableTable table;
    Index next = 0;
    for (Index k = 0; k < m; ++k)
        table.v[{IndexSet(), k}] = continuous(next++);
    table.w[IndexSet()] = {ColumnRef::Kind::Constant, 0};
    for (int j = 0; j < n; ++j)
        table.w[IndexSet::of({j})] = {ColumnRef::Kind::Binary, j};
    for (std::uint32_t mask = 1; mask < all; ++mask)
        if (std::popcount(mask) >= 2)
            table.w[IndexSet::from_mask(mask)] = continuous(next++);
    for (std::uint32_t mask = 1; mask < all; ++mask)
        for (Index k = 0; k < m; ++k)
            table.v[{IndexSet::from_mask(mask), k}] = continuous(next++);

    const std::vector<Pair> pairs_d = ordered_pairs(n, d);
    const std::vector<Pair> pairs_D = ordered_pairs(n, D);
    for (const auto& [J1, J2] : pairs_d)
        for (Index k = 0; k < m; ++k) {
            table.slacks.push_back({next++, SlackKind::ProductLower, J1, J2, k});
            table.slacks.push_back({next++, SlackKind::ProductUpper, J1, J2, k});
        }
    for (const auto& [J1, J2] : pairs_D)
        table.slacks.push_back({next++, SlackKind::OrderBound, J1, J2, -1});
    const Index n_cont = next;

    // row layout
    const std::vector<IndexSet> eq_sets = subsets_up_to_size(n, d);
    const Index eq_rows = r * static_cast<Index>(eq_sets.size());
    const Index prod_rows = 2 * m * static_cast<Index>(pairs_d.size());
    const Index bound_rows = static_cast<Index>(pairs_D.size());
    const Index rows = eq_rows + prod_rows + bound_rows;

    Assembly out{Matrix::Zero(rows, n_cont), Matrix::Zero(rows, n), Vector::Zero(rows)};
    const bool par = exec == Exec::Parallel;
    const RltVariableTable& tab = table;

    // (A x + B y - beta) w_J = 0, linearized with x_j^2 = x_j
    const auto n_eq = static_cast<std::int64_t>(eq_sets.size());
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t s = 0; s < n_eq; ++s) {
        const IndexSet J = eq_sets[static_cast<std::size_t>(s)];
        const auto members = J.elements();
        for (Index i = 0; i < r; ++i) {
            const Index row = static_cast<Index>(s) * r + i;
            double own = 0.0;
            for (int j : members)
                own += A(i, j);
            out.add(row, tab.w_ref(J), own - beta(i));
            for (int j = 0; j < n; ++j)
                if (!J.contains(j))
                    out.add(row, tab.w_ref(J.with(j)), A(i, j));
            for (Index k = 0; k < m; ++k)
                out.add(row, tab.v_ref(J, k), B(i, k));
        }
    }

    // f_d >= f_d^k >= 0 as two equalities with slacks
    const auto n_pd = static_cast<std::int64_t>(pairs_d.size());
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t p = 0; p < n_pd; ++p) {
        const auto& [J1, J2] = pairs_d[static_cast<std::size_t>(p)];
        const auto coef = f_coefficients(J1, J2);
        for (Index k = 0; k < m; ++k) {
            const Index slot = static_cast<Index>(p) * m + k;
            const Index lower_row = eq_rows + 2 * slot;
            const Index upper_row = lower_row + 1;
            const SlackInfo& lower = tab.slacks[static_cast<std::size_t>(2 * slot)];
            const SlackInfo& upper = tab.slacks[static_cast<std::size_t>(2 * slot + 1)];
            for (const auto& [S, sign] : coef) {
                out.add(lower_row, tab.v_ref(S, k), sign);
                out.add(upper_row, tab.w_ref(S), sign);
                out.add(upper_row, tab.v_ref(S, k), -sign);
            }
            out.add(lower_row, continuous(lower.column), -1.0);
            out.add(upper_row, continuous(upper.column), -1.0);
        }
    }

    // f_D >= 0
    const auto n_pD = static_cast<std::int64_t>(pairs_D.size());
    const std::size_t bound_offset = 2 * static_cast<std::size_t>(m) * pairs_d.size();
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t p = 0; p < n_pD; ++p) {
        const auto& [J1, J2] = pairs_D[static_cast<std::size_t>(p)];
        const Index row = eq_rows + prod_rows + static_cast<Index>(p);
        for (const auto& [S, sign] : f_coefficients(J1, J2))
            out.add(row, tab.w_ref(S), sign);
        out.add(row, continuous(tab.slacks[bound_offset + static_cast<std::size_t>(p)].column), -1.0);
    }

    // ambient coordinates (x, y)
    Matrix Gc = Matrix::Zero(n + m, n_cont);
    for (Index k = 0; k < m; ++k)
        Gc(n + k, table.v_ref(IndexSet(), k).index) = 1.0;
    Matrix Gb = Matrix::Zero(n + m, n);
    for (int j = 0; j < n; ++j)
        Gb(j, j) = 1.0;

    return {HybridZonotope(std::move(Gc), std::move(Gb), Vector::Zero(n + m), std::move(out.Ac),
                           std::move(out.Ab), std::move(out.b), FactorForm::ZO),
            std::move(table)};
}

HybridZonotope rlt_sharpen(const HybridZonotope& H, int d, Exec exec)
{
    if (H.n_b() == 0)
        return H;
    const HybridZonotope Z = convert_form(H, FactorForm::ZO);
    const RltLift lift = build_xd(Z, d, exec);
    // (x, y) -> Gb x + Gc y + c; every lifted column keeps a zero generator
    return affine_map(lift.projected, hcat(Z.Gb(), Z.Gc()), Z.c());
}

ConstrainedZonotope rlt_convex_hull(const HybridZonotope& H, Exec exec)
{
    if (H.n_b() == 0)
        return H.as_constrained_zonotope();
    return convex_relaxation(rlt_sharpen(H, static_cast<int>(H.n_b()), exec));
}

RltComplexityReport rlt_report(const HybridZonotope& input, const HybridZonotope& output, int d)
{
    RltComplexityReport report;
    report.level = d;
    report.actual = complexity(output);
    report.nominal = input.n_b() == 0 ? complexity(input) : rlt_complexity(complexity(input), d);
    return report;
}

}  // namespace hzono
