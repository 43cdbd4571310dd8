#include "hzono/matrix.hpp"

#include "hzono/errors.hpp"

namespace hzono {

Matrix zeros(Index rows, Index cols) { return Matrix::Zero(rows, cols); }

Matrix identity(Index n) { return Matrix::Identity(n, n); }

Vector zeros(Index n) { return Vector::Zero(n); }

Vector ones(Index n) { return Vector::Ones(n); }

Matrix hcat(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionMismatch("hcat: row counts differ");
    Matrix out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

Matrix vcat(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw DimensionMismatch("vcat: column counts differ");
    Matrix out(a.rows() + b.rows(), a.cols());
    out.topRows(a.rows()) = a;
    out.bottomRows(b.rows()) = b;
    return out;
}

Vector vcat(const Vector& a, const Vector& b)
{
    Vector out(a.size() + b.size());
    out.head(a.size()) = a;
    out.tail(b.size()) = b;
    return out;
}

Matrix blkdiag(const Matrix& a, const Matrix& b)
{
    Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("multiply: inner dimensions differ");
    Matrix out = Matrix::Zero(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0)
                continue;
            for (Index j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

Vector multiply(const Matrix& a, const Vector& x)
{
    if (a.cols() != x.size())
        throw DimensionMismatch("multiply: inner dimensions differ");
    Vector out = Vector::Zero(a.rows());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index k = 0; k < a.cols(); ++k)
            out(i) += a(i, k) * x(k);
    return out;
}

Matrix matrix(std::initializer_list<std::initializer_list<double>> rows)
{
    const Index r = static_cast<Index>(rows.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    Matrix out(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != c)
            throw DimensionMismatch("matrix: ragged rows");
        Index j = 0;
        for (double v : row)
            out(i, j++) = v;
        ++i;
    }
    return out;
}

Vector vector(std::initializer_list<double> values)
{
    return vector(std::vector<double>(values));
}

Vector vector(const std::vector<double>& values)
{
    Vector out(static_cast<Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        out(static_cast<Index>(i)) = values[i];
    return out;
}

}  // namespace hzono
