#ifndef HZONO_MATRIX_HPP_
#define HZONO_MATRIX_HPP_

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hzono {

// Dense row-major storage for all set matrices.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

Matrix zeros(Index rows, Index cols);
Matrix identity(Index n);
Vector zeros(Index n);
Vector ones(Index n);

// [A B], rows must agree.
Matrix hcat(const Matrix& a, const Matrix& b);
// [A; B], columns must agree.
Matrix vcat(const Matrix& a, const Matrix& b);
Vector vcat(const Vector& a, const Vector& b);
// [A 0; 0 B]
Matrix blkdiag(const Matrix& a, const Matrix& b);

// Plain i-k-j product with a fixed summation order per entry, so identical
// inputs give identical bits no matter how the operands are laid out.
Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);

// Row-major literal, e.g. matrix({{1, 0}, {0, 1}}).
Matrix matrix(std::initializer_list<std::initializer_list<double>> rows);
Vector vector(std::initializer_list<double> values);
Vector vector(const std::vector<double>& values);

}  // namespace hzono

#endif  // HZONO_MATRIX_HPP_
