#ifndef ECC_MATRIX_HPP
#define ECC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ecc/field.hpp"

namespace ecc {

using Vector = std::vector<FieldElement>;

/// Dense row-major matrix of field elements. Arithmetic takes the field explicitly.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    FieldElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const FieldElement> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<FieldElement> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    Vector row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
    Vector col_vector(std::size_t j) const;

    bool is_zero() const;
    bool row_is_zero(std::size_t i) const;
    Matrix transpose() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Vector vec_mul(const Field& f, std::span<const FieldElement> v, const Matrix& m);
FieldElement dot(const Field& f, std::span<const FieldElement> a, std::span<const FieldElement> b);
std::size_t weight(std::span<const FieldElement> v);

Matrix stack(const Matrix& top, const Matrix& bottom);
Matrix hconcat(const Matrix& left, const Matrix& right);
Matrix identity(const Field& f, std::size_t n);
Matrix scalar_identity(std::size_t n, FieldElement c);
Matrix frobenius(const Field& f, const Matrix& m, std::uint64_t l);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const Field& f, Matrix& m);
std::size_t rank(const Field& f, Matrix m);
/// True when every row of `rows` lies in the row space of `basis`.
bool in_row_space(const Field& f, const Matrix& basis, const Matrix& rows);
/// Solves X * a = b; nullopt when inconsistent.
std::optional<Matrix> solve_left(const Field& f, const Matrix& a, const Matrix& b);
/// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Field& f, const Matrix& m);

}  // namespace ecc

#endif  // ECC_MATRIX_HPP
