#ifndef ECC_FOURIER_HPP
#define ECC_FOURIER_HPP

#include <cstdint>
#include <memory>

#include "ecc/field.hpp"
#include "ecc/matrix.hpp"

namespace ecc {

/**
 * The n x n Fourier matrix F_n = (w^{ij}) over a finite field, with w of order n.
 *
 * Rows e_i = (1, w^i, ..., w^{(n-1)i}) and the columns f_j of n * F_n^{-1} are stored
 * eagerly. They satisfy e_i . f_j = n delta_ij, and as vectors f_j = e_{n-j}. All indices
 * are taken modulo n.
 */
class FourierContext {
public:
    FourierContext(FieldPtr field, std::uint64_t n);
    /// Uses a caller-supplied w, which must have order exactly n.
    FourierContext(FieldPtr field, std::uint64_t n, FieldElement omega);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t n() const { return n_; }
    FieldElement omega() const { return omega_; }

    std::size_t wrap(std::int64_t i) const;
    const Vector& row(std::int64_t i) const { return rows_[wrap(i)]; }
    const Vector& inv_col(std::int64_t j) const { return inv_cols_[wrap(j)]; }

    /// Rows e_{idx[0]}, e_{idx[1]}, ...; a negative index yields a zero row.
    Matrix rows_matrix(std::span<const int> idx) const;
    /// Columns f_{idx[0]}, f_{idx[1]}, ... as an n x |idx| matrix.
    Matrix inv_cols_matrix(std::span<const int> idx) const;
    Matrix fourier_matrix() const;
    /// The true inverse n^{-1} [f_0 ... f_{n-1}].
    Matrix true_inverse() const;

private:
    void build();

    FieldPtr field_;
    std::size_t n_;
    FieldElement omega_;
    std::vector<Vector> rows_;
    std::vector<Vector> inv_cols_;
};

using FourierPtr = std::shared_ptr<const FourierContext>;

FourierPtr build_fourier(FieldPtr field, std::uint64_t n);

}  // namespace ecc

#endif  // ECC_FOURIER_HPP
