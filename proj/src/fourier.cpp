#include "ecc/fourier.hpp"

namespace ecc {

FourierContext::FourierContext(FieldPtr field, std::uint64_t n) : field_(std::move(field)), n_(n) {
    if (n_ == 0) throw CodeError("build_fourier: n must be positive");
    if ((field_->order() - 1) % n_ != 0) throw CodeError("build_fourier: no element of order n in the field");
    omega_ = element_of_order(*field_, n_);
    build();
}

FourierContext::FourierContext(FieldPtr field, std::uint64_t n, FieldElement omega)
    : field_(std::move(field)), n_(n), omega_(omega) {
    if (n_ == 0) throw CodeError("build_fourier: n must be positive");
    if (!field_->contains(omega_) || omega_.is_zero() || field_->element_order(omega_) != n_) {
        throw CodeError("build_fourier: omega does not have order n");
    }
    build();
}

void FourierContext::build() {
    const Field& f = *field_;
    std::vector<FieldElement> powers(n_);
    powers[0] = f.one();
    for (std::size_t k = 1; k < n_; ++k) powers[k] = f.mul(powers[k - 1], omega_);
    rows_.assign(n_, Vector(n_));
    inv_cols_.assign(n_, Vector(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            rows_[i][j] = powers[(i * j) % n_];
            inv_cols_[i][j] = powers[(n_ - (i * j) % n_) % n_];
        }
    }
}

std::size_t FourierContext::wrap(std::int64_t i) const {
    const auto n = static_cast<std::int64_t>(n_);
    return static_cast<std::size_t>(((i % n) + n) % n);
}

Matrix FourierContext::rows_matrix(std::span<const int> idx) const {
    Matrix m(idx.size(), n_);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0) continue;
        const auto& r = row(idx[k]);
        std::copy(r.begin(), r.end(), m.row(k).begin());
    }
    return m;
}

Matrix FourierContext::inv_cols_matrix(std::span<const int> idx) const {
    Matrix m(n_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto& c = inv_col(idx[k]);
        for (std::size_t i = 0; i < n_; ++i) m(i, k) = c[i];
    }
    return m;
}

Matrix FourierContext::fourier_matrix() const { return Matrix::from_rows(rows_, n_); }

Matrix FourierContext::true_inverse() const {
    const Field& f = *field_;
    const FieldElement scale = f.inv(f.from_int(static_cast<std::int64_t>(n_ % f.p())));
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < n_; ++i) m(i, j) = f.mul(scale, inv_cols_[j][i]);
    return m;
}

FourierPtr build_fourier(FieldPtr field, std::uint64_t n) {
    return std::make_shared<const FourierContext>(std::move(field), n);
}

}  // namespace ecc
