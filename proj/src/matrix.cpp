#include "ecc/matrix.hpp"

#include <algorithm>

namespace ecc {

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw CodeError("Matrix::from_rows: ragged rows");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

Vector Matrix::col_vector(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](FieldElement x) { return x.is_zero(); });
}

bool Matrix::row_is_zero(std::size_t i) const {
    const auto r = row(i);
    return std::all_of(r.begin(), r.end(), [](FieldElement x) { return x.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw CodeError("multiply: dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto dst = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const FieldElement x = a(i, k);
            if (x.is_zero()) continue;
            const auto src = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) dst[j] = f.add(dst[j], f.mul(x, src[j]));
        }
    }
    return out;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw CodeError("add: dimension mismatch");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.add(a(i, j), b(i, j));
    return out;
}

Vector vec_mul(const Field& f, std::span<const FieldElement> v, const Matrix& m) {
    if (v.size() != m.rows()) throw CodeError("vec_mul: dimension mismatch");
    Vector out(m.cols());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        const auto src = m.row(k);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(v[k], src[j]));
    }
    return out;
}

FieldElement dot(const Field& f, std::span<const FieldElement> a, std::span<const FieldElement> b) {
    if (a.size() != b.size()) throw CodeError("dot: length mismatch");
    FieldElement acc = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

std::size_t weight(std::span<const FieldElement> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](FieldElement x) { return !x.is_zero(); }));
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw CodeError("stack: column mismatch");
    Matrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) std::copy(top.row(i).begin(), top.row(i).end(), out.row(i).begin());
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        std::copy(bottom.row(i).begin(), bottom.row(i).end(), out.row(top.rows() + i).begin());
    return out;
}

Matrix hconcat(const Matrix& left, const Matrix& right) {
    if (left.rows() != right.rows()) throw CodeError("hconcat: row mismatch");
    Matrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        std::copy(left.row(i).begin(), left.row(i).end(), out.row(i).begin());
        std::copy(right.row(i).begin(), right.row(i).end(), out.row(i).begin() + static_cast<long>(left.cols()));
    }
    return out;
}

Matrix identity(const Field& f, std::size_t n) { return scalar_identity(n, f.one()); }

Matrix scalar_identity(std::size_t n, FieldElement c) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

Matrix frobenius(const Field& f, const Matrix& m, std::uint64_t l) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f.frobenius(m(i, j), l);
    return out;
}

std::vector<std::size_t> row_reduce(const Field& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != lead) std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(lead).begin());
        const FieldElement scale = f.inv(m(lead, col));
        for (auto& x : m.row(lead)) x = f.mul(x, scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead || m(i, col).is_zero()) continue;
            const FieldElement factor = f.neg(m(i, col));
            auto dst = m.row(i);
            const auto src = m.row(lead);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!src[j].is_zero()) dst[j] = f.add(dst[j], f.mul(factor, src[j]));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return row_reduce(f, m).size(); }

bool in_row_space(const Field& f, const Matrix& basis, const Matrix& rows) {
    if (rows.rows() == 0) return true;
    const std::size_t base_rank = rank(f, basis);
    return rank(f, stack(basis, rows)) == base_rank;
}

std::optional<Matrix> solve_left(const Field& f, const Matrix& a, const Matrix& b) {
    // X a = b  <=>  a^T X^T = b^T; eliminate on [a^T | b^T].
    if (a.cols() != b.cols()) throw CodeError("solve_left: column mismatch");
    const std::size_t unknowns = a.rows();
    Matrix aug = hconcat(a.transpose(), b.transpose());
    const auto pivots = row_reduce(f, aug);
    for (auto pc : pivots) {
        if (pc >= unknowns) return std::nullopt;
    }
    Matrix xt(unknowns, b.rows());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        for (std::size_t j = 0; j < b.rows(); ++j) xt(pivots[k], j) = aug(k, unknowns + j);
    }
    return xt.transpose();
}

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
    if (m.rows() != m.cols()) throw CodeError("inverse: matrix not square");
    Matrix aug = hconcat(m, identity(f, m.rows()));
    const auto pivots = row_reduce(f, aug);
    if (pivots.size() < m.rows() || pivots.back() >= m.rows()) return std::nullopt;
    Matrix out(m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) out(i, j) = aug(i, m.rows() + j);
    return out;
}

}  // namespace ecc
