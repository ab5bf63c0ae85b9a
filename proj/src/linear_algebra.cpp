#include "whmilnor/linear_algebra.hpp"

#include "whmilnor/errors.hpp"

#include <utility>

namespace whm {

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void RationalMatrix::append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = row.size();
    }
    if (row.size() != cols_) {
        throw DomainError("row length does not match the matrix width");
    }
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

EchelonForm row_echelon(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != lead_row) {
            for (std::size_t c = col; c < m.cols(); ++c) {
                std::swap(m(pivot, c), m(lead_row, c));
            }
        }
        const Rational inv = Rational(1) / m(lead_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            m(lead_row, c) *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, col) == 0) {
                continue;
            }
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (m(lead_row, c) != 0) {
                    m(r, c) -= factor * m(lead_row, c);
                }
            }
        }
        pivots.push_back(col);
        ++lead_row;
    }
    RationalMatrix reduced(0, m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        reduced.append_row(m.row(r));
    }
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) {
    return row_echelon(m).rank();
}

std::optional<std::vector<Rational>> express_in_rows(const EchelonForm& echelon, const std::vector<Rational>& v) {
    if (v.size() != echelon.matrix.cols()) {
        throw DomainError("vector length does not match the echelon width");
    }
    std::vector<Rational> coords(echelon.rank());
    std::vector<Rational> residual = v;
    for (std::size_t r = 0; r < echelon.rank(); ++r) {
        const Rational c = residual[echelon.pivots[r]];
        coords[r] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t col = 0; col < residual.size(); ++col) {
            if (echelon.matrix(r, col) != 0) {
                residual[col] -= c * echelon.matrix(r, col);
            }
        }
    }
    for (const auto& x : residual) {
        if (x != 0) {
            return std::nullopt;
        }
    }
    return coords;
}

std::optional<std::vector<Rational>> solve_left(const RationalMatrix& a, const std::vector<Rational>& b) {
    // Row-reduce [A | I] so the identity part records which rows of A combine
    // into each echelon row.
    const std::size_t n = a.rows();
    RationalMatrix augmented(n, a.cols() + n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            augmented(r, c) = a(r, c);
        }
        augmented(r, a.cols() + r) = 1;
    }
    // Eliminate only over A's columns.
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < n; ++col) {
        std::size_t p = lead;
        while (p < n && augmented(p, col) == 0) {
            ++p;
        }
        if (p == n) {
            continue;
        }
        for (std::size_t c = 0; c < augmented.cols(); ++c) {
            std::swap(augmented(p, c), augmented(lead, c));
        }
        const Rational inv = Rational(1) / augmented(lead, col);
        for (std::size_t c = 0; c < augmented.cols(); ++c) {
            augmented(lead, c) *= inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == lead || augmented(r, col) == 0) {
                continue;
            }
            const Rational factor = augmented(r, col);
            for (std::size_t c = 0; c < augmented.cols(); ++c) {
                augmented(r, c) -= factor * augmented(lead, c);
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    std::vector<Rational> residual = b;
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Rational c = residual[pivots[r]];
        if (c == 0) {
            continue;
        }
        for (std::size_t col = 0; col < a.cols(); ++col) {
            residual[col] -= c * augmented(r, col);
        }
        for (std::size_t k = 0; k < n; ++k) {
            x[k] += c * augmented(r, a.cols() + k);
        }
    }
    for (const auto& v : residual) {
        if (v != 0) {
            return std::nullopt;
        }
    }
    return x;
}

Rational determinant(RationalMatrix m) {
    if (m.rows() != m.cols()) {
        throw DomainError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col) == 0) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != col) {
            for (std::size_t c = col; c < n; ++c) {
                std::swap(m(p, c), m(col, c));
            }
            det = -det;
        }
        det *= m(col, col);
        const Rational inv = Rational(1) / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) {
                continue;
            }
            const Rational factor = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) {
                m(r, c) -= factor * m(col, c);
            }
        }
    }
    return det;
}

} // namespace whm
