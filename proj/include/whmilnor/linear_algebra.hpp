#pragma once

#include "whmilnor/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace whm {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    void append_row(const std::vector<Rational>& row);

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct EchelonForm {
    RationalMatrix matrix;            // only the nonzero rows
    std::vector<std::size_t> pivots;  // strictly increasing

    std::size_t rank() const noexcept { return pivots.size(); }
};

EchelonForm row_echelon(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

/// Coordinates of `v` in the row space of an echelon form, if it lies there.
std::optional<std::vector<Rational>> express_in_rows(const EchelonForm& echelon, const std::vector<Rational>& v);

/// Solves x * A = b for a row vector x (b a combination of A's rows), if solvable.
std::optional<std::vector<Rational>> solve_left(const RationalMatrix& a, const std::vector<Rational>& b);

Rational determinant(RationalMatrix m);

} // namespace whm
