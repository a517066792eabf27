#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace exring {

/// Raised when two objects from different ambient rings are combined.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The variable X_{row,col} of the k x (m-k) indeterminate matrix.
/// Indices are 1-based; `rows`/`cols` record the ambient matrix size.
struct VarIndex {
    int row = 1;
    int col = 1;
    int rows = 1;
    int cols = 1;

    VarIndex() = default;
    VarIndex(int row, int col, int rows, int cols);

    /// Position in the row-major flattening (0-based).
    [[nodiscard]] std::size_t flat() const {
        return static_cast<std::size_t>((row - 1) * cols + (col - 1));
    }
};

/// X_{i,j} > X_{i',j'} iff i < i', or i = i' and j < j'.
/// Returns `greater` when `a` is the larger variable.
std::strong_ordering compare_variables(const VarIndex& a, const VarIndex& b);

/// Exponent vector of a monomial in C[X], stored densely as a rows x cols
/// matrix in row-major order. Row-major order coincides with decreasing
/// variable order, so comparing flattened entries gives lex order.
class ExponentMatrix {
public:
    using value_type = std::uint32_t;

    ExponentMatrix() = default;
    ExponentMatrix(int rows, int cols);
    ExponentMatrix(int rows, int cols, std::vector<value_type> entries);
    /// Nested rows, e.g. {{0, 2}, {2, 0}}. All rows must have equal length.
    ExponentMatrix(std::initializer_list<std::initializer_list<value_type>> rows);
    static ExponentMatrix from_rows(const std::vector<std::vector<value_type>>& rows);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }

    /// 1-based access matching the X_{i,j} notation.
    [[nodiscard]] value_type at(int i, int j) const { return entries_[index(i, j)]; }
    void set(int i, int j, value_type v) { entries_[index(i, j)] = v; }

    [[nodiscard]] value_type operator[](std::size_t flat) const { return entries_[flat]; }
    value_type& operator[](std::size_t flat) { return entries_[flat]; }

    [[nodiscard]] std::span<const value_type> entries() const { return entries_; }
    [[nodiscard]] std::vector<std::vector<value_type>> to_rows() const;

    [[nodiscard]] std::uint64_t degree() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool same_dims(const ExponentMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_;
    }

    /// Monomial product (entrywise sum).
    [[nodiscard]] ExponentMatrix operator*(const ExponentMatrix& o) const;
    /// True iff this monomial divides `o` (entrywise <=).
    [[nodiscard]] bool divides(const ExponentMatrix& o) const;
    /// Exact quotient o / this; requires divides(o).
    [[nodiscard]] ExponentMatrix quotient_of(const ExponentMatrix& o) const;
    [[nodiscard]] ExponentMatrix lcm(const ExponentMatrix& o) const;
    [[nodiscard]] bool coprime(const ExponentMatrix& o) const;
    [[nodiscard]] ExponentMatrix transpose() const;

    /// Structural equality (dims and entries).
    bool operator==(const ExponentMatrix& o) const = default;

    [[nodiscard]] std::size_t hash() const;

private:
    [[nodiscard]] std::size_t index(int i, int j) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<value_type> entries_;
};

/// Lex order induced by compare_variables. Throws DimensionMismatch.
std::strong_ordering compare_monomials_lex(const ExponentMatrix& a, const ExponentMatrix& b);

struct ExponentMatrixHash {
    std::size_t operator()(const ExponentMatrix& m) const { return m.hash(); }
};

std::string to_string(const ExponentMatrix& m);

}  // namespace exring
