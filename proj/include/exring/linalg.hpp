#pragma once

#include "exring/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace exring {

/// Sparse row over Q keyed by column index; zero entries are never stored.
using SparseRow = std::map<std::size_t, Rational>;

/// Row echelon form over Q built one row at a time.
///
/// Each accepted row is normalized to a leading 1 and stored against its
/// pivot column. Incoming rows are reduced by existing pivots, so
/// add_row doubles as an independence test.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t rank() const { return pivots_.size(); }

    /// Returns true if the row was independent of those already added.
    bool add_row(SparseRow row);

    /// True if `row` lies in the row space.
    [[nodiscard]] bool in_span(SparseRow row) const;

    /// Basis of {x : A x = 0} for the matrix whose rows were added, read from
    /// the reduced echelon form: one vector per free column f, with a 1 at f.
    [[nodiscard]] std::vector<SparseRow> kernel_basis() const;

private:
    void reduce(SparseRow& row) const;

    std::size_t cols_;
    std::map<std::size_t, SparseRow> pivots_;  // pivot column -> normalized row
};

}  // namespace exring
