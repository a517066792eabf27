#pragma once

#include "exring/exponent_matrix.hpp"
#include "exring/tableaux.hpp"

#include <vector>

namespace exring {

/// rows x cols nonnegative integer matrix with entries <= bound, weakly
/// decreasing along every row and every column.
class PlanePartition {
public:
    PlanePartition() = default;
    /// Validates; throws std::invalid_argument.
    PlanePartition(int rows, int cols, std::vector<int> entries, int bound);
    static PlanePartition from_rows(const std::vector<std::vector<int>>& rows, int bound);
    static PlanePartition zero(int rows, int cols, int bound = 0);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] int bound() const { return bound_; }
    /// 1-based.
    [[nodiscard]] int at(int i, int j) const;
    [[nodiscard]] int max_entry() const;
    [[nodiscard]] std::vector<std::vector<int>> to_rows() const;
    [[nodiscard]] const std::vector<int>& entries() const { return entries_; }
    [[nodiscard]] PlanePartition transpose() const;
    /// Same entries under a different bound (validated).
    [[nodiscard]] PlanePartition with_bound(int bound) const;

    bool operator==(const PlanePartition&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> entries_;
    int bound_ = 0;
};

/// B_{ij} = P^{a-i+j}_j for i >= j and Q^{b-j+i}_i for i <= j, where P^l and
/// Q^l are Gelfand-Tsetlin levels. `p` needs entries <= a and `q` entries
/// <= b. The bound of the result is the number of columns of the common shape.
/// Throws std::invalid_argument on a shape mismatch or diagonal inconsistency.
PlanePartition tableaux_to_pp(const SSYT& p, const SSYT& q, int a, int b);

struct PPTableaux {
    SSYT p;  // content bound = rows of B
    SSYT q;  // content bound = cols of B
};

/// Reads both Gelfand-Tsetlin patterns off B; the diagonal is shared.
PPTableaux pp_to_tableaux(const PlanePartition& b);

/// Matrix to plane partition through RSK: the recording tableau (row
/// indices) supplies the lower triangle and the insertion tableau (column
/// indices) the upper one.
PlanePartition matrix_to_pp(const ExponentMatrix& m);
ExponentMatrix pp_to_matrix(const PlanePartition& b);

PlanePartition transpose(const PlanePartition& b);
ExponentMatrix matrix_transpose(const ExponentMatrix& m);

}  // namespace exring
