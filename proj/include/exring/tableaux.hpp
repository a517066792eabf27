#pragma once

#include "exring/exponent_matrix.hpp"

#include <vector>

namespace exring {

/// Weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; throws std::invalid_argument if the parts
    /// are not weakly decreasing or are negative.
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    /// Number of rows of the Young diagram.
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] int size() const;
    /// Part i (1-based), 0 beyond the length.
    [[nodiscard]] int part(int i) const;
    [[nodiscard]] Partition conjugate() const;
    /// Number of columns, i.e. the first part (0 for the empty partition).
    [[nodiscard]] int columns() const { return parts_.empty() ? 0 : parts_.front(); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Semistandard Young tableau with entries in [1, content_bound]: rows weakly
/// increase left to right, columns strictly increase top to bottom.
class SSYT {
public:
    SSYT() = default;
    /// Validates; throws std::invalid_argument on a malformed filling.
    SSYT(std::vector<std::vector<int>> rows, int content_bound);

    [[nodiscard]] const std::vector<std::vector<int>>& rows() const { return rows_; }
    [[nodiscard]] int content_bound() const { return bound_; }
    [[nodiscard]] Partition shape() const;
    [[nodiscard]] bool empty() const { return rows_.empty(); }
    [[nodiscard]] int max_entry() const;

    bool operator==(const SSYT&) const = default;

private:
    std::vector<std::vector<int>> rows_;
    int bound_ = 0;
};

/// Triangular array; level i (1-based) holds i weakly decreasing nonnegative
/// integers and consecutive levels interlace.
class GTPattern {
public:
    GTPattern() = default;
    /// Validates shape and interlacing; throws std::invalid_argument.
    explicit GTPattern(std::vector<std::vector<int>> levels);

    [[nodiscard]] const std::vector<std::vector<int>>& levels() const { return levels_; }
    [[nodiscard]] int depth() const { return static_cast<int>(levels_.size()); }
    /// Entry j of level i, both 1-based.
    [[nodiscard]] int at(int level, int j) const { return levels_[level - 1][j - 1]; }
    /// The top level as a partition.
    [[nodiscard]] Partition shape() const;

    bool operator==(const GTPattern&) const = default;

private:
    std::vector<std::vector<int>> levels_;
};

/// Output of RSK on an a x b matrix. `insertion` holds column indices
/// (content bound b); `recording` holds row indices (content bound a).
struct TableauPair {
    SSYT insertion;
    SSYT recording;

    bool operator==(const TableauPair&) const = default;
};

/// Row insertion on the biword of m, positions sorted row-major.
TableauPair rsk(const ExponentMatrix& m);

/// Reverse bumping. Throws std::invalid_argument on a shape mismatch.
ExponentMatrix rsk_inverse(const SSYT& insertion, const SSYT& recording);

/// Level i is the shape of the entries <= i, zero-padded to length i.
/// Throws std::invalid_argument if an entry exceeds n.
GTPattern ssyt_to_gt(const SSYT& t, int n);

/// Inverse of ssyt_to_gt; the content bound is the pattern depth.
SSYT gt_to_ssyt(const GTPattern& g);

}  // namespace exring
