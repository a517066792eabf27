#pragma once

#include "exring/plane_partition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace exring {

/// Ballot word over {u, d} with equal letter counts.
class DyckWord {
public:
    DyckWord() = default;
    /// Throws std::invalid_argument if `letters` is not a Dyck word.
    explicit DyckWord(std::string letters);

    [[nodiscard]] const std::string& str() const { return letters_; }
    [[nodiscard]] std::size_t length() const { return letters_.size(); }
    /// Half the length.
    [[nodiscard]] int semilength() const { return static_cast<int>(letters_.size() / 2); }
    [[nodiscard]] int valley_count() const;

    auto operator<=>(const DyckWord&) const = default;

private:
    std::string letters_;
};

bool is_dyck_word(std::string_view letters);

/// Valleys are du-factors; central letters are neither first, last, nor part
/// of a valley. up[i-1] / down[i-1] count central u's / d's before the i-th
/// valley, and the final entry counts all central letters, so both lists
/// have (valleys + 1) entries. Positions are 0-based.
struct DyckStats {
    std::vector<int> valleys;
    std::vector<int> central;
    std::vector<int> up;
    std::vector<int> down;
};

DyckStats dyck_stats(const DyckWord& w);

/// w in D(m+1, k+1) (length 2m+2, exactly k valleys) to B^w in B(k, m-k, 2).
/// Throws std::invalid_argument on a wrong length or valley count.
PlanePartition dyck_to_pp(const DyckWord& w, int m, int k);

/// Rebuilds the word from weakly increasing sequences a_1..a_k (up counts)
/// and b_1..b_k (down counts) with a_i >= b_i and a_k <= m - k: an initial u,
/// the central blocks separated by valleys, and a final d.
DyckWord dyck_from_counts(const std::vector<int>& up, const std::vector<int>& down, int m, int k);

/// Inverse of dyck_to_pp. Throws std::invalid_argument if b is not a
/// k x (m-k) plane partition with entries <= 2.
DyckWord pp_to_dyck(const PlanePartition& b, int m, int k);

}  // namespace exring
