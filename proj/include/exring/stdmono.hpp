#pragma once

#include "exring/exponent_matrix.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace exring {

/// Maximum entry sum along a weak diagonal: a chain of distinct positions
/// weakly increasing in both coordinates. `witness` lists the nonzero
/// positions (1-based) of one maximizing chain.
struct WidthReport {
    std::uint64_t width = 0;
    std::vector<std::pair<int, int>> witness;
};

/// Prefix-maximum dynamic program, O(rows * cols).
WidthReport width(const ExponentMatrix& m);

/// Length of the longest weakly increasing subsequence of column indices in
/// the monomial's lex-sorted variable word. Equals width(m) by Greene's
/// theorem but is computed without the grid recursion.
std::uint64_t longest_weak_column_ascent(const ExponentMatrix& m);

/// width(m) <= 2.
bool is_standard(const ExponentMatrix& m);

/// No indices a < b < c with j_a <= j_b <= j_c in the lex word.
bool has_no_triple_ascent(const ExponentMatrix& m);

/// All k x (m-k) matrices of width <= 2, ordered by total degree and then
/// lex-largest first. Requires 1 <= k <= m.
std::vector<ExponentMatrix> enumerate_standard(int m, int k);

/// Number of standard monomials in each degree 0, 1, ..., top degree.
std::vector<std::uint64_t> hilbert_function(int m, int k);

}  // namespace exring
