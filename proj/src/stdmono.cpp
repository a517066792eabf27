#include "exring/stdmono.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace exring {

WidthReport width(const ExponentMatrix& m) {
    const int r = m.rows();
    const int c = m.cols();
    WidthReport rep;
    if (r == 0 || c == 0) return rep;

    // best[i][j]: max chain sum ending at or before (i, j) on a down/right path.
    std::vector<std::uint64_t> best(static_cast<std::size_t>(r * c), 0);
    auto at = [&](int i, int j) -> std::uint64_t& { return best[static_cast<std::size_t>(i * c + j)]; };
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
            std::uint64_t up = i > 0 ? at(i - 1, j) : 0;
            std::uint64_t left = j > 0 ? at(i, j - 1) : 0;
            at(i, j) = m.at(i + 1, j + 1) + std::max(up, left);
        }
    }
    rep.width = at(r - 1, c - 1);

    int i = r - 1;
    int j = c - 1;
    while (true) {
        if (m.at(i + 1, j + 1) != 0) rep.witness.emplace_back(i + 1, j + 1);
        if (i == 0 && j == 0) break;
        if (i == 0) {
            --j;
        } else if (j == 0) {
            --i;
        } else if (at(i - 1, j) >= at(i, j - 1)) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(rep.witness.begin(), rep.witness.end());
    return rep;
}

std::uint64_t longest_weak_column_ascent(const ExponentMatrix& m) {
    // Patience sorting on the column word; tails[t] is the smallest possible
    // last column of a weakly increasing subsequence of length t + 1.
    std::vector<int> tails;
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            for (ExponentMatrix::value_type e = 0; e < m.at(i, j); ++e) {
                auto it = std::upper_bound(tails.begin(), tails.end(), j);
                if (it == tails.end()) {
                    tails.push_back(j);
                } else {
                    *it = j;
                }
            }
        }
    }
    return tails.size();
}

bool is_standard(const ExponentMatrix& m) { return width(m).width <= 2; }

bool has_no_triple_ascent(const ExponentMatrix& m) { return longest_weak_column_ascent(m) < 3; }

std::vector<ExponentMatrix> enumerate_standard(int m, int k) {
    if (k < 1 || k > m)
        throw std::invalid_argument("require 1 <= k <= m, got m=" + std::to_string(m) +
                                    " k=" + std::to_string(k));
    const int rows = k;
    const int cols = m - k;
    std::vector<ExponentMatrix> out;
    ExponentMatrix cur(rows, cols);
    // best mirrors the width DP for the filled prefix (row-major).
    std::vector<unsigned> best(static_cast<std::size_t>(rows * cols), 0);
    const std::size_t cells = best.size();

    auto fill = [&](auto&& self, std::size_t pos) -> void {
        if (pos == cells) {
            out.push_back(cur);
            return;
        }
        const int i = static_cast<int>(pos) / cols;
        const int j = static_cast<int>(pos) % cols;
        unsigned up = i > 0 ? best[pos - static_cast<std::size_t>(cols)] : 0;
        unsigned left = j > 0 ? best[pos - 1] : 0;
        unsigned base = std::max(up, left);
        for (unsigned e = 0; base + e <= 2; ++e) {
            cur[pos] = e;
            best[pos] = base + e;
            self(self, pos + 1);
        }
        cur[pos] = 0;
    };
    fill(fill, 0);

    std::sort(out.begin(), out.end(), [](const ExponentMatrix& a, const ExponentMatrix& b) {
        auto da = a.degree();
        auto db = b.degree();
        if (da != db) return da < db;
        return compare_monomials_lex(a, b) == std::strong_ordering::greater;
    });
    return out;
}

std::vector<std::uint64_t> hilbert_function(int m, int k) {
    std::vector<std::uint64_t> h;
    for (const auto& mat : enumerate_standard(m, k)) {
        auto d = mat.degree();
        if (h.size() <= d) h.resize(d + 1, 0);
        ++h[d];
    }
    return h;
}

}  // namespace exring
