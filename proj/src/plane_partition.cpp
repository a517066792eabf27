#include "exring/plane_partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace exring {

PlanePartition::PlanePartition(int rows, int cols, std::vector<int> entries, int bound)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), bound_(bound) {
    if (rows < 0 || cols < 0 || bound < 0) throw std::invalid_argument("negative plane partition parameter");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match dimensions");
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            int v = at(i, j);
            if (v < 0 || v > bound_)
                throw std::invalid_argument("plane partition entry " + std::to_string(v) +
                                            " outside [0," + std::to_string(bound_) + "]");
            if ((j > 1 && v > at(i, j - 1)) || (i > 1 && v > at(i - 1, j)))
                throw std::invalid_argument("plane partition not weakly decreasing");
        }
    }
}

PlanePartition PlanePartition::from_rows(const std::vector<std::vector<int>>& rows, int bound) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    std::vector<int> e;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged plane partition");
        e.insert(e.end(), row.begin(), row.end());
    }
    return {r, c, std::move(e), bound};
}

PlanePartition PlanePartition::zero(int rows, int cols, int bound) {
    return {rows, cols, std::vector<int>(static_cast<std::size_t>(rows) * cols, 0), bound};
}

int PlanePartition::at(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("plane partition index");
    return entries_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
}

int PlanePartition::max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

std::vector<std::vector<int>> PlanePartition::to_rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        out[i].assign(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    return out;
}

PlanePartition PlanePartition::transpose() const {
    std::vector<int> t(entries_.size());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t[static_cast<std::size_t>(j * rows_ + i)] = entries_[static_cast<std::size_t>(i * cols_ + j)];
    return {cols_, rows_, std::move(t), bound_};
}

PlanePartition PlanePartition::with_bound(int bound) const {
    return {rows_, cols_, entries_, bound};
}

PlanePartition tableaux_to_pp(const SSYT& p, const SSYT& q, int a, int b) {
    Partition shape = p.shape();
    if (!(shape == q.shape())) throw std::invalid_argument("tableau shapes differ");
    if (shape.length() > std::min(a, b))
        throw std::invalid_argument("shape has more rows than fit in an " + std::to_string(a) + "x" +
                                    std::to_string(b) + " plane partition");
    GTPattern gp = ssyt_to_gt(p, a);
    GTPattern gq = ssyt_to_gt(q, b);

    std::vector<int> e(static_cast<std::size_t>(a) * b, 0);
    for (int i = 1; i <= a; ++i) {
        for (int j = 1; j <= b; ++j) {
            int v;
            if (i >= j) {
                v = gp.at(a - i + j, j);
                if (i == j && v != gq.at(b - j + i, i))
                    throw std::invalid_argument("diagonal inconsistency between tableaux");
            } else {
                v = gq.at(b - j + i, i);
            }
            e[static_cast<std::size_t>((i - 1) * b + (j - 1))] = v;
        }
    }
    return {a, b, std::move(e), shape.columns()};
}

PPTableaux pp_to_tableaux(const PlanePartition& bpp) {
    const int a = bpp.rows();
    const int b = bpp.cols();
    std::vector<std::vector<int>> p_levels;
    for (int l = 1; l <= a; ++l) {
        std::vector<int> lv(static_cast<std::size_t>(l), 0);
        for (int j = 1; j <= std::min(l, b); ++j) lv[static_cast<std::size_t>(j - 1)] = bpp.at(a - l + j, j);
        p_levels.push_back(std::move(lv));
    }
    std::vector<std::vector<int>> q_levels;
    for (int l = 1; l <= b; ++l) {
        std::vector<int> lv(static_cast<std::size_t>(l), 0);
        for (int i = 1; i <= std::min(l, a); ++i) lv[static_cast<std::size_t>(i - 1)] = bpp.at(i, b - l + i);
        q_levels.push_back(std::move(lv));
    }
    SSYT p = gt_to_ssyt(GTPattern(std::move(p_levels)));
    SSYT q = gt_to_ssyt(GTPattern(std::move(q_levels)));
    // gt_to_ssyt sets the bound to the pattern depth, which is already a / b.
    return {std::move(p), std::move(q)};
}

PlanePartition matrix_to_pp(const ExponentMatrix& m) {
    TableauPair t = rsk(m);
    return tableaux_to_pp(t.recording, t.insertion, m.rows(), m.cols());
}

ExponentMatrix pp_to_matrix(const PlanePartition& b) {
    PPTableaux t = pp_to_tableaux(b);
    return rsk_inverse(t.q, t.p);
}

PlanePartition transpose(const PlanePartition& b) { return b.transpose(); }

ExponentMatrix matrix_transpose(const ExponentMatrix& m) { return m.transpose(); }

}  // namespace exring
