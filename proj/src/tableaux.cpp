#include "exring/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace exring {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative partition part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must weakly decrease");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    std::vector<int> c(static_cast<std::size_t>(columns()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

SSYT::SSYT(std::vector<std::vector<int>> rows, int content_bound)
    : rows_(std::move(rows)), bound_(content_bound) {
    if (bound_ < 0) throw std::invalid_argument("negative content bound");
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw std::invalid_argument("malformed tableau: empty interior row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw std::invalid_argument("malformed tableau: shape is not a partition");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > bound_)
                throw std::invalid_argument("malformed tableau: entry " + std::to_string(row[c]) +
                                            " outside [1," + std::to_string(bound_) + "]");
            if (c > 0 && row[c] < row[c - 1])
                throw std::invalid_argument("malformed tableau: row not weakly increasing");
            if (r > 0 && row[c] <= rows_[r - 1][c])
                throw std::invalid_argument("malformed tableau: column not strictly increasing");
        }
    }
}

Partition SSYT::shape() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
}

int SSYT::max_entry() const {
    int mx = 0;
    for (const auto& r : rows_)
        if (!r.empty()) mx = std::max(mx, r.back());
    return mx;
}

GTPattern::GTPattern(std::vector<std::vector<int>> levels) : levels_(std::move(levels)) {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const auto& lv = levels_[i];
        if (lv.size() != i + 1) throw std::invalid_argument("GT level " + std::to_string(i + 1) + " has wrong length");
        for (std::size_t j = 0; j < lv.size(); ++j) {
            if (lv[j] < 0) throw std::invalid_argument("negative GT entry");
            if (j > 0 && lv[j] > lv[j - 1]) throw std::invalid_argument("GT level not weakly decreasing");
        }
        if (i > 0) {
            const auto& prev = levels_[i - 1];
            for (std::size_t j = 0; j < prev.size(); ++j)
                if (lv[j] < prev[j] || prev[j] < lv[j + 1])
                    throw std::invalid_argument("GT levels do not interlace");
        }
    }
}

Partition GTPattern::shape() const {
    return levels_.empty() ? Partition() : Partition(levels_.back());
}

namespace {

// Inserts x, returning the row index where a new box was created.
std::size_t row_insert(std::vector<std::vector<int>>& p, int x) {
    for (std::size_t r = 0;; ++r) {
        if (r == p.size()) p.emplace_back();
        auto& row = p[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return r;
        }
        std::swap(*it, x);
    }
}

}  // namespace

TableauPair rsk(const ExponentMatrix& m) {
    std::vector<std::vector<int>> p;
    std::vector<std::vector<int>> q;
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            for (ExponentMatrix::value_type e = 0; e < m.at(i, j); ++e) {
                std::size_t r = row_insert(p, j);
                if (r == q.size()) q.emplace_back();
                q[r].push_back(i);
            }
        }
    }
    return {SSYT(std::move(p), m.cols()), SSYT(std::move(q), m.rows())};
}

ExponentMatrix rsk_inverse(const SSYT& insertion, const SSYT& recording) {
    if (!(insertion.shape() == recording.shape()))
        throw std::invalid_argument("tableau shapes differ");
    ExponentMatrix m(recording.content_bound(), insertion.content_bound());
    auto p = insertion.rows();
    auto q = recording.rows();
    while (!q.empty()) {
        // Largest recording entry; among ties the rightmost box, which is a corner.
        std::size_t row = 0;
        int best = 0;
        std::size_t best_col = 0;
        for (std::size_t r = 0; r < q.size(); ++r) {
            int v = q[r].back();
            std::size_t c = q[r].size() - 1;
            if (v > best || (v == best && c > best_col)) {
                best = v;
                row = r;
                best_col = c;
            }
        }
        int x = p[row].back();
        p[row].pop_back();
        q[row].pop_back();
        for (std::size_t r = row; r-- > 0;) {
            auto& above = p[r];
            // Rightmost entry strictly less than x.
            auto it = std::lower_bound(above.begin(), above.end(), x);
            if (it == above.begin()) throw std::invalid_argument("malformed tableau pair");
            --it;
            std::swap(*it, x);
        }
        if (p[row].empty()) {
            p.erase(p.begin() + static_cast<std::ptrdiff_t>(row));
            q.erase(q.begin() + static_cast<std::ptrdiff_t>(row));
        }
        m.set(best, x, m.at(best, x) + 1);
    }
    return m;
}

GTPattern ssyt_to_gt(const SSYT& t, int n) {
    if (t.max_entry() > n)
        throw std::invalid_argument("tableau entry exceeds " + std::to_string(n));
    std::vector<std::vector<int>> levels;
    for (int lvl = 1; lvl <= n; ++lvl) {
        std::vector<int> shape(static_cast<std::size_t>(lvl), 0);
        for (std::size_t r = 0; r < t.rows().size() && r < shape.size(); ++r) {
            const auto& row = t.rows()[r];
            shape[r] = static_cast<int>(std::upper_bound(row.begin(), row.end(), lvl) - row.begin());
        }
        levels.push_back(std::move(shape));
    }
    return GTPattern(std::move(levels));
}

SSYT gt_to_ssyt(const GTPattern& g) {
    std::vector<std::vector<int>> rows;
    for (int lvl = 1; lvl <= g.depth(); ++lvl) {
        for (int j = 1; j <= lvl; ++j) {
            int from = j < lvl ? g.at(lvl - 1, j) : 0;
            int to = g.at(lvl, j);
            if (to == 0) continue;
            if (rows.size() < static_cast<std::size_t>(j)) rows.resize(static_cast<std::size_t>(j));
            for (int c = from; c < to; ++c) rows[static_cast<std::size_t>(j - 1)].push_back(lvl);
        }
    }
    return SSYT(std::move(rows), g.depth());
}

}  // namespace exring
