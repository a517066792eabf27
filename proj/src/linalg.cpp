#include "exring/linalg.hpp"

#include <stdexcept>

namespace exring {

namespace {

// row -= factor * pivot
void axpy(SparseRow& row, const Rational& factor, const SparseRow& pivot) {
    for (const auto& [col, v] : pivot) {
        auto [it, inserted] = row.try_emplace(col, 0);
        it->second -= factor * v;
        if (it->second == 0) row.erase(it);
    }
}

}  // namespace

void SparseEchelon::reduce(SparseRow& row) const {
    auto it = row.begin();
    while (it != row.end()) {
        auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        const std::size_t col = it->first;
        Rational factor = it->second;
        axpy(row, factor, p->second);
        // Entries left of col are untouched; resume just past it.
        it = row.upper_bound(col);
    }
}

bool SparseEchelon::add_row(SparseRow row) {
    for (const auto& [col, v] : row)
        if (col >= cols_) throw std::out_of_range("row entry beyond matrix width");
    reduce(row);
    if (row.empty()) return false;
    // Leading entry of the reduced row is a free column so far.
    Rational lead = row.begin()->second;
    for (auto& [col, v] : row) v /= lead;
    pivots_.emplace(row.begin()->first, std::move(row));
    return true;
}

bool SparseEchelon::in_span(SparseRow row) const {
    reduce(row);
    return row.empty();
}

std::vector<SparseRow> SparseEchelon::kernel_basis() const {
    // Back-substitute to reduced echelon form, highest pivot first.
    std::map<std::size_t, SparseRow> rref = pivots_;
    for (auto hi = rref.rbegin(); hi != rref.rend(); ++hi) {
        for (auto lo = rref.begin(); lo->first < hi->first; ++lo) {
            auto at = lo->second.find(hi->first);
            if (at == lo->second.end()) continue;
            Rational factor = at->second;
            axpy(lo->second, factor, hi->second);
        }
    }
    std::vector<SparseRow> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (rref.count(f)) continue;
        SparseRow v;
        v.emplace(f, 1);
        for (const auto& [pc, row] : rref) {
            auto at = row.find(f);
            if (at != row.end()) v.emplace(pc, -at->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace exring
