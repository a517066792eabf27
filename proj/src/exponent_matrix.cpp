#include "exring/exponent_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace exring {

VarIndex::VarIndex(int row, int col, int rows, int cols)
    : row(row), col(col), rows(rows), cols(cols) {
    if (rows < 0 || cols < 0 || row < 1 || row > rows || col < 1 || col > cols)
        throw std::out_of_range("variable index X[" + std::to_string(row) + "," +
                                std::to_string(col) + "] outside " + std::to_string(rows) +
                                "x" + std::to_string(cols));
}

std::strong_ordering compare_variables(const VarIndex& a, const VarIndex& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw DimensionMismatch("variables from different ambient matrices");
    // Smaller (row, col) is the larger variable.
    if (a.row != b.row) return b.row <=> a.row;
    return b.col <=> a.col;
}

ExponentMatrix::ExponentMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

ExponentMatrix::ExponentMatrix(int rows, int cols, std::vector<value_type> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match dimensions");
}

ExponentMatrix::ExponentMatrix(std::initializer_list<std::initializer_list<value_type>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

ExponentMatrix ExponentMatrix::from_rows(const std::vector<std::vector<value_type>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    std::vector<value_type> e;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged matrix");
        e.insert(e.end(), row.begin(), row.end());
    }
    return {r, c, std::move(e)};
}

std::size_t ExponentMatrix::index(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>((i - 1) * cols_ + (j - 1));
}

std::vector<std::vector<ExponentMatrix::value_type>> ExponentMatrix::to_rows() const {
    std::vector<std::vector<value_type>> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        out[i].assign(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    return out;
}

std::uint64_t ExponentMatrix::degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

bool ExponentMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](value_type v) { return v == 0; });
}

ExponentMatrix ExponentMatrix::operator*(const ExponentMatrix& o) const {
    if (!same_dims(o)) throw DimensionMismatch("monomial product across dimensions");
    ExponentMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
    return r;
}

bool ExponentMatrix::divides(const ExponentMatrix& o) const {
    if (!same_dims(o)) throw DimensionMismatch("divisibility across dimensions");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > o.entries_[i]) return false;
    return true;
}

ExponentMatrix ExponentMatrix::quotient_of(const ExponentMatrix& o) const {
    if (!divides(o)) throw std::invalid_argument("monomial does not divide");
    ExponentMatrix r = o;
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= entries_[i];
    return r;
}

ExponentMatrix ExponentMatrix::lcm(const ExponentMatrix& o) const {
    if (!same_dims(o)) throw DimensionMismatch("lcm across dimensions");
    ExponentMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = std::max(entries_[i], o.entries_[i]);
    return r;
}

bool ExponentMatrix::coprime(const ExponentMatrix& o) const {
    if (!same_dims(o)) throw DimensionMismatch("coprimality across dimensions");
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != 0 && o.entries_[i] != 0) return false;
    return true;
}

ExponentMatrix ExponentMatrix::transpose() const {
    ExponentMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.entries_[static_cast<std::size_t>(j * rows_ + i)] = entries_[static_cast<std::size_t>(i * cols_ + j)];
    return t;
}

std::size_t ExponentMatrix::hash() const {
    std::size_t h = 1469598103934665603ull ^ static_cast<std::size_t>(rows_ * 131 + cols_);
    for (auto v : entries_) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

std::strong_ordering compare_monomials_lex(const ExponentMatrix& a, const ExponentMatrix& b) {
    if (!a.same_dims(b)) throw DimensionMismatch("lex comparison across dimensions");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

std::string to_string(const ExponentMatrix& m) {
    std::string s = "[";
    for (int i = 1; i <= m.rows(); ++i) {
        s += i == 1 ? "[" : ",[";
        for (int j = 1; j <= m.cols(); ++j) {
            if (j > 1) s += ",";
            s += std::to_string(m.at(i, j));
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace exring
