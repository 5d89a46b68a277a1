#include "gf2g/bit_matrix.hpp"

namespace gf2g {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 64) / 64), data_(rows * words_, 0) {}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    auto& w = data_[r * words_ + c / 64];
    const auto bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
}

std::size_t BitMatrix::append_row() {
    data_.resize(data_.size() + words_, 0);
    return rows_++;
}

namespace {

// Reduced row echelon form of the rows (each with `words` words); returns pivot
// columns in row order. The column `cols` may hold an augmented right side and
// is never chosen as a pivot.
std::vector<std::size_t> reduce(std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        const std::size_t w = c / 64;
        const auto bit = std::uint64_t{1} << (c % 64);
        std::size_t p = r;
        while (p < rows.size() && !(rows[p][w] & bit)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || !(rows[i][w] & bit)) continue;
            for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] ^= rows[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

bool bit_of(const std::vector<std::uint64_t>& row, std::size_t c) { return (row[c / 64] >> (c % 64)) & 1U; }

}  // namespace

std::vector<std::vector<bool>> BitMatrix::nullspace(std::vector<std::size_t>* free_columns) const {
    std::vector<std::vector<std::uint64_t>> rows(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        rows[r].assign(data_.begin() + r * words_, data_.begin() + (r + 1) * words_);
    auto pivots = reduce(rows, cols_);

    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<bool>> basis;
    if (free_columns) free_columns->clear();
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<bool> v(cols_, false);
        v[f] = true;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (bit_of(rows[i], f)) v[pivots[i]] = true;
        basis.push_back(std::move(v));
        if (free_columns) free_columns->push_back(f);
    }
    return basis;
}

std::optional<std::vector<bool>> BitMatrix::solve(const std::vector<bool>& b) const {
    const std::size_t words = (cols_ + 1 + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(rows_, std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
        if (b.at(r)) rows[r][cols_ / 64] |= std::uint64_t{1} << (cols_ % 64);
    }
    auto pivots = reduce(rows, cols_);
    for (std::size_t i = pivots.size(); i < rows.size(); ++i)
        if (bit_of(rows[i], cols_)) return std::nullopt;
    std::vector<bool> x(cols_, false);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = bit_of(rows[i], cols_);
    return x;
}

}  // namespace gf2g
