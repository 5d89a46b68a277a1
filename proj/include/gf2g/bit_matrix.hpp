#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gf2g {

// Dense matrix over F2, rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return (data_[r * words_ + c / 64] >> (c % 64)) & 1U; }
    void set(std::size_t r, std::size_t c, bool v);
    void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
    std::size_t append_row();

    // Vectors spanning {x : A x = 0}: one per free column of the reduced
    // echelon form, with that column set and the other free columns clear.
    // Columns are eliminated left to right, so earlier columns become pivots
    // first. free_columns receives the free column of each basis vector.
    std::vector<std::vector<bool>> nullspace(std::vector<std::size_t>* free_columns = nullptr) const;

    // Some x with A x = b, or nothing when the system is inconsistent.
    std::optional<std::vector<bool>> solve(const std::vector<bool>& b) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

}  // namespace gf2g
