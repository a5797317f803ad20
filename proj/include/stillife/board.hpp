#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stillife/row.hpp"

namespace stillife {

// Square n x n cell grid, one bit field per row (see row.hpp for the bit
// convention). Cell coordinates are 0-based: cell(i, j) = row i, column j.
class Board {
 public:
  explicit Board(int n);
  static Board from_rows(std::vector<std::uint32_t> rows, int n);

  int size() const { return n_; }
  std::uint32_t row(int i) const { return rows_[static_cast<size_t>(i)]; }
  void set_row(int i, std::uint32_t bits);

  bool cell(int i, int j) const {
    return (rows_[static_cast<size_t>(i)] >> j) & 1u;
  }
  void set_cell(int i, int j, bool alive);
  void flip(int i, int j) { rows_[static_cast<size_t>(i)] ^= 1u << j; }

  // Column j read as a row value: bit i = cell(i, j).
  std::uint32_t column(int j) const;

  int live_cells() const;
  const std::vector<std::uint32_t>& rows() const { return rows_; }

  bool operator==(const Board& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }
  bool operator!=(const Board& o) const { return !(*this == o); }

  // Text format: n lines of n characters, '#' alive and '.' dead.
  static Board parse(const std::string& text);
  std::string to_text() const;
  std::vector<std::string> to_lines() const;

  // Run-length-encoded export in the common Game of Life interchange format.
  std::string to_rle() const;

 private:
  int n_;
  std::vector<std::uint32_t> rows_;
};

}  // namespace stillife
