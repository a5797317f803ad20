#include "stillife/board.hpp"

#include <sstream>
#include <stdexcept>

namespace stillife {

Board::Board(int n) : n_(n) {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("board size must be in 1..32, got " +
                                std::to_string(n));
  rows_.assign(static_cast<size_t>(n), 0u);
}

Board Board::from_rows(std::vector<std::uint32_t> rows, int n) {
  Board b(n);
  if (rows.size() != static_cast<size_t>(n))
    throw std::invalid_argument("expected " + std::to_string(n) + " rows, got " +
                                std::to_string(rows.size()));
  for (std::uint32_t r : rows)
    if ((r & ~row_mask(n)) != 0)
      throw std::invalid_argument("row has bits set beyond column " +
                                  std::to_string(n));
  b.rows_ = std::move(rows);
  return b;
}

void Board::set_row(int i, std::uint32_t bits) {
  if ((bits & ~row_mask(n_)) != 0)
    throw std::invalid_argument("row has bits set beyond column " +
                                std::to_string(n_));
  rows_[static_cast<size_t>(i)] = bits;
}

void Board::set_cell(int i, int j, bool alive) {
  std::uint32_t bit = 1u << j;
  if (alive)
    rows_[static_cast<size_t>(i)] |= bit;
  else
    rows_[static_cast<size_t>(i)] &= ~bit;
}

std::uint32_t Board::column(int j) const {
  std::uint32_t col = 0;
  for (int i = 0; i < n_; ++i) col |= ((rows_[static_cast<size_t>(i)] >> j) & 1u) << i;
  return col;
}

int Board::live_cells() const {
  int c = 0;
  for (std::uint32_t r : rows_) c += popcount32(r);
  return c;
}

Board Board::parse(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw std::invalid_argument("empty board text");
  int n = static_cast<int>(lines.size());
  Board b(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(lines[static_cast<size_t>(i)].size()) != n)
      throw std::invalid_argument("line " + std::to_string(i + 1) + " has " +
                                  std::to_string(lines[static_cast<size_t>(i)].size()) +
                                  " characters, expected " + std::to_string(n));
    for (int j = 0; j < n; ++j) {
      char ch = lines[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (ch == '#')
        b.set_cell(i, j, true);
      else if (ch != '.')
        throw std::invalid_argument(std::string("bad cell character '") + ch +
                                    "', expected '#' or '.'");
    }
  }
  return b;
}

std::vector<std::string> Board::to_lines() const {
  std::vector<std::string> lines;
  lines.reserve(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    std::string line(static_cast<size_t>(n_), '.');
    for (int j = 0; j < n_; ++j)
      if (cell(i, j)) line[static_cast<size_t>(j)] = '#';
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string Board::to_text() const {
  std::string out;
  for (const std::string& line : to_lines()) {
    out += line;
    out += '\n';
  }
  return out;
}

std::string Board::to_rle() const {
  std::ostringstream out;
  out << "x = " << n_ << ", y = " << n_ << ", rule = B3/S23\n";
  std::string body;
  for (int i = 0; i < n_; ++i) {
    int j = 0;
    while (j < n_) {
      bool alive = cell(i, j);
      int run = 1;
      while (j + run < n_ && cell(i, j + run) == alive) ++run;
      // Trailing dead cells of a line may be omitted.
      if (!(j + run == n_ && !alive)) {
        if (run > 1) body += std::to_string(run);
        body += alive ? 'o' : 'b';
      }
      j += run;
    }
    body += (i + 1 < n_) ? "$" : "!";
  }
  // Wrap at 70 characters as the format prescribes.
  for (size_t pos = 0; pos < body.size(); pos += 70) {
    out << body.substr(pos, 70) << '\n';
  }
  return out.str();
}

}  // namespace stillife
