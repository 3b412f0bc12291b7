#include "schurlc/tableau.hpp"

#include <stdexcept>
#include <string>

#include "schurlc/errors.hpp"

namespace schurlc {

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!outer.contains(inner))
    throw InvalidPartition("inner shape " + to_string(inner) +
                           " not contained in " + to_string(outer));
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const int n = shape_.outer.length();
  if (static_cast<int>(rows_.size()) != n)
    throw std::invalid_argument("tableau row count does not match shape");
  for (int r = 1; r <= n; ++r) {
    const auto width = shape_.outer.part(r) - shape_.inner.part(r);
    if (static_cast<int>(rows_[static_cast<std::size_t>(r - 1)].size()) !=
        width)
      throw std::invalid_argument("tableau row length does not match shape");
  }
}

int Tableau::at(Cell c) const {
  if (!shape_.contains(c)) throw std::out_of_range("cell outside tableau");
  return rows_[static_cast<std::size_t>(c.row - 1)]
              [static_cast<std::size_t>(c.col - shape_.inner.part(c.row) - 1)];
}

void Tableau::set(Cell c, int value) {
  if (!shape_.contains(c)) throw std::out_of_range("cell outside tableau");
  rows_[static_cast<std::size_t>(c.row - 1)]
       [static_cast<std::size_t>(c.col - shape_.inner.part(c.row) - 1)] =
      value;
}

bool is_semistandard(const Tableau& t) {
  const SkewShape& sh = t.shape();
  for (int r = 1; r <= sh.outer.length(); ++r) {
    for (int c = sh.inner.part(r) + 1; c <= sh.outer.part(r); ++c) {
      const int v = t.at({r, c});
      if (v < 1) return false;
      if (sh.contains({r, c + 1}) && v > t.at({r, c + 1})) return false;
      if (sh.contains({r + 1, c}) && v >= t.at({r + 1, c})) return false;
    }
  }
  return true;
}

std::vector<int> content(const Tableau& t) {
  std::vector<int> counts;
  for (const auto& row : t.rows())
    for (int v : row) {
      if (v > static_cast<int>(counts.size()))
        counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  return counts;
}

std::vector<int> reverse_reading_word(const Tableau& t) {
  std::vector<int> word;
  for (const auto& row : t.rows())
    word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

bool is_yamanouchi(std::span<const int> word) {
  std::vector<int> counts;
  for (int v : word) {
    if (v < 1) return false;
    if (v > static_cast<int>(counts.size()))
      counts.resize(static_cast<std::size_t>(v), 0);
    const auto k = static_cast<std::size_t>(v - 1);
    ++counts[k];
    if (k > 0 && counts[k] > counts[k - 1]) return false;
  }
  return true;
}

namespace {

// Fills cells row by row, left to right.
class SsytFiller {
 public:
  SsytFiller(const SkewShape& shape, int max_entry,
             const std::function<void(const Tableau&)>& visit)
      : shape_(shape), max_entry_(max_entry), visit_(visit) {
    for (int r = 1; r <= shape.outer.length(); ++r)
      for (int c = shape.inner.part(r) + 1; c <= shape.outer.part(r); ++c)
        cells_.push_back({r, c});
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= shape.outer.length(); ++r)
      rows.emplace_back(
          static_cast<std::size_t>(shape.outer.part(r) - shape.inner.part(r)),
          0);
    current_ = Tableau(shape, std::move(rows));
  }

  void run() { fill(0); }

 private:
  void fill(std::size_t index) {
    if (index == cells_.size()) {
      visit_(current_);
      return;
    }
    const Cell cell = cells_[index];
    int low = 1;
    if (shape_.contains({cell.row, cell.col - 1}))
      low = current_.at({cell.row, cell.col - 1});
    if (shape_.contains({cell.row - 1, cell.col}))
      low = std::max(low, current_.at({cell.row - 1, cell.col}) + 1);
    for (int v = low; v <= max_entry_; ++v) {
      current_.set(cell, v);
      fill(index + 1);
    }
  }

  const SkewShape& shape_;
  int max_entry_;
  const std::function<void(const Tableau&)>& visit_;
  std::vector<Cell> cells_;
  Tableau current_;
};

}  // namespace

void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const Tableau&)>& visit) {
  if (max_entry < 1 && shape.size() > 0) return;
  SsytFiller(shape, max_entry, visit).run();
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_ssyt(const SkewShape& shape, int max_entry) {
  std::uint64_t n = 0;
  for_each_ssyt(shape, max_entry, [&](const Tableau&) { ++n; });
  return n;
}

std::string to_string(const Tableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out += " / ";
    std::vector<std::string> tokens(
        static_cast<std::size_t>(t.shape().inner.part(static_cast<int>(r) + 1)),
        ".");
    for (int v : t.rows()[r]) tokens.push_back(std::to_string(v));
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i) out += ' ';
      out += tokens[i];
    }
  }
  return out;
}

}  // namespace schurlc
