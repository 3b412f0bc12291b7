#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "schurlc/partition.hpp"

namespace schurlc {

// Skew shape outer/inner with inner contained in outer.
struct SkewShape {
  SkewShape() = default;
  SkewShape(Partition outer_shape, Partition inner_shape = {});

  Partition outer;
  Partition inner;

  int size() const { return outer.size() - inner.size(); }
  bool contains(Cell c) const {
    return outer.contains(c) && !inner.contains(c);
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// Filling of a skew shape by positive integers. Row r (1-based) stores the
// entries of columns inner_r + 1 .. outer_r from left to right.
class Tableau {
 public:
  Tableau() = default;
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  int at(Cell c) const;
  void set(Cell c, int value);

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& a, const Tableau& b) {
    return a.rows_ <=> b.rows_;
  }

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

// Rows weakly increase left to right, columns strictly increase downward.
bool is_semistandard(const Tableau& t);

// Entry counts: result[k-1] is the number of entries equal to k.
std::vector<int> content(const Tableau& t);

// Each row read right to left, top row first.
std::vector<int> reverse_reading_word(const Tableau& t);

// Every prefix has at least as many k as k+1, for all k.
bool is_yamanouchi(std::span<const int> word);

// Visits each semistandard tableau of `shape` with entries in
// [1, max_entry] exactly once.
void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry);
std::uint64_t count_ssyt(const SkewShape& shape, int max_entry);

// Rows joined by " / ", inner cells shown as ".", e.g. ". . 1 / . 1 2".
std::string to_string(const Tableau& t);

}  // namespace schurlc
