#include "schurlc/lr.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace schurlc {

namespace {

// Reverse-reading-order filler for a fixed skew shape theta/mu.
class LrCellFiller {
 public:
  LrCellFiller(const Partition& mu, const Partition& nu, const Partition& theta)
      : shape_(theta, mu), nu_(nu.parts()), counts_(nu_.size() + 1, 0) {
    for (int r = 1; r <= theta.length(); ++r)
      for (int c = theta.part(r); c > mu.part(r); --c) cells_.push_back({r, c});
    grid_.resize(static_cast<std::size_t>(theta.length()));
    for (int r = 1; r <= theta.length(); ++r)
      grid_[static_cast<std::size_t>(r - 1)].assign(
          static_cast<std::size_t>(theta.part(r) + 1), 0);
  }

  std::vector<Tableau> run() {
    fill(0);
    return std::move(found_);
  }

 private:
  int& cell(Cell c) {
    return grid_[static_cast<std::size_t>(c.row - 1)]
                [static_cast<std::size_t>(c.col)];
  }

  void fill(std::size_t index) {
    if (index == cells_.size()) {
      emit();
      return;
    }
    const Cell here = cells_[index];
    int high = static_cast<int>(nu_.size());
    // Row r of an LR tableau only holds entries <= r.
    high = std::min(high, here.row);
    if (shape_.contains({here.row, here.col + 1}))
      high = std::min(high, cell({here.row, here.col + 1}));
    int low = 1;
    if (shape_.contains({here.row - 1, here.col}))
      low = cell({here.row - 1, here.col}) + 1;
    for (int v = low; v <= high; ++v) {
      const auto k = static_cast<std::size_t>(v);
      if (counts_[k] >= nu_[k - 1]) continue;
      if (k > 1 && counts_[k] + 1 > counts_[k - 1]) continue;
      ++counts_[k];
      cell(here) = v;
      fill(index + 1);
      --counts_[k];
    }
  }

  void emit() {
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= shape_.outer.length(); ++r) {
      const auto& g = grid_[static_cast<std::size_t>(r - 1)];
      rows.emplace_back(g.begin() + shape_.inner.part(r) + 1,
                        g.begin() + shape_.outer.part(r) + 1);
    }
    found_.emplace_back(shape_, std::move(rows));
  }

  SkewShape shape_;
  std::vector<int> nu_;
  std::vector<int> counts_;  // counts_[k] = copies of k placed so far
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<Tableau> found_;
};

struct RowsHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v)
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    return h;
  }
};

// Adds the letters 1, 2, ... of nu to mu as horizontal strips. For letter c
// the running count of c in rows 1..r may not exceed the count of c-1 in rows
// 1..r-1, which is the Yamanouchi condition on the reverse reading word.
template <class Sink>
class StripFiller {
 public:
  StripFiller(const Partition& mu, const Partition& nu, const Partition* bound,
              Sink& sink)
      : nu_(nu.parts()),
        rows_(mu.length() + nu.length()),
        shape_(static_cast<std::size_t>(rows_), 0),
        cum_(nu_.size(), std::vector<int>(static_cast<std::size_t>(rows_), 0)),
        sink_(sink) {
    for (int r = 1; r <= mu.length(); ++r)
      shape_[static_cast<std::size_t>(r - 1)] = mu.part(r);
    if (bound) {
      bound_.assign(static_cast<std::size_t>(rows_), 0);
      for (int r = 1; r <= std::min(rows_, bound->length()); ++r)
        bound_[static_cast<std::size_t>(r - 1)] = bound->part(r);
    }
  }

  void run() { letter(0); }

 private:
  void letter(std::size_t c) {
    if (c == nu_.size()) {
      sink_(shape_);
      return;
    }
    row(c, 0, nu_[c], 0, 0);
  }

  void row(std::size_t c, int r, int remaining, int cum, int old_above) {
    if (remaining == 0) {
      for (int t = r; t < rows_; ++t) cum_[c][static_cast<std::size_t>(t)] = cum;
      letter(c + 1);
      return;
    }
    if (r >= rows_) return;
    const auto ri = static_cast<std::size_t>(r);
    const int here = shape_[ri];
    int high = remaining;
    if (r > 0) high = std::min(high, old_above - here);
    if (!bound_.empty()) high = std::min(high, bound_[ri] - here);
    if (c > 0) high = std::min(high, (r > 0 ? cum_[c - 1][ri - 1] : 0) - cum);
    if (r > 0 && old_above == 0) return;
    for (int a = std::max(high, 0); a >= 0; --a) {
      shape_[ri] = here + a;
      cum_[c][ri] = cum + a;
      row(c, r + 1, remaining - a, cum + a, here);
    }
    shape_[ri] = here;
  }

  std::vector<int> nu_;
  int rows_;
  std::vector<int> shape_;
  std::vector<int> bound_;
  std::vector<std::vector<int>> cum_;
  Sink& sink_;
};

}  // namespace

std::vector<Tableau> lr_tableaux(const Partition& mu, const Partition& nu,
                                 const Partition& theta) {
  if (theta.size() != mu.size() + nu.size() || !theta.contains(mu)) return {};
  return LrCellFiller(mu, nu, theta).run();
}

Integer lr_coefficient(const Partition& mu, const Partition& nu,
                       const Partition& theta) {
  if (theta.size() != mu.size() + nu.size() || !theta.contains(mu) ||
      !theta.contains(nu) || theta.length() > mu.length() + nu.length())
    return 0;
  std::uint64_t count = 0;
  auto sink = [&](const std::vector<int>&) { ++count; };
  StripFiller filler(mu, nu, &theta, sink);
  filler.run();
  return count;
}

SchurExpansion schur_product_expand(const Partition& mu, const Partition& nu) {
  // The strip additions cost grows with the letters added, so add the
  // smaller factor.
  const bool swap = nu.size() > mu.size() ||
                    (nu.size() == mu.size() && nu.length() > mu.length());
  const Partition& base = swap ? nu : mu;
  const Partition& letters = swap ? mu : nu;
  std::unordered_map<std::vector<int>, std::uint64_t, RowsHash> counts;
  auto sink = [&](const std::vector<int>& shape) { ++counts[shape]; };
  StripFiller filler(base, letters, nullptr, sink);
  filler.run();
  SchurExpansion out;
  for (const auto& [rows, c] : counts)
    out.add_term(Partition(rows), Integer(c));
  return out;
}

Integer count_standard_tableaux(const Partition& lambda) {
  Integer numerator = 1;
  for (int k = 2; k <= lambda.size(); ++k) numerator *= k;
  const Partition conj = transpose(lambda);
  Integer hooks = 1;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c)
      hooks *= (lambda.part(r) - c) + (conj.part(c) - r) + 1;
  return numerator / hooks;
}

}  // namespace schurlc
