#include "schurlc/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "schurlc/errors.hpp"

namespace schurlc {

namespace {

void strip_zeros(std::vector<int>& parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

void generate(int remaining, int max_length, int max_part,
              std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (max_length == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, max_length - 1, p, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::string_view> split_literal(std::string_view text,
                                            std::string& scratch) {
  scratch.clear();
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) scratch.push_back(ch);
  std::string_view s = scratch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("expected bracketed list, got '" + std::string(text) +
                     "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string_view> fields;
  if (s.empty()) return fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    fields.push_back(s.substr(start, comma == std::string_view::npos
                                         ? std::string_view::npos
                                         : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

int parse_int_field(std::string_view field, bool allow_sign,
                    std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (allow_sign && !field.empty() && field[0] == '-') {
    negative = true;
    pos = 1;
  }
  if (pos == field.size())
    throw ParseError("empty entry in '" + std::string(text) + "'");
  long long value = 0;
  for (; pos < field.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(field[pos])))
      throw ParseError("bad entry '" + std::string(field) + "' in '" +
                       std::string(text) + "'");
    value = value * 10 + (field[pos] - '0');
    if (value > std::numeric_limits<int>::max())
      throw ParseError("entry out of range in '" + std::string(text) + "'");
  }
  return static_cast<int>(negative ? -value : value);
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!is_partition(parts_))
    throw InvalidPartition("not a partition: " + vector_to_string(parts_));
  strip_zeros(parts_);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::optional<Partition> Partition::from_vector(std::span<const int> entries) {
  if (!is_partition(entries)) return std::nullopt;
  return Partition(std::vector<int>(entries.begin(), entries.end()));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

Partition transpose(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.first()), 0);
  for (int row : lambda)
    for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Partition partition_union(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(parts),
             std::greater<>());
  return Partition(std::move(parts));
}

Partition repeated_union(const Partition& lambda, const Partition& mu, int n) {
  std::vector<int> parts = lambda.parts();
  for (int t = 0; t < n; ++t)
    parts.insert(parts.end(), mu.begin(), mu.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

IntVector add_vector(const Partition& lambda, std::span<const int> v) {
  const std::size_t n =
      std::max(lambda.parts().size(), static_cast<std::size_t>(v.size()));
  IntVector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lambda.part(static_cast<int>(i) + 1) + (i < v.size() ? v[i] : 0);
  }
  return out;
}

IntVector scale(std::span<const int> v, int factor) {
  IntVector out(v.begin(), v.end());
  for (int& x : out) x *= factor;
  return out;
}

bool is_partition(std::span<const int> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0) return false;
    if (i > 0 && entries[i] > entries[i - 1]) return false;
  }
  return true;
}

bool dominance_leq(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size())
    throw SizeMismatch("dominance order needs equal sizes: " + to_string(mu) +
                       " vs " + to_string(nu));
  int sum_mu = 0;
  int sum_nu = 0;
  const int n = std::max(mu.length(), nu.length());
  for (int j = 1; j <= n; ++j) {
    sum_mu += mu.part(j);
    sum_nu += nu.part(j);
    if (sum_mu > sum_nu) return false;
  }
  return true;
}

std::vector<Cell> inner_corners(const Partition& lambda) {
  std::vector<Cell> cells;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) > lambda.part(i + 1))
      cells.push_back({i, lambda.part(i)});
  return cells;
}

std::vector<Cell> outer_corners(const Partition& lambda) {
  std::vector<Cell> cells;
  for (int i = 1; i <= lambda.length() + 1; ++i)
    if (i == 1 || lambda.part(i) < lambda.part(i - 1))
      cells.push_back({i, lambda.part(i) + 1});
  return cells;
}

std::optional<Partition> move_corner_down(const Partition& lambda,
                                          int from_row) {
  if (from_row < 1 || from_row > lambda.length()) return std::nullopt;
  if (lambda.part(from_row) <= lambda.part(from_row + 1)) return std::nullopt;
  std::vector<int> parts = lambda.parts();
  parts.push_back(0);
  --parts[static_cast<std::size_t>(from_row - 1)];
  for (std::size_t s = static_cast<std::size_t>(from_row); s < parts.size();
       ++s) {
    if (parts[s] < parts[s - 1]) {
      ++parts[s];
      return Partition(std::move(parts));
    }
  }
  return std::nullopt;
}

bool is_corner_move(const Partition& from, const Partition& to) {
  for (int r = 1; r <= from.length(); ++r) {
    auto moved = move_corner_down(from, r);
    if (moved && *moved == to) return true;
  }
  return false;
}

std::vector<Partition> brylawski_chain(const Partition& from,
                                       const Partition& to) {
  if (!dominance_leq(to, from))
    throw NotDominated(to_string(to) + " is not dominated by " +
                       to_string(from));
  std::vector<Partition> chain{from};
  while (chain.back() != to) {
    const Partition& current = chain.back();
    std::optional<Partition> next;
    for (int r = 1; r <= current.length() && !next; ++r) {
      auto moved = move_corner_down(current, r);
      if (moved && dominance_leq(to, *moved)) next = std::move(moved);
    }
    if (!next)
      throw std::logic_error("no corner move from " + to_string(current));
    chain.push_back(std::move(*next));
  }
  return chain;
}

Partition sort_concat(std::span<const int> a, std::span<const int> b) {
  std::vector<int> parts(a.begin(), a.end());
  parts.insert(parts.end(), b.begin(), b.end());
  for (int x : parts)
    if (x < 0) throw NegativeEntry("negative entry in sort_concat");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n, int max_length, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  generate(n, max_length, max_part, prefix, out);
  return out;
}

std::string to_string(const Partition& lambda) {
  return vector_to_string(lambda.parts());
}

std::string vector_to_string(std::span<const int> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  s += ']';
  return s;
}

Partition parse_partition(std::string_view text) {
  std::string scratch;
  std::vector<int> parts;
  for (auto field : split_literal(text, scratch))
    parts.push_back(parse_int_field(field, false, text));
  if (!is_partition(parts))
    throw ParseError("not a partition: '" + std::string(text) + "'");
  return Partition(std::move(parts));
}

IntVector parse_vector(std::string_view text) {
  std::string scratch;
  IntVector v;
  for (auto field : split_literal(text, scratch))
    v.push_back(parse_int_field(field, true, text));
  return v;
}

}  // namespace schurlc
