#include "cache_file.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace schurlc::cli {

std::string format_record(const CoefficientRecord& r) {
  return to_string(r.mu) + ";" + to_string(r.nu) + ";" + to_string(r.theta) +
         ";" + to_string(r.coeff);
}

CoefficientRecord parse_record(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto semi = line.find(';', start);
    fields.push_back(line.substr(start, semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (fields.size() != 4)
    throw ParseError("expected 4 fields separated by ';'");
  CoefficientRecord r{parse_partition(fields[0]), parse_partition(fields[1]),
                      parse_partition(fields[2]), Integer{}};
  std::string digits(fields[3]);
  while (!digits.empty() && (digits.back() == ' ' || digits.back() == '\r'))
    digits.pop_back();
  while (!digits.empty() && digits.front() == ' ') digits.erase(0, 1);
  const bool negative = !digits.empty() && digits.front() == '-';
  const std::size_t first = negative ? 1 : 0;
  if (digits.size() == first ||
      digits.find_first_not_of("0123456789", first) != std::string::npos)
    throw ParseError("coefficient is not an integer");
  r.coeff = Integer(digits);
  if (r.mu.size() + r.nu.size() != r.theta.size())
    throw ParseError("|theta| != |mu| + |nu|");
  return r;
}

std::vector<CoefficientRecord> read_records(std::istream& in) {
  std::vector<CoefficientRecord> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_record(line));
    } catch (const Error& e) {
      throw CacheCorruption("cache line " + std::to_string(number) + ": " +
                                e.what(),
                            number);
    }
  }
  return out;
}

void write_records(std::ostream& out,
                   const std::vector<CoefficientRecord>& records) {
  for (const auto& r : records) out << format_record(r) << '\n';
}

void load_cache(const std::filesystem::path& path, ProductCache& cache) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return;
  std::ifstream in(path);
  if (!in) throw CacheIoError("cannot read cache " + path.string());
  const auto records = read_records(in);
  if (in.bad()) throw CacheIoError("error reading cache " + path.string());
  cache.insert_records(records);
}

void store_cache(const std::filesystem::path& path, const ProductCache& cache) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheIoError("cannot write cache " + path.string());
    write_records(out, cache.records());
    out.flush();
    if (!out) throw CacheIoError("error writing cache " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CacheIoError("cannot replace cache " + path.string());
}

}  // namespace schurlc::cli
