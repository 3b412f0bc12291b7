#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "schurlc/errors.hpp"
#include "schurlc/product_cache.hpp"

namespace schurlc::cli {

class CacheIoError : public Error {
 public:
  using Error::Error;
};

class CacheCorruption : public Error {
 public:
  CacheCorruption(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// `mu;nu;theta;coeff`, e.g. `[1];[1];[2];1`.
std::string format_record(const CoefficientRecord& r);
CoefficientRecord parse_record(std::string_view line);

std::vector<CoefficientRecord> read_records(std::istream& in);
void write_records(std::ostream& out,
                   const std::vector<CoefficientRecord>& records);

// A missing file loads as empty.
void load_cache(const std::filesystem::path& path, ProductCache& cache);
void store_cache(const std::filesystem::path& path, const ProductCache& cache);

}  // namespace schurlc::cli
