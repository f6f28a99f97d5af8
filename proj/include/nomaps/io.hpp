#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace nomaps {

/// One exact count. `indices` is empty for per-genus totals, (i, j) for
/// vertex/face or black/white splits, (i, j, k) for black/white/face splits.
struct CountRecord {
  std::string model;
  int n = 0;
  int g2 = 0;
  std::vector<int> indices;
  std::string value;  // decimal

  auto operator<=>(const CountRecord&) const = default;
};

using RecordKey = std::tuple<std::string, int, int, std::vector<int>>;
inline RecordKey key_of(const CountRecord& r) { return {r.model, r.n, r.g2, r.indices}; }

struct CountTable {
  std::string model;
  int n_min = 1;  // grid rows n_min..n_max
  int n_max = 0;
  int g2_max = 0;
  int arity = 0;  // number of indices per row
  std::vector<CountRecord> rows;
};

enum class Format { table, csv, json };
std::optional<Format> parse_format(const std::string& s);

/// "0", "1/2", "3".
std::string genus_str(int g2);
/// Accepts "2", "3/2", "1.5"; returns twice the genus. Throws std::invalid_argument.
int parse_genus(const std::string& s);

std::string emit(const CountTable& t, Format f);
/// Inverse of emit (the model name is not part of the csv/table layouts).
std::vector<CountRecord> parse_emitted(const std::string& text, Format f, const std::string& model);

/// Append-only newline-delimited JSON store of CountRecords.
class CountCache {
 public:
  static constexpr int kVersion = 1;
  /// Loads an existing file (throws std::runtime_error on a bad header) or
  /// prepares a new one.
  explicit CountCache(std::filesystem::path path);

  /// All values for `keys` in order, or nullopt if any is missing.
  std::optional<std::vector<CountRecord>> find_all(const std::vector<RecordKey>& keys) const;
  /// Appends the records not stored yet.
  void store(const std::vector<CountRecord>& records);
  std::size_t size() const { return values_.size(); }

 private:
  std::filesystem::path path_;
  std::map<RecordKey, std::string> values_;
};

}  // namespace nomaps
