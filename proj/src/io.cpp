#include "nomaps/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace nomaps {

using nlohmann::json;

namespace {

bool is_grid(const CountTable& t) { return t.arity == 0; }

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  if (sep == ' ') {
    std::istringstream in(line);
    for (std::string w; in >> w;) out.push_back(w);
    return out;
  }
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

std::vector<std::vector<std::string>> cells(const CountTable& t) {
  std::vector<std::vector<std::string>> out;
  if (is_grid(t)) {
    std::vector<std::string> head{"n"};
    for (int g2 = 0; g2 <= t.g2_max; ++g2) head.push_back("g=" + genus_str(g2));
    out.push_back(head);
    std::map<std::pair<int, int>, std::string> at;
    for (const auto& r : t.rows) at[{r.n, r.g2}] = r.value;
    for (int n = t.n_min; n <= t.n_max; ++n) {
      std::vector<std::string> row{std::to_string(n)};
      for (int g2 = 0; g2 <= t.g2_max; ++g2) {
        auto it = at.find({n, g2});
        row.push_back(it == at.end() ? "0" : it->second);
      }
      out.push_back(row);
    }
    return out;
  }
  std::vector<std::string> head{"n", "g"};
  const char* names[] = {"i", "j", "k"};
  for (int a = 0; a < t.arity; ++a) head.push_back(names[a]);
  head.push_back("value");
  out.push_back(head);
  for (const auto& r : t.rows) {
    std::vector<std::string> row{std::to_string(r.n), genus_str(r.g2)};
    for (int x : r.indices) row.push_back(std::to_string(x));
    row.push_back(r.value);
    out.push_back(row);
  }
  return out;
}

}  // namespace

std::optional<Format> parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return std::nullopt;
}

std::string genus_str(int g2) { return g2 % 2 ? std::to_string(g2) + "/2" : std::to_string(g2 / 2); }

int parse_genus(const std::string& s) {
  auto bad = [&] { return std::invalid_argument("invalid genus '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t pos = 0;
  int whole = 0;
  try {
    whole = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw bad();
  }
  if (whole < 0) throw bad();
  const std::string rest = s.substr(pos);
  if (rest.empty()) return 2 * whole;
  if (rest == "/2" && whole % 2 == 1) return whole;
  if (rest == ".5") return 2 * whole + 1;
  if (rest == ".0") return 2 * whole;
  throw bad();
}

std::string emit(const CountTable& t, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::json: {
      json rows = json::array();
      for (const auto& r : t.rows) {
        json j{{"model", r.model}, {"n", r.n}, {"g2", r.g2}};
        if (!r.indices.empty()) j["indices"] = r.indices;
        j["value"] = r.value;
        rows.push_back(j);
      }
      out << json{{"model", t.model}, {"rows", rows}}.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      for (const auto& row : cells(t)) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << "\n";
      }
      break;
    }
    case Format::table: {
      const auto rows = cells(t);
      std::vector<std::size_t> width(rows.front().size(), 0);
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
      }
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << (c ? "  " : "") << std::setw(int(width[c])) << row[c];
        }
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

std::vector<CountRecord> parse_emitted(const std::string& text, Format f, const std::string& model) {
  std::vector<CountRecord> out;
  if (f == Format::json) {
    const json doc = json::parse(text);
    for (const auto& j : doc.at("rows")) {
      CountRecord r{j.at("model"), j.at("n"), j.at("g2"), {}, j.at("value")};
      if (j.contains("indices")) r.indices = j.at("indices").get<std::vector<int>>();
      out.push_back(r);
    }
    return out;
  }
  const char sep = f == Format::csv ? ',' : ' ';
  const auto lines = lines_of(text);
  if (lines.empty()) return out;
  const auto head = split(lines.front(), sep);
  const bool grid = head.size() < 2 || head[1] != "g";
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto row = split(lines[l], sep);
    if (row.size() != head.size()) throw std::runtime_error("ragged row: " + lines[l]);
    const int n = std::stoi(row[0]);
    if (grid) {
      for (std::size_t c = 1; c < row.size(); ++c) {
        out.push_back({model, n, parse_genus(head[c].substr(2)), {}, row[c]});
      }
    } else {
      CountRecord r{model, n, parse_genus(row[1]), {}, row.back()};
      for (std::size_t c = 2; c + 1 < row.size(); ++c) r.indices.push_back(std::stoi(row[c]));
      out.push_back(r);
    }
  }
  return out;
}

CountCache::CountCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line)) return;
  const json head = json::parse(line, nullptr, false);
  if (head.is_discarded() || head.value("format", "") != "nomaps-count-cache" || head.value("version", 0) != kVersion) {
    throw std::runtime_error("cache " + path_.string() + ": unrecognised header");
  }
  for (std::size_t no = 2; std::getline(in, line); ++no) {
    if (line.empty()) continue;
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error("cache " + path_.string() + ": bad line " + std::to_string(no));
    CountRecord r{j.at("model"), j.at("n"), j.at("g2"), {}, j.at("value")};
    if (j.contains("indices")) r.indices = j.at("indices").get<std::vector<int>>();
    values_[key_of(r)] = r.value;
  }
}

std::optional<std::vector<CountRecord>> CountCache::find_all(const std::vector<RecordKey>& keys) const {
  std::vector<CountRecord> out;
  out.reserve(keys.size());
  for (const auto& k : keys) {
    auto it = values_.find(k);
    if (it == values_.end()) return std::nullopt;
    out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), it->second});
  }
  return out;
}

void CountCache::store(const std::vector<CountRecord>& records) {
  const bool fresh = !std::filesystem::exists(path_) || std::filesystem::file_size(path_) == 0;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cache " + path_.string() + ": cannot open for writing");
  if (fresh) out << json{{"format", "nomaps-count-cache"}, {"version", kVersion}}.dump() << "\n";
  for (const auto& r : records) {
    if (!values_.emplace(key_of(r), r.value).second) continue;
    json j{{"model", r.model}, {"n", r.n}, {"g2", r.g2}};
    if (!r.indices.empty()) j["indices"] = r.indices;
    j["value"] = r.value;
    out << j.dump() << "\n";
  }
}

}  // namespace nomaps
