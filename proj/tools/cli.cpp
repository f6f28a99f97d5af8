#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "nomaps/bipartite.hpp"
#include "nomaps/io.hpp"
#include "nomaps/maps.hpp"
#include "nomaps/oracle.hpp"
#include "nomaps/triangulations.hpp"
#include "nomaps/verify.hpp"

namespace nomaps::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format = "table";
  std::string cache;
  bool no_cache = false;
  int n_max = 0;
  std::string g_max;
  bool multi = false;  // --bivariate / --trivariate
  std::string engine = "cc";
  std::string identity;
  int order = 0;
  int edges = 0;
  std::string filter = "none";
};

std::string dec(const Rational& x) { return to_integer(x, "count").get_str(); }

using Keys = std::vector<RecordKey>;

// (i, j) with i, j >= 1 and i + j = m; (i, j, k) likewise for three indices.
void split_keys(Keys& keys, const std::string& model, int n, int g2, int m, int arity) {
  if (arity == 2) {
    for (int i = 1; i < m; ++i) keys.push_back({model, n, g2, {i, m - i}});
  } else {
    for (int i = 1; i < m; ++i) {
      for (int j = 1; i + j < m; ++j) keys.push_back({model, n, g2, {i, j, m - i - j}});
    }
  }
}

CountTable table_from(const std::string& model, int n_max, int g2_max, int arity, std::vector<CountRecord> rows) {
  CountTable t;
  t.model = model;
  t.n_max = n_max;
  t.g2_max = g2_max;
  t.arity = arity;
  t.rows = std::move(rows);
  return t;
}

class Runner {
 public:
  Runner(Options o, std::ostream& out, std::ostream& err) : o_(std::move(o)), out_(out), err_(err) {
    const auto f = parse_format(o_.format);
    if (!f) throw UsageError("unknown format '" + o_.format + "'");
    format_ = *f;
    std::string path = o_.cache;
    if (path.empty()) {
      if (const char* env = std::getenv("NOMAPS_CACHE")) path = env;
    }
    if (!o_.no_cache && !path.empty()) cache_.emplace(path);
  }

  int maps() {
    const int g2_max = genus_limit(o_.n_max);
    if (o_.engine != "kz" && o_.engine != "cc" && o_.engine != "both") {
      throw UsageError("unknown engine '" + o_.engine + "'");
    }
    Keys keys;
    for (int n = 1; n <= o_.n_max; ++n) {
      for (int g2 = 0; g2 <= g2_max; ++g2) {
        if (!o_.multi) {
          keys.push_back({"maps", n, g2, {}});
        } else if (g2 <= n) {
          split_keys(keys, "maps", n, g2, n + 2 - g2, 2);
        }
      }
    }
    bool mismatch = false;
    auto compute = [&] {
      const MapsEngine e = o_.engine == "kz" ? MapsEngine::kz : MapsEngine::cc;
      const MapsTable t = build_maps_table(e, o_.n_max, g2_max);
      if (o_.engine == "both") {
        const MapsTable other = build_maps_table(MapsEngine::kz, o_.n_max, g2_max);
        for (int n = 1; n <= o_.n_max; ++n) {
          for (int g2 = 0; g2 <= std::min(n, g2_max); ++g2) {
            if (!(t.at(n, g2) == other.at(n, g2))) {
              err_ << "engines disagree at n=" << n << " g=" << genus_str(g2) << "\n";
              mismatch = true;
            }
          }
        }
      }
      std::vector<CountRecord> rows;
      for (const auto& [model, n, g2, idx] : keys) {
        const MPoly& h = t.at(n, g2);
        rows.push_back({model, n, g2, idx, dec(idx.empty() ? h.eval(1, 1) : h.coeff(idx[0], idx[1]))});
      }
      return rows;
    };
    emit_rows(table_from("maps", o_.n_max, g2_max, o_.multi ? 2 : 0, lookup(keys, compute, o_.engine == "both")));
    return mismatch ? kExitFailure : kExitOk;
  }

  int bipartite() {
    const int g2_max = genus_limit(o_.n_max);
    Keys keys;
    for (int n = 1; n <= o_.n_max; ++n) {
      for (int g2 = 0; g2 <= g2_max; ++g2) {
        if (!o_.multi) {
          keys.push_back({"bipartite", n, g2, {}});
        } else if (g2 <= n) {
          split_keys(keys, "bipartite", n, g2, n + 2 - g2, 3);
        }
      }
    }
    auto compute = [&] {
      const BipTable t = build_bip_table(o_.n_max, g2_max);
      std::vector<CountRecord> rows;
      for (const auto& [model, n, g2, idx] : keys) {
        const MPoly& k = t.at(n, g2);
        rows.push_back({model, n, g2, idx, dec(idx.empty() ? k.eval(1, 1, 1) : k.coeff(idx[0], idx[2], idx[1]))});
      }
      return rows;
    };
    emit_rows(table_from("bipartite", o_.n_max, g2_max, o_.multi ? 3 : 0, lookup(keys, compute)));
    return kExitOk;
  }

  int triangulations() {
    const int g2_max = genus_limit(o_.n_max + 1);
    Keys keys;
    for (int n = 1; n <= o_.n_max; ++n) {
      for (int g2 = 0; g2 <= g2_max; ++g2) keys.push_back({"triangulations", n, g2, {}});
    }
    auto compute = [&] {
      const TriTable t = build_tri_table(o_.n_max, g2_max);
      std::vector<CountRecord> rows;
      for (const auto& [model, n, g2, idx] : keys) rows.push_back({model, n, g2, idx, t.at(n, g2).get_str()});
      return rows;
    };
    emit_rows(table_from("triangulations", o_.n_max, g2_max, 0, lookup(keys, compute)));
    return kExitOk;
  }

  int oneface() {
    Keys keys;
    for (int n = 1; n <= o_.n_max; ++n) {
      for (int g2 = 0; g2 <= o_.n_max; ++g2) keys.push_back({"oneface", n, g2, {}});
    }
    auto compute = [&] {
      const OneFaceTable t = build_ledoux(o_.n_max);
      std::vector<CountRecord> rows;
      for (const auto& [model, n, g2, idx] : keys) rows.push_back({model, n, g2, idx, t.at(n, g2).get_str()});
      return rows;
    };
    emit_rows(table_from("oneface", o_.n_max, o_.n_max, 0, lookup(keys, compute)));
    return kExitOk;
  }

  int bip_oneface() {
    Keys keys;
    for (int n = 1; n <= o_.n_max; ++n) {
      for (int g2 = 0; g2 <= n - 1; ++g2) split_keys(keys, "bip-oneface", n, g2, n + 1 - g2, 2);
    }
    auto compute = [&] {
      const BipOneFaceTable t = build_bip_oneface(o_.n_max);
      std::vector<CountRecord> rows;
      for (const auto& [model, n, g2, idx] : keys) rows.push_back({model, n, g2, idx, t.at(n, idx[0], idx[1]).get_str()});
      return rows;
    };
    emit_rows(table_from("bip-oneface", o_.n_max, o_.n_max, 2, lookup(keys, compute)));
    return kExitOk;
  }

  int oracle() {
    OracleFilter f = OracleFilter::none;
    if (o_.filter == "bipartite") {
      f = OracleFilter::bipartite;
    } else if (o_.filter == "triangulation") {
      f = OracleFilter::triangulation;
    } else if (o_.filter != "none") {
      throw UsageError("unknown filter '" + o_.filter + "'");
    }
    const int e = o_.edges;
    if (e < 1 || e > kOracleMaxEdges) {
      throw UsageError("oracle: --edges must be between 1 and " + std::to_string(kOracleMaxEdges));
    }
    const OracleCounts c = oracle_count(e, f);
    CountTable t;
    if (f == OracleFilter::triangulation) {
      const int n = e / 3;
      t = table_from("triangulations", n, n + 1, 0, {});
      t.n_min = n;
      const auto totals = c.by_genus();
      if (n >= 1) {
        for (int g2 = 0; g2 <= n + 1; ++g2) {
          t.rows.push_back({"triangulations", n, g2, {}, totals.count(g2) ? totals.at(g2).get_str() : "0"});
        }
      }
    } else {
      const std::string model = f == OracleFilter::bipartite ? "bipartite" : "maps";
      const int arity = f == OracleFilter::bipartite ? 3 : 2;
      Keys keys;
      for (int g2 = 0; g2 <= e; ++g2) split_keys(keys, model, e, g2, e + 2 - g2, arity);
      t = table_from(model, e, e, arity, {});
      for (const auto& [m, n, g2, idx] : keys) {
        const MPoly p = c.polynomial(g2);
        const Rational v = arity == 2 ? p.coeff(idx[0], idx[1]) : p.coeff(idx[0], idx[2], idx[1]);
        t.rows.push_back({m, n, g2, idx, dec(v)});
      }
    }
    emit_rows(t);
    return kExitOk;
  }

  int verify() {
    std::vector<Identity> ids;
    if (o_.identity == "all") {
      ids = all_identities();
    } else if (auto id = parse_identity(o_.identity)) {
      ids.push_back(*id);
    } else {
      std::string names;
      for (Identity i : all_identities()) names += std::string(" ") + identity_name(i);
      throw UsageError("unknown identity '" + o_.identity + "'; known: all" + names);
    }
    std::vector<VerifyReport> reports;
    for (Identity id : ids) reports.push_back(nomaps::verify(id, o_.order > 0 ? o_.order : default_order(id)));
    emit_reports(reports, o_.identity == "all");
    for (const auto& r : reports) {
      if (!r.pass) return kExitFailure;
    }
    return kExitOk;
  }

 private:
  int genus_limit(int fallback) const {
    if (o_.n_max < 0) throw UsageError("--n-max must be non-negative");
    return o_.g_max.empty() ? std::max(fallback, 0) : parse_genus(o_.g_max);
  }

  std::vector<CountRecord> lookup(const Keys& keys, const std::function<std::vector<CountRecord>()>& compute,
                                  bool force = false) {
    if (cache_ && !force) {
      if (auto hit = cache_->find_all(keys)) return *hit;
    }
    std::vector<CountRecord> rows = compute();
    if (cache_) cache_->store(rows);
    return rows;
  }

  void emit_rows(const CountTable& t) { out_ << emit(t, format_); }

  void emit_reports(const std::vector<VerifyReport>& reports, bool many) {
    using nlohmann::json;
    switch (format_) {
      case Format::json: {
        json arr = json::array();
        for (const auto& r : reports) {
          json j{{"identity", r.identity}, {"model", r.model},  {"order", r.order},
                 {"window", {r.min_order, r.max_order}}, {"status", r.pass ? "pass" : "fail"}};
          if (r.failure) {
            j["failure"] = {{"order", r.failure->order},
                            {"monomial", {{"u", r.failure->monomial.u}, {"z", r.failure->monomial.z}, {"v", r.failure->monomial.v}}},
                            {"value", r.failure->value.get_str()}};
          }
          arr.push_back(j);
        }
        out_ << (many ? arr : arr.front()).dump(2) << "\n";
        break;
      }
      case Format::csv:
        out_ << "identity,model,order,min_order,max_order,status\n";
        for (const auto& r : reports) {
          out_ << r.identity << "," << r.model << "," << r.order << "," << r.min_order << "," << r.max_order << ","
               << (r.pass ? "pass" : "fail") << "\n";
        }
        break;
      case Format::table:
        for (const auto& r : reports) {
          out_ << (r.pass ? "PASS " : "FAIL ") << r.identity << " (" << r.model << ") order " << r.order
               << " window [" << r.min_order << ", " << r.max_order << "]";
          if (r.failure) {
            out_ << " first nonzero at t^" << r.failure->order << " u^" << r.failure->monomial.u << " z^"
                 << r.failure->monomial.z << " v^" << r.failure->monomial.v << ": " << r.failure->value.get_str();
          }
          out_ << "\n";
        }
        break;
    }
  }

  Options o_;
  std::ostream& out_;
  std::ostream& err_;
  Format format_ = Format::table;
  std::optional<CountCache> cache_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact counts of rooted maps on all surfaces", "nomaps"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--cache", o.cache, "count cache file (newline-delimited JSON)");
  app.add_flag("--no-cache", o.no_cache, "ignore any cache");

  auto sized = [&](CLI::App* sub, bool genus) {
    sub->add_option("--n-max", o.n_max, "largest size")->required()->check(CLI::NonNegativeNumber);
    if (genus) sub->add_option("--g-max", o.g_max, "largest genus (e.g. 2 or 3/2)");
  };
  CLI::App* maps = app.add_subcommand("maps", "rooted maps by edges and genus");
  sized(maps, true);
  maps->add_flag("--bivariate", o.multi, "split by vertices and faces");
  maps->add_option("--engine", o.engine, "kz, cc or both")->check(CLI::IsMember({"kz", "cc", "both"}));
  CLI::App* bip = app.add_subcommand("bipartite", "rooted bipartite maps");
  sized(bip, true);
  bip->add_flag("--trivariate", o.multi, "split by black vertices, white vertices and faces");
  CLI::App* tri = app.add_subcommand("triangulations", "rooted triangulations with 2n faces");
  sized(tri, true);
  CLI::App* one = app.add_subcommand("oneface", "one-face maps by edges and genus");
  sized(one, false);
  CLI::App* bone = app.add_subcommand("bip-oneface", "one-face bipartite maps by black and white vertices");
  sized(bone, false);
  CLI::App* ver = app.add_subcommand("verify", "check an identity on truncated series");
  ver->add_option("identity", o.identity, "identity name or 'all'")->required();
  ver->add_option("--order", o.order, "t-order of the base series (default per identity)")->check(CLI::PositiveNumber);
  CLI::App* orc = app.add_subcommand("oracle", "brute-force flag enumeration");
  orc->add_option("--edges", o.edges, "number of edges")->required();
  orc->add_option("--filter", o.filter, "bipartite or triangulation")->check(CLI::IsMember({"none", "bipartite", "triangulation"}));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Runner r(o, out, err);
    if (*maps) return r.maps();
    if (*bip) return r.bipartite();
    if (*tri) return r.triangulations();
    if (*one) return r.oneface();
    if (*bone) return r.bip_oneface();
    if (*ver) return r.verify();
    if (*orc) return r.oracle();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace nomaps::cli
