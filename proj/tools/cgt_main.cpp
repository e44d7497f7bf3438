// Command-line front end: verify scenarios, print group statistics, ingest
// fact-sheet catalogs.
//
// Exit codes: 0 every verdict confirmed, 1 some verdict inconclusive or
// refuted, 2 usage or data error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgt/catalog.hpp"
#include "cgt/catalog_file.hpp"
#include "cgt/scenarios.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr const char* kCatalogEnv = "CGT_CATALOG";

void emit(const std::vector<cgt::Report>& reports, bool json, bool as_list) {
  if (json) {
    if (as_list) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(cgt::to_json(r));
      std::cout << nlohmann::json{{"reports", arr}}.dump(2) << '\n';
    } else {
      std::cout << cgt::to_json(reports.front()).dump(2) << '\n';
    }
    return;
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) std::cout << '\n';
    std::cout << cgt::render_text(reports[i]);
  }
}

cgt::Catalog load_catalog(const std::string& extra_path) {
  cgt::Catalog catalog = cgt::Catalog::builtin();
  std::vector<std::string> paths;
  if (const char* env = std::getenv(kCatalogEnv); env && *env) paths.emplace_back(env);
  if (!extra_path.empty()) paths.push_back(extra_path);
  for (const auto& path : paths) {
    for (auto& sheet : cgt::load_catalog_file(path)) {
      if (!catalog.contains(sheet.name)) catalog.add_sheet(std::move(sheet));
    }
  }
  return catalog;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Element-order statistics and Sylow counting checks for finite groups", "cgt"};
  app.require_subcommand(1);

  bool json = false;
  std::uint64_t seed = 1;
  std::uint64_t cap = cgt::kDefaultEnumerationCap;
  std::string catalog_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", json, "Emit JSON instead of text");
    cmd->add_option("--seed", seed, "Seed for every randomized search")->capture_default_str();
    cmd->add_option("--cap", cap, "Largest group order that may be enumerated")->capture_default_str();
    cmd->add_option("--catalog", catalog_path,
                    std::string("Extra fact-sheet catalog (also read from $") + kCatalogEnv + ")");
  };

  std::string scenario;
  auto* verify = app.add_subcommand("verify", "Run a verification scenario: ce1, ce2, ce3, thompson, conjE or all");
  verify->add_option("scenario", scenario)->required();
  add_common(verify);

  std::string entry;
  auto* stats = app.add_subcommand("stats", "Print statistics for a catalog entry");
  stats->add_option("entry", entry)->required();
  add_common(stats);

  std::string ingest_path;
  auto* ingest = app.add_subcommand("ingest", "Validate a fact-sheet catalog file and list its entries");
  ingest->add_option("path", ingest_path)->required();

  std::string first, second;
  auto* pair = app.add_subcommand("verify-pair", "Compare two catalog entries: equal orders, equal largest-prime counts");
  pair->add_option("first", first)->required();
  pair->add_option("second", second)->required();
  add_common(pair);

  auto* list = app.add_subcommand("list", "List catalog entries");
  list->add_option("--catalog", catalog_path, "Extra fact-sheet catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    cgt::HarnessOptions opts{seed, cap};
    if (*ingest) {
      auto sheets = cgt::load_catalog_file(ingest_path);
      const cgt::Catalog builtin = cgt::Catalog::builtin();
      std::cout << "accepted " << sheets.size() << " fact sheet(s)\n";
      for (const auto& s : sheets) {
        std::cout << "  " << s.name << ": order " << s.order_value() << " = " << cgt::to_string(s.order)
                  << ", spectrum {" << cgt::join(s.spectrum) << "}";
        if (builtin.contains(s.name)) {
          const auto& b = builtin.at(s.name).sheet;
          const bool same = b.order == s.order && b.spectrum == s.spectrum;
          std::cout << (same ? " (same as built-in entry)" : " (differs from built-in entry, which takes precedence)");
        }
        std::cout << '\n';
      }
      return 0;
    }

    cgt::Catalog catalog = load_catalog(catalog_path);

    if (*list) {
      for (const auto& name : catalog.names()) {
        const auto& e = catalog.at(name);
        std::cout << name << "\t" << cgt::to_string(e.sheet.source) << "\t" << e.description << '\n';
      }
      return 0;
    }

    std::vector<cgt::Report> reports;
    bool as_list = false;
    if (*verify) {
      if (scenario == "all") {
        as_list = true;
        for (const auto& name : cgt::scenario_names()) reports.push_back(cgt::run_scenario(name, catalog, opts));
      } else {
        const auto& names = cgt::scenario_names();
        if (std::find(names.begin(), names.end(), scenario) == names.end()) {
          std::cerr << "unknown scenario '" << scenario << "'; expected one of: " << cgt::join(names) << ", all\n";
          return kUsageError;
        }
        reports.push_back(cgt::run_scenario(scenario, catalog, opts));
      }
    } else if (*stats) {
      if (!catalog.contains(entry)) {
        std::cerr << "unknown catalog entry '" << entry << "'; known: " << cgt::join(catalog.names()) << '\n';
        return kUsageError;
      }
      reports.push_back(cgt::stats_report(catalog, entry, opts));
    } else if (*pair) {
      for (const auto& n : {first, second}) {
        if (!catalog.contains(n)) {
          std::cerr << "unknown catalog entry '" << n << "'\n";
          return kUsageError;
        }
      }
      reports.push_back(cgt::verify_pair(catalog, first, second, opts));
    }
    emit(reports, json, as_list);
    return cgt::exit_code(reports);
  } catch (const cgt::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const cgt::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const cgt::DataContradiction& e) {
    std::cerr << "data contradiction: " << e.what() << '\n';
    return kUsageError;
  }
}
