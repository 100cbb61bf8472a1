#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "intorder/element_set.hpp"
#include "intorder/perfection.hpp"

namespace intorder::cmd {

// Subcommand bodies, kept separate from argument parsing so they are
// directly testable. All JSON output has sorted keys and canonical set
// ordering; errors surface as intorder::Error.

nlohmann::json bases(const nlohmann::json& doc);
nlohmann::json circuits(const nlohmann::json& doc);
nlohmann::json cocircuits(const nlohmann::json& doc);
nlohmann::json hvector(const nlohmann::json& doc);

std::string internal_order_dot(const nlohmann::json& doc);
nlohmann::json internal_order_json(const nlohmann::json& doc);

nlohmann::json classify(const nlohmann::json& doc, Strategy strategy);

struct SearchOptions {
  std::uint64_t budget = UINT64_MAX;
  int workers = 1;
  std::function<void(std::uint64_t)> on_progress;
};
/// Result JSON plus the raw outcome (the caller maps BudgetExceeded to its
/// exit code).
std::pair<nlohmann::json, SearchResult::Outcome> perfect_search(const nlohmann::json& doc,
                                                                const SearchOptions& opts);

nlohmann::json stanley(const nlohmann::json& doc);

nlohmann::json minor_check(const nlohmann::json& doc, const std::vector<int>& contract_set,
                           const std::vector<int>& delete_set);

nlohmann::json family(const std::string& spec_name, int r, int n, const std::vector<int>& diagonals);

nlohmann::json probe_del_reorder();
nlohmann::json probe_minor_closed();
nlohmann::json probe_nnd(int max_n);

}  // namespace intorder::cmd
