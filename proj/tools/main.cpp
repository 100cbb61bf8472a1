#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "intorder/commands.hpp"
#include "intorder/errors.hpp"

using intorder::Errc;
using nlohmann::json;

namespace {

// exit codes: 0 ok, 1 internal, 2 schema, 3 matroid axioms, 4 budget
int exit_code_for(Errc c) {
  switch (c) {
    case Errc::schema_error:
    case Errc::not_a_bijection:
    case Errc::invalid_diagonal:
      return 2;
    case Errc::empty_bases:
    case Errc::unequal_cardinality:
    case Errc::exchange_axiom_violated:
    case Errc::invalid_element:
    case Errc::zero_matrix:
    case Errc::invalid_rank:
      return 3;
    case Errc::budget_exceeded:
      return 4;
    default:
      return 1;
  }
}

json read_document(const std::string& path) {
  try {
    if (path == "-") {
      std::stringstream buf;
      buf << std::cin.rdbuf();
      return json::parse(buf.str());
    }
    std::ifstream in(path);
    if (!in) intorder::fail(Errc::schema_error, "cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    intorder::fail(Errc::schema_error, std::string("invalid JSON: ") + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact matroid internal-order toolkit"};
  app.require_subcommand(1);

  std::string doc_path = "-";
  std::string format = "dot";
  std::string strategy = "coatoms";
  std::uint64_t budget = UINT64_MAX;
  int workers = 1;
  bool quiet = false;
  std::vector<int> contract_set, delete_set, diagonals;
  std::string family_name;
  int family_r = 1, family_n = 3;
  std::string probe_name;
  int probe_max_n = 5;

  auto add_doc = [&](CLI::App* sub) {
    sub->add_option("doc", doc_path, "matroid document path, or - for stdin");
  };

  auto* c_bases = app.add_subcommand("bases", "list bases");
  add_doc(c_bases);
  auto* c_circuits = app.add_subcommand("circuits", "list circuits");
  add_doc(c_circuits);
  auto* c_cocircuits = app.add_subcommand("cocircuits", "list cocircuits");
  add_doc(c_cocircuits);
  auto* c_hvector = app.add_subcommand("hvector", "h-vector of the matroid");
  add_doc(c_hvector);
  auto* c_order = app.add_subcommand("internal-order", "internal order as DOT or JSON");
  add_doc(c_order);
  c_order->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  auto* c_classify = app.add_subcommand("classify", "classify bases as perfect/abundant/deficient");
  add_doc(c_classify);
  c_classify->add_option("--strategy", strategy, "coatoms or all")
      ->check(CLI::IsMember({"coatoms", "all"}));
  auto* c_search = app.add_subcommand("perfect-search", "search ground-set orderings for perfection");
  add_doc(c_search);
  c_search->add_option("--budget", budget, "max orderings to test");
  c_search->add_option("--workers", workers, "parallel workers")->check(CLI::Range(1, 64));
  c_search->add_flag("--quiet", quiet, "suppress progress on stderr");
  auto* c_stanley = app.add_subcommand("stanley", "pure order-ideal certificate");
  add_doc(c_stanley);
  auto* c_minor = app.add_subcommand("minor-check", "verify perfection of a minor");
  add_doc(c_minor);
  c_minor->add_option("--contract", contract_set, "elements to contract")->delimiter(',');
  c_minor->add_option("--delete", delete_set, "elements to delete")->delimiter(',');
  auto* c_family = app.add_subcommand("family", "emit a generator document");
  c_family->add_option("name", family_name, "corpus name, 'mr', or 'nnd'")->required();
  c_family->add_option("--r", family_r, "rank parameter for mr");
  c_family->add_option("--n", family_n, "cycle length for nnd");
  c_family->add_option("--diagonals", diagonals, "diagonal endpoints for nnd")->delimiter(',');
  auto* c_probe = app.add_subcommand("conjecture-probe", "long-running reports, never assertions");
  c_probe->add_option("name", probe_name, "del-reorder, minor-closed, or nnd")
      ->required()
      ->check(CLI::IsMember({"del-reorder", "minor-closed", "nnd"}));
  c_probe->add_option("--max-n", probe_max_n, "largest cycle length for the nnd probe");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_bases->parsed()) emit(intorder::cmd::bases(read_document(doc_path)));
    else if (c_circuits->parsed()) emit(intorder::cmd::circuits(read_document(doc_path)));
    else if (c_cocircuits->parsed()) emit(intorder::cmd::cocircuits(read_document(doc_path)));
    else if (c_hvector->parsed()) emit(intorder::cmd::hvector(read_document(doc_path)));
    else if (c_order->parsed()) {
      if (format == "dot")
        std::cout << intorder::cmd::internal_order_dot(read_document(doc_path));
      else
        emit(intorder::cmd::internal_order_json(read_document(doc_path)));
    } else if (c_classify->parsed()) {
      emit(intorder::cmd::classify(read_document(doc_path),
                                   strategy == "all" ? intorder::Strategy::AllBases
                                                     : intorder::Strategy::CoatomsOnly));
    } else if (c_search->parsed()) {
      intorder::cmd::SearchOptions opts;
      opts.budget = budget;
      opts.workers = workers;
      if (!quiet)
        opts.on_progress = [](std::uint64_t tested) {
          std::cerr << "tested " << tested << " orderings\n";
        };
      auto [out, outcome] = intorder::cmd::perfect_search(read_document(doc_path), opts);
      emit(out);
      if (outcome == intorder::SearchResult::Outcome::BudgetExceeded) return 4;
    } else if (c_stanley->parsed()) {
      emit(intorder::cmd::stanley(read_document(doc_path)));
    } else if (c_minor->parsed()) {
      emit(intorder::cmd::minor_check(read_document(doc_path), contract_set, delete_set));
    } else if (c_family->parsed()) {
      emit(intorder::cmd::family(family_name, family_r, family_n, diagonals));
    } else if (c_probe->parsed()) {
      if (probe_name == "del-reorder") emit(intorder::cmd::probe_del_reorder());
      else if (probe_name == "minor-closed") emit(intorder::cmd::probe_minor_closed());
      else emit(intorder::cmd::probe_nnd(probe_max_n));
    }
  } catch (const intorder::Error& e) {
    std::cerr << json{{"error", intorder::errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
