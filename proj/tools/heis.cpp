// Command line front end.
//
//   heis irreps   -p 3            character table with exact orthogonality checks
//   heis classify -p 3,3 --inv switching
//                                 packet distinction and period-vanishing tables
//   heis local    -p 3 --inv central-fixing --places all
//                                 local principal-series verdicts per place
//   heis type     "Sp(3,d2)"      type partition and derivative chain
//
// Exit codes: 0 success, 1 failed exact check, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heis/heis.hpp"

namespace {

std::vector<heis::LocalPlace> parse_places(const std::vector<std::string>& tokens) {
  std::vector<heis::LocalPlace> out;
  for (const std::string& t : tokens) {
    if (t == "all") {
      for (const heis::LocalPlace& p : heis::all_place_types())
        out.push_back(p);
    } else if (t == "split") {
      out.push_back(heis::LocalPlace::split_place());
    } else if (t == "trivial") {
      out.push_back(heis::LocalPlace::inert(heis::Decomposition::Trivial));
    } else if (t == "Z") {
      out.push_back(heis::LocalPlace::inert(heis::Decomposition::Center));
    } else if (t == "L") {
      out.push_back(heis::LocalPlace::inert(heis::Decomposition::LagrangianA0));
    } else if (t == "Lp") {
      out.push_back(heis::LocalPlace::inert(heis::Decomposition::LagrangianB0));
    } else {
      heis::fail("unknown place type '" + t + "' (use all|split|Z|L|Lp|trivial)");
    }
  }
  return out;
}

int emit(const heis::CommandResult& result, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
      heis::fail("cannot open output file " + out_path);
    f << result.output;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character theory of Heisenberg products: packet distinction, "
               "local principal-series checks and the symbolic type calculus"};
  app.require_subcommand(1);

  heis::RunConfig cfg;
  std::string out_path;
  std::vector<std::string> place_tokens;
  std::string inv_name = "trivial";
  std::string type_expr;

  const std::map<std::string, heis::InvolutionKind> inv_map{
      {"trivial", heis::InvolutionKind::Trivial},
      {"inversion", heis::InvolutionKind::InversionType},
      {"central-fixing", heis::InvolutionKind::CentralFixing},
      {"switching", heis::InvolutionKind::Switching}};

  auto add_common = [&](CLI::App* sub, bool needs_primes) {
    if (needs_primes)
      sub->add_option("-p,--primes", cfg.primes, "odd primes, comma separated")
          ->required()
          ->delimiter(',');
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "write the report to a file");
    sub->add_option("--seed", cfg.seed, "seed for sampled self-checks")
        ->capture_default_str();
  };

  CLI::App* irreps = app.add_subcommand("irreps", "character table and orthogonality");
  add_common(irreps, true);

  CLI::App* classify = app.add_subcommand("classify", "distinguished packet table");
  add_common(classify, true);
  classify->add_option("--inv", inv_name, "involution kind")
      ->check(CLI::IsMember({"trivial", "inversion", "central-fixing", "switching"}))
      ->capture_default_str();

  CLI::App* local = app.add_subcommand("local", "local distinction per place");
  add_common(local, true);
  local->add_option("--inv", inv_name, "involution kind")
      ->check(CLI::IsMember({"trivial", "inversion", "central-fixing", "switching"}))
      ->capture_default_str();
  local->add_option("--places", place_tokens, "place types (all|split|Z|L|Lp|trivial)")
      ->delimiter(',');

  CLI::App* type = app.add_subcommand("type", "type partition of a formal product");
  type->add_option("expression", type_expr, "formal product, e.g. \"Sp(3,d2)*Sp(1,d5)\"")
      ->required();
  type->add_option("--out", out_path, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.involution = inv_map.at(inv_name);
    cfg.places = parse_places(place_tokens);
    if (irreps->parsed())
      return emit(heis::cmd_irreps(cfg), out_path);
    if (classify->parsed())
      return emit(heis::cmd_classify(cfg), out_path);
    if (local->parsed())
      return emit(heis::cmd_local(cfg), out_path);
    if (type->parsed())
      return emit(heis::cmd_type(type_expr), out_path);
  } catch (const heis::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
