// In-process implementations of the CLI subcommands. Each command builds a
// deterministic report (byte-identical across reruns for a fixed config) and
// returns the exit status: 0 on success, 1 when an exact check failed, 2 on
// usage errors (raised as std::invalid_argument by the callee and mapped by
// the caller).
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "local.hpp"
#include "packets.hpp"
#include "projective.hpp"
#include "report.hpp"
#include "types.hpp"
#include "verify.hpp"

namespace heis {

struct RunConfig {
  std::vector<int> primes;
  InvolutionKind involution = InvolutionKind::Trivial;
  std::vector<LocalPlace> places;
  std::string format = "json";  // json | csv
  std::uint64_t seed = 0;
};

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

namespace detail {

inline FiniteGroup group_from_config(const RunConfig& cfg) {
  if (cfg.primes.empty())
    fail("at least one prime is required (-p)");
  return FiniteGroup(cfg.primes);
}

// Seeded associativity spot check; the group law is exact, this guards the
// build itself and gives the seed a reproducible meaning in the report.
inline bool associativity_spot_check(const FiniteGroup& g, std::uint64_t seed,
                                     int samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, g.order() - 1);
  for (int i = 0; i < samples; ++i) {
    Element x = g.unrank(pick(rng));
    Element y = g.unrank(pick(rng));
    Element z = g.unrank(pick(rng));
    if (!(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z))))
      return false;
  }
  return true;
}

}  // namespace detail

inline CommandResult cmd_irreps(const RunConfig& cfg) {
  if (cfg.format != "json")
    fail("irreps reports are json-only; csv flattens only the packet table");
  FiniteGroup g = detail::group_from_config(cfg);
  std::vector<ClassFunction> irreps = irreducible_characters(g);
  OrthogonalityReport orth = check_orthogonality(g, irreps);
  bool assoc = detail::associativity_spot_check(g, cfg.seed, 1000);

  Int degree_sq_sum = 0;
  for (const ClassFunction& chi : irreps)
    degree_sq_sum += Int(chi.degree()) * chi.degree();

  Json j;
  j["command"] = "irreps";
  j["primes"] = cfg.primes;
  j["group_order"] = g.order();
  j["cyclotomic_modulus"] = g.cyclotomic_modulus();
  j["class_count"] = g.classes()->count();
  j["irreducible_count"] = irreps.size();
  Json degs = Json::object();
  for (auto [d, c] : degree_histogram(irreps))
    degs[std::to_string(d)] = c;
  j["degree_counts"] = degs;
  j["degree_square_sum"] = degree_sq_sum.str();
  j["degree_square_sum_formula"] = "sum_i deg(chi_i)^2 = |G|";
  j["orthogonality_rows"] = orth.rows_ok;
  j["orthogonality_columns"] = orth.columns_ok;
  j["associativity_spot_check"] = assoc;
  j["seed"] = cfg.seed;
  j["table"] = character_table_json(g, irreps);

  bool ok = orth.ok() && assoc && degree_sq_sum == g.order();
  return {ok ? 0 : 1, j.dump(2) + "\n"};
}

inline CommandResult cmd_classify(const RunConfig& cfg) {
  FiniteGroup g = detail::group_from_config(cfg);
  GroupInvolution sigma = make_involution(g, cfg.involution);
  std::vector<PacketLabel> packets = enumerate_packets(g);
  std::int64_t m = multiplicity(g);

  Json packet_rows = Json::array();
  Json tables = Json::array();
  std::int64_t distinguished_count = 0;
  for (const PacketLabel& label : packets) {
    bool dist = is_distinguished_packet(g, label, sigma);
    packet_rows.push_back({{"label", label_json(label)}, {"distinguished", dist}});
    if (dist) {
      ++distinguished_count;
      tables.push_back(distinction_table_json(period_vanishing_table(g, label, sigma)));
    }
  }

  Json j;
  j["command"] = "classify";
  j["group"] = {{"primes", cfg.primes}, {"order", g.order()}};
  j["involution"] = involution_name(sigma.kind());
  j["assumption"] =
      "the splitting field is unramified at every place above a prime divisor of |H|";
  j["multiplicity"] = m;
  j["multiplicity_formula"] = "m(n) = prod_i (p_i - 1)";
  j["packet_count"] = packets.size();
  j["distinguished_count"] = distinguished_count;
  j["packets"] = packet_rows;
  j["tables"] = tables;
  j["seed"] = cfg.seed;

  if (cfg.format == "csv") {
    // CSV flattens the packet table only.
    std::string csv = "label,distinguished\n";
    for (const PacketLabel& label : packets) {
      bool dist = is_distinguished_packet(g, label, sigma);
      std::string lbl = label.to_string();
      for (char& ch : lbl)
        if (ch == ',')
          ch = ';';
      csv += "\"" + lbl + "\"," + (dist ? "true" : "false") + "\n";
    }
    return {0, csv};
  }
  return {0, j.dump(2) + "\n"};
}

inline CommandResult cmd_local(const RunConfig& cfg) {
  if (cfg.format != "json")
    fail("local reports are json-only; csv flattens only the packet table");
  FiniteGroup g = detail::group_from_config(cfg);
  GroupInvolution sigma = make_involution(g, cfg.involution);
  std::vector<LocalPlace> places = cfg.places.empty() ? all_place_types() : cfg.places;

  Json label_rows = Json::array();
  bool contrast_seen = false;
  for (const PacketLabel& label : enumerate_packets(g)) {
    Json place_rows = Json::array();
    for (const LocalPlace& place : places) {
      Json row;
      row["place"] = place.split ? "split" : "inert";
      if (!place.split) {
        row["decomposition"] = decomposition_name(place.decomposition);
        Json factors = Json::array();
        for (int i = 0; i < g.factor_count(); ++i)
          factors.push_back(ps_data_json(principal_series_data(g, label, i, place, sigma)));
        row["factors"] = factors;
        if (g.factor_count() == 1) {
          row["offsets"] = factors[0]["offsets"];
          row["sigma_action"] = factors[0]["sigma_action"];
        }
      }
      row["verdict"] = locally_distinguished_at(g, label, sigma, place);
      place_rows.push_back(std::move(row));
    }
    bool everywhere = everywhere_locally_distinguished(g, label, sigma, places);
    bool packet_dist = is_distinguished_packet(g, label, sigma);
    contrast_seen = contrast_seen || (everywhere && !packet_dist);
    label_rows.push_back({{"label", label_json(label)},
                          {"places", place_rows},
                          {"everywhere_locally_distinguished", everywhere},
                          {"packet_distinguished", packet_dist}});
  }

  Json j;
  j["command"] = "local";
  j["group"] = {{"primes", cfg.primes}, {"order", g.order()}};
  j["involution"] = involution_name(sigma.kind());
  j["labels"] = label_rows;
  j["local_global_contrast"] = contrast_seen;
  j["seed"] = cfg.seed;
  return {0, j.dump(2) + "\n"};
}

inline CommandResult cmd_type(const std::string& expression) {
  FormalGL x = parse_formal_gl(expression);  // ParseError maps to usage error
  TypePartition t = type_of(x);

  Json chain = Json::array();
  std::optional<FormalGL> cur = x;
  while (cur) {
    Json step;
    step["form"] = cur->to_string();
    step["size"] = cur->size();
    step["type"] = type_partition_json(type_of(*cur));
    chain.push_back(std::move(step));
    cur = adduced(*cur);
  }

  Json j;
  j["command"] = "type";
  j["expression"] = expression;
  j["normalized"] = x.to_string();
  j["size"] = x.size();
  j["type"] = type_partition_json(t);
  if (auto rd = is_speh_type(t))
    j["speh"] = {{"r", rd->first}, {"d", rd->second}};
  else
    j["speh"] = nullptr;
  j["derivative_chain"] = chain;
  return {0, j.dump(2) + "\n"};
}

}  // namespace heis
