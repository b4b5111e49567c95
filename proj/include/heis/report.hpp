// JSON serialization of the report payloads emitted by the CLI.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "characters.hpp"
#include "group.hpp"
#include "local.hpp"
#include "packets.hpp"
#include "types.hpp"

namespace heis {

using Json = nlohmann::ordered_json;

inline Json element_json(const Element& e) {
  Json coords = Json::array();
  for (int i = 0; i < e.factors; ++i)
    coords.push_back(Json::array({e.a(i), e.b(i), e.c(i)}));
  return coords;
}

inline Json label_json(const PacketLabel& label) {
  Json j = Json::array();
  for (std::int64_t e : label.central.exps)
    j.push_back(e);
  return j;
}

// Character table: class representative, class size, value per irreducible.
inline Json character_table_json(const FiniteGroup& g,
                                 const std::vector<ClassFunction>& irreps) {
  const ClassIndex& ci = *g.classes();
  Json classes = Json::array();
  for (std::size_t c = 0; c < ci.count(); ++c)
    classes.push_back({{"representative", element_json(g.unrank(ci.rep_ranks[c]))},
                       {"size", ci.sizes[c]}});
  Json rows = Json::array();
  for (const ClassFunction& chi : irreps) {
    Json values = Json::array();
    for (const Cyclotomic& v : chi.values)
      values.push_back(v.to_string());
    rows.push_back({{"name", chi.name}, {"degree", chi.degree()}, {"values", values}});
  }
  return Json{{"classes", classes}, {"irreducibles", rows}};
}

inline Json distinction_table_json(const DistinctionReport& r) {
  Json nonvan = Json::array();
  for (const PacketLabel& l : r.period_nonvanishing_copies)
    nonvan.push_back(label_json(l));
  Json van = Json::array();
  for (const PacketLabel& l : r.period_vanishing_copies)
    van.push_back(label_json(l));
  return Json{{"source", label_json(r.label)},
              {"nonvanishing", nonvan},
              {"vanishing", van},
              {"nonvanishing_count", nonvan.size()},
              {"vanishing_count", van.size()},
              {"multiplicity", r.multiplicity}};
}

inline Json ps_data_json(const PSData& d) {
  Json offsets = Json::array();
  for (std::int64_t k : d.normalized_offsets())
    offsets.push_back(k);
  Json triv = Json::array();
  for (bool b : d.restriction_trivial)
    triv.push_back(b);
  return Json{{"p", d.p},
              {"base", d.base},
              {"offsets", offsets},
              {"sigma_action", {{"scale", d.sigma_scale}, {"shift", d.sigma_shift}}},
              {"restriction_trivial", triv}};
}

inline Json type_partition_json(const TypePartition& t) {
  Json j = Json::array();
  for (std::int64_t p : t.parts)
    j.push_back(p);
  return j;
}

}  // namespace heis
