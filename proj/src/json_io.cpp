#include "unavoidable/json_io.hpp"

#include <fstream>
#include <sstream>

#include "unavoidable/errors.hpp"

namespace unav {

namespace {

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::vector<Rational> rational_list(const Json& list, const char* key) {
  if (!list.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::vector<Rational> out;
  for (const auto& x : list) out.push_back(rational_from_json(x));
  return out;
}

Json inequality_json(const Inequality& q) {
  return Json{{"left", q.left},
              {"right", q.right},
              {"left_expression", q.left_expression},
              {"right_expression", q.right_expression},
              {"holds", q.holds()}};
}

}  // namespace

Json rational_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) throw ParseError("rational must be a string like \"3/5\" or an integer");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json subset_json(Subset s) { return Json(s.members()); }

Json subsets_json(std::span<const Subset> sets) {
  Json out = Json::array();
  for (Subset s : sets) out.push_back(subset_json(s));
  return out;
}

Json to_json(const PartitionWitness& w) {
  return Json{{"blocks", subsets_json(w.blocks)}, {"offending", w.offending}};
}

Json to_json(const PackingWitness& w) {
  return Json{{"nonfaces", subsets_json(w.nonfaces)}, {"leftover", subset_json(w.leftover)}};
}

Json to_json(const Measure& mu) {
  Json weights = Json::array();
  for (const auto& w : mu.weights()) weights.push_back(rational_json(w));
  return Json{{"weights", weights}};
}

Json to_json(const WeightedHypergraph& family) {
  Json omega = Json::array();
  for (const auto& w : family.omega()) omega.push_back(rational_json(w));
  return Json{{"m", family.ground_size()},
              {"family", subsets_json(family.members())},
              {"omega", omega}};
}

Json to_json(const LpVerdict& verdict) {
  return Json{{"feasible", verdict.feasible},
              {"margin", verdict.margin ? rational_json(*verdict.margin) : Json(nullptr)},
              {"witness", verdict.witness ? to_json(*verdict.witness)["weights"] : Json(nullptr)},
              {"note", verdict.infeasibility_note},
              {"constraints", verdict.constraints},
              {"pivots", verdict.pivots}};
}

Json to_json(const Certificate& c) {
  Json inputs = Json::array();
  for (const auto& f : c.inputs) {
    inputs.push_back(Json{{"m", f.m},
                          {"pi", f.pi},
                          {"unavoidable", f.unavoidable},
                          {"witness", f.witness ? to_json(*f.witness) : Json(nullptr)}});
  }
  Json r{{"value", c.r}, {"prime_power", c.r_decomposition.has_value()}};
  r["p"] = c.r_decomposition ? Json(c.r_decomposition->p) : Json(nullptr);
  r["k"] = c.r_decomposition ? Json(c.r_decomposition->k) : Json(nullptr);
  return Json{{"kind", to_string(c.kind)},
              {"inputs", inputs},
              {"r", r},
              {"d", c.d ? Json(*c.d) : Json(nullptr)},
              {"s", c.s},
              {"inequality", c.inequality ? inequality_json(*c.inequality) : Json(nullptr)},
              {"schild_form", c.schild_form ? inequality_json(*c.schild_form) : Json(nullptr)},
              {"bound", c.bound ? Json(*c.bound) : Json(nullptr)},
              {"verdict", to_string(c.verdict)},
              {"reasons", c.reasons},
              {"conclusion", c.conclusion}};
}

WeightedHypergraph parse_weights_json(std::string_view text) {
  const Json doc = parse_document(text);
  const Json& m_field = require(doc, "m");
  if (!m_field.is_number_integer()) throw ParseError("\"m\" must be an integer");
  const auto m = m_field.get<std::int64_t>();
  if (m < 1 || m > kMaxGroundSize) throw ParseError("\"m\" must lie in [1, 63]");
  const Json& family = require(doc, "family");
  if (!family.is_array()) throw ParseError("\"family\" must be an array of vertex lists");
  std::vector<Subset> members;
  for (const auto& member : family) {
    if (!member.is_array()) throw ParseError("family members must be arrays of vertices");
    Subset s;
    for (const auto& v : member) {
      if (!v.is_number_integer()) throw ParseError("vertices must be integers");
      const auto x = v.get<std::int64_t>();
      if (x < 1 || x > m) {
        throw ParseError("vertex " + std::to_string(x) + " outside [1, " + std::to_string(m) + "]");
      }
      s = s.with(static_cast<int>(x));
    }
    members.push_back(s);
  }
  auto omega = rational_list(require(doc, "omega"), "omega");
  try {
    return WeightedHypergraph(static_cast<int>(m), std::move(members), std::move(omega));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Measure parse_measure_json(std::string_view text) {
  const Json doc = parse_document(text);
  auto weights = rational_list(require(doc, "weights"), "weights");
  try {
    return Measure(std::move(weights));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace unav
