#include "loopbv/model_io.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>

#include "loopbv/errors.hpp"

namespace loopbv {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field '" + where + key + "'");
  return *it;
}

int int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer()) throw SchemaError("field '" + where + key + "' must be an integer");
  return v.get<int>();
}

std::string str_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) throw SchemaError("field '" + where + key + "' must be a string");
  return v.get<std::string>();
}

Rational rat_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw SchemaError("field '" + where + key + "' must be a rational string");
  return parse_rational(v.get<std::string>());
}

std::vector<int> int_list(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_array()) throw SchemaError("field '" + where + key + "' must be a list");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer())
      throw SchemaError("field '" + where + key + "' must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

LieGroupData parse_lie(const json& j) {
  LieGroupData data;
  data.free_rank = int_field(j, "free_rank", "lie_group.");
  data.torsion = int_list(j, "torsion", "lie_group.");
  data.odd_degrees = int_list(j, "odd_degrees", "lie_group.");
  data.validate();
  return data;
}

ManifoldAlgebra parse_manifold(const json& j, const std::string& where) {
  ManifoldAlgebra m;
  m.dimension = j.contains("dimension") ? int_field(j, "dimension", where) : 0;
  const json& classes = field(j, "classes", where);
  if (!classes.is_array() || classes.empty())
    throw SchemaError("field '" + where + "classes' must be a non-empty list");
  for (const auto& c : classes) {
    m.names.push_back(str_field(c, "name", where + "classes."));
    m.degrees.push_back(int_field(c, "degree", where + "classes."));
  }
  if (j.contains("products")) {
    const json& products = field(j, "products", where);
    if (!products.is_array()) throw SchemaError("field '" + where + "products' must be a list");
    for (const auto& p : products) {
      std::vector<std::pair<std::string, Rational>> combo;
      for (const auto& t : field(p, "value", where + "products."))
        combo.emplace_back(str_field(t, "class", where + "products.value."),
                           rat_field(t, "coeff", where + "products.value."));
      m.products.emplace_back(str_field(p, "left", where + "products."),
                              str_field(p, "right", where + "products."), std::move(combo));
    }
  }
  return m;
}

RawAction parse_action(const json& j, const std::string& where) {
  RawAction raw;
  if (!j.is_object()) throw SchemaError("field '" + where + "' must be an object");
  for (const auto& [name, spec] : j.items()) {
    std::vector<RawAction::Rule> rules;
    const int degree = int_field(spec, "degree", where + "." + name + ".");
    if (spec.contains("rules")) {
      for (const auto& r : field(spec, "rules", where + "." + name + ".")) {
        RawAction::Rule rr;
        rr.on = str_field(r, "on", where + "." + name + ".rules.");
        for (const auto& t : field(r, "value", where + "." + name + ".rules."))
          rr.value.emplace_back(str_field(t, "class", where + "." + name + ".rules.value."),
                                rat_field(t, "coeff", where + "." + name + ".rules.value."));
        rules.push_back(std::move(rr));
      }
    }
    raw.classes.emplace(name, std::make_pair(degree, std::move(rules)));
  }
  return raw;
}

SamelsonTable parse_samelson(const json& j) {
  SamelsonTable table;
  if (!j.is_array()) throw SchemaError("field 'samelson' must be a list");
  table.zero_default = false;
  for (const auto& e : j) {
    std::map<int, Rational> combo;
    for (const auto& t : field(e, "value", "samelson."))
      combo.emplace(int_field(t, "gen", "samelson.value."),
                    rat_field(t, "coeff", "samelson.value."));
    table.entries.emplace(
        std::make_pair(int_field(e, "left", "samelson."), int_field(e, "right", "samelson.")),
        std::move(combo));
  }
  return table;
}

}  // namespace

ParsedModel parse_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open model file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SchemaError("model file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  const std::string schema = str_field(j, "schema", "");
  if (schema != "bvmodel/1")
    throw SchemaError("unsupported schema '" + schema + "' (expected bvmodel/1)");
  ParsedModel out;
  out.kind = str_field(j, "kind", "");
  if (out.kind == "lie_group") {
    LieGroupData data = parse_lie(field(j, "lie_group", ""));
    out.lie_data = data;
    out.model = build_lie_group_model(data);
    if (j.contains("samelson")) out.samelson = parse_samelson(j["samelson"]);
  } else if (out.kind == "sphere_action") {
    const json& spec = field(j, "sphere_action", "");
    const std::string which = str_field(spec, "which", "sphere_action.");
    if (which != "S1" && which != "S3")
      throw SchemaError("field 'sphere_action.which' must be S1 or S3");
    out.model = build_sphere_model(which == "S1" ? SphereKind::S1 : SphereKind::S3,
                                   parse_manifold(field(spec, "manifold", "sphere_action."),
                                                  "sphere_action.manifold."),
                                   parse_action(field(spec, "action", "sphere_action."),
                                                "sphere_action.action"));
  } else if (out.kind == "rational_action") {
    const json& spec = field(j, "rational_action", "");
    MonoidPresentation monoid;
    const json& pi1 = field(spec, "pi1", "rational_action.");
    monoid.free_rank = int_field(pi1, "free_rank", "rational_action.pi1.");
    monoid.torsion = int_list(pi1, "torsion", "rational_action.pi1.");
    for (const auto& h : field(spec, "higher", "rational_action."))
      monoid.higher.emplace_back(str_field(h, "name", "rational_action.higher."),
                                 int_field(h, "degree", "rational_action.higher."));
    std::map<std::string, std::string> hur;
    for (const auto& [k, v] : field(spec, "hur", "rational_action.").items()) {
      if (!v.is_string()) throw SchemaError("field 'rational_action.hur." + k + "' must name a class");
      hur.emplace(k, v.get<std::string>());
    }
    RawBLoop b_loop;
    if (spec.contains("b_loop")) {
      for (const auto& e : spec["b_loop"]) {
        std::vector<std::pair<Rational, std::string>> terms;
        for (const auto& t : field(e, "value", "rational_action.b_loop."))
          terms.emplace_back(rat_field(t, "coeff", "rational_action.b_loop.value."),
                             str_field(t, "monomial", "rational_action.b_loop.value."));
        b_loop.entries.emplace_back(str_field(e, "on", "rational_action.b_loop."),
                                    std::move(terms));
      }
    }
    out.model = build_rational_action_model(
        monoid,
        parse_manifold(field(spec, "manifold", "rational_action."), "rational_action.manifold."),
        parse_action(field(spec, "action", "rational_action."), "rational_action.action"), hur,
        b_loop);
  } else {
    throw SchemaError("unknown model kind '" + out.kind + "'");
  }
  if (j.contains("name")) out.model.name = str_field(j, "name", "");
  return out;
}

std::string catalog_file_name(const std::string& group_name) {
  std::string out;
  for (char c : group_name) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out + ".json";
}

std::string default_catalog_dir() {
  if (const char* env = std::getenv("LOOPBV_CATALOG"); env && *env) return env;
#ifdef LOOPBV_CATALOG_DIR
  return LOOPBV_CATALOG_DIR;
#else
  return "catalog";
#endif
}

ParsedModel resolve_model(const std::string& spec, const std::string& catalog_dir) {
  namespace fs = std::filesystem;
  if (fs::exists(spec)) return parse_model_file(spec);
  const std::string dir = catalog_dir.empty() ? default_catalog_dir() : catalog_dir;
  const fs::path candidate = fs::path(dir) / catalog_file_name(spec);
  if (fs::exists(candidate)) return parse_model_file(candidate);
  throw SchemaError("model '" + spec + "' is neither a file nor a catalog entry (looked for " +
                    candidate.string() + ")");
}

}  // namespace loopbv
