#pragma once
#include <filesystem>
#include <optional>
#include <string>

#include "loopbv/models.hpp"
#include "loopbv/semidirect.hpp"

namespace loopbv {

struct ParsedModel {
  BVModel model;
  std::string kind;  // lie_group | sphere_action | rational_action
  std::optional<LieGroupData> lie_data;
  SamelsonTable samelson;  // zero table unless the file carries one
};

/// Versioned JSON model file, schema "bvmodel/1". Integers and rationals are
/// exact strings; schema errors name the offending field.
ParsedModel parse_model_file(const std::filesystem::path& path);

/// An existing file path wins; otherwise the name is looked up in the
/// catalog directory ("SU(3)" -> su3.json). Order: explicit argument, the
/// LOOPBV_CATALOG environment variable, the configured default.
ParsedModel resolve_model(const std::string& spec, const std::string& catalog_dir = "");

std::string catalog_file_name(const std::string& group_name);
std::string default_catalog_dir();

}  // namespace loopbv
