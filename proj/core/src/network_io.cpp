#include "rrs/network_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rrs/error.hpp"

namespace rrs::ssa {
namespace {

using nlohmann::json;

std::vector<std::size_t> species_list(const ReactionNetwork& network, const json& names,
                                      const char* field) {
  if (!names.is_array()) {
    throw Error(ErrorCode::kInvalidNetwork, std::string(field) + " must be an array");
  }
  std::vector<std::size_t> out;
  for (const json& name : names) {
    if (!name.is_string()) {
      throw Error(ErrorCode::kInvalidNetwork, std::string(field) + " entries must be names");
    }
    const auto idx = network.find_species(name.get<std::string>());
    if (!idx) {
      throw Error(ErrorCode::kInvalidNetwork,
                  "unknown species '" + name.get<std::string>() + "'");
    }
    out.push_back(*idx);
  }
  return out;
}

std::int64_t count_of(const json& value, const std::string& name) {
  if (!value.is_number_integer()) {
    throw Error(ErrorCode::kInvalidNetwork, "initial count of '" + name + "' must be an integer");
  }
  return value.get<std::int64_t>();
}

}  // namespace

ReactionNetwork parse_network(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidNetwork, e.what());
  }
  if (!doc.is_object() || !doc.contains("species") || !doc.contains("reactions")) {
    throw Error(ErrorCode::kInvalidNetwork, "expected an object with species and reactions");
  }

  ReactionNetwork network;
  const json& species = doc["species"];
  if (species.is_array()) {
    for (const json& s : species) {
      if (!s.is_object() || !s.contains("name") || !s["name"].is_string()) {
        throw Error(ErrorCode::kInvalidNetwork, "species entries need a name");
      }
      const std::string name = s["name"].get<std::string>();
      network.add_species(name, s.contains("initial") ? count_of(s["initial"], name) : 0);
    }
  } else if (species.is_object()) {
    for (const auto& [name, count] : species.items()) {
      network.add_species(name, count_of(count, name));
    }
  } else {
    throw Error(ErrorCode::kInvalidNetwork, "species must be an array or an object");
  }

  const json& reactions = doc["reactions"];
  if (!reactions.is_array()) throw Error(ErrorCode::kInvalidNetwork, "reactions must be an array");
  for (const json& r : reactions) {
    if (!r.is_object() || !r.contains("rate") || !r["rate"].is_number()) {
      throw Error(ErrorCode::kInvalidNetwork, "each reaction needs a numeric rate");
    }
    const json empty = json::array();
    network.add_reaction(r["rate"].get<double>(),
                         species_list(network, r.value("reactants", empty), "reactants"),
                         species_list(network, r.value("products", empty), "products"));
  }
  return network;
}

ReactionNetwork load_network(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidNetwork, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_network(text.str());
}

}  // namespace rrs::ssa
