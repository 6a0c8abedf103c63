#pragma once

#include <filesystem>
#include <string_view>

#include "rrs/ssa.hpp"

namespace rrs::ssa {

/// Parses a JSON reaction network:
///
///   {
///     "species":   [{"name": "A", "initial": 100}, {"name": "B", "initial": 0}],
///     "reactions": [{"rate": 1.0, "reactants": ["A"], "products": ["B"]}]
///   }
///
/// "species" may also be an object mapping names to initial counts.
/// Reactant lists name at most two species; repeating a name gives the
/// same-species bimolecular kind. Throws Error(kInvalidNetwork).
ReactionNetwork parse_network(std::string_view json_text);

/// Reads and parses a network file. Throws Error(kInvalidNetwork) when the
/// file cannot be read.
ReactionNetwork load_network(const std::filesystem::path& path);

}  // namespace rrs::ssa
