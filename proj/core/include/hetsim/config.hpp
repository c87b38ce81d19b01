#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "hetsim/engine.hpp"

namespace hetsim {

/// Parses a JSON scenario document.
///
/// Omitted keys take the default values; unknown keys are rejected.
/// `overrides` are "dotted.key=value" strings applied to the document before
/// validation, the value parsed as JSON and otherwise taken as a string.
/// Throws kParseError for malformed text and kValidationError (message starts
/// with the key path) for type or invariant violations.
Scenario parse_scenario(std::string_view text, std::span<const std::string> overrides = {});

Scenario load_scenario(const std::filesystem::path& path, std::span<const std::string> overrides = {});

// Full document with every key; parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace hetsim
