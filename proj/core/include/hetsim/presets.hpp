#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hetsim {

std::vector<std::string> preset_names();

struct PresetOptions {
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = "out";
  int threads = 0;
};

struct PresetReport {
  std::filesystem::path directory;
  std::filesystem::path manifest;
  std::vector<std::filesystem::path> files;
};

// Runs a named experiment family and writes its CSVs plus manifest.json under
// out_dir/<name>/. Throws kUnknownPreset.
PresetReport run_preset(std::string_view name, const PresetOptions& options);

// Re-runs the preset recorded in a manifest into out_dir.
PresetReport replay_manifest(const std::filesystem::path& manifest, const std::filesystem::path& out_dir,
                             int threads = 0);

std::string version_string();

}  // namespace hetsim
