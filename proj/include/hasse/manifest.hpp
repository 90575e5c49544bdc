#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace hasse {

inline constexpr const char* kToolVersion = "0.1.0";

// Emitted alongside every file-producing command. Contains only
// run-determined data (no wall clock), so repeating a seeded command
// reproduces the manifest byte for byte; timing goes to stdout instead.
struct RunManifest {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::vector<std::pair<std::string, std::string>> inputs;   // (path, sha256)
    std::vector<std::pair<std::string, std::string>> outputs;
};

std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_file(const std::filesystem::path& path);

nlohmann::json to_json(const RunManifest& m);

// Writes <out_stem>.manifest.json next to the named output file.
std::filesystem::path manifest_path_for(const std::filesystem::path& output);
void write_manifest(const RunManifest& m, const std::filesystem::path& output);

}  // namespace hasse
