#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace almg::cli {

/// FNV-1a 64-bit digest of a file's bytes, as a hex string.
std::string file_digest(const std::filesystem::path& path);

/// Run manifest: command, resolved parameters, seed, version, timestamps and
/// emitted files with content digests. Replaying a manifest reproduces
/// byte-identical CSV outputs.
struct Manifest {
    std::string command;
    nlohmann::json parameters;
    std::uint64_t seed = 0;
    std::string created_utc;
    std::string completed_utc;

    struct Output {
        std::string path;  // relative to the manifest's directory
        std::uintmax_t bytes = 0;
        std::string fnv1a64;
    };
    std::vector<Output> outputs;

    void add_output(const std::filesystem::path& dir, const std::string& name);
    void write(const std::filesystem::path& path) const;
    static Manifest load(const std::filesystem::path& path);
};

std::string utc_now();

}  // namespace almg::cli
