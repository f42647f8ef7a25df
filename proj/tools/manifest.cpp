#include "manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include "almg/version.hpp"

namespace almg::cli {

std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot digest " + path.string());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 14];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize n = in.gcount();
        for (std::streamsize i = 0; i < n; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
        if (!in) break;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void Manifest::add_output(const std::filesystem::path& dir, const std::string& name) {
    Output o;
    o.path = name;
    o.bytes = std::filesystem::file_size(dir / name);
    o.fnv1a64 = file_digest(dir / name);
    outputs.push_back(std::move(o));
}

void Manifest::write(const std::filesystem::path& path) const {
    nlohmann::json j;
    j["command"] = command;
    j["version"] = almg::kVersion;
    j["parameters"] = parameters;
    j["seed"] = seed;
    j["created_utc"] = created_utc;
    j["completed_utc"] = completed_utc;
    j["outputs"] = nlohmann::json::array();
    for (const auto& o : outputs)
        j["outputs"].push_back({{"path", o.path}, {"bytes", o.bytes}, {"fnv1a64", o.fnv1a64}});
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest " + path.string());
    out << j.dump(2) << '\n';
}

Manifest Manifest::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open manifest " + path.string());
    nlohmann::json j;
    in >> j;
    Manifest m;
    m.command = j.at("command").get<std::string>();
    m.parameters = j.at("parameters");
    m.seed = j.value("seed", std::uint64_t{0});
    m.created_utc = j.value("created_utc", "");
    m.completed_utc = j.value("completed_utc", "");
    if (j.contains("outputs"))
        for (const auto& o : j["outputs"]) {
            Output out;
            out.path = o.value("path", "");
            out.bytes = o.value("bytes", std::uintmax_t{0});
            out.fnv1a64 = o.value("fnv1a64", "");
            m.outputs.push_back(std::move(out));
        }
    return m;
}

}  // namespace almg::cli
