#include "hasse/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <stdexcept>

#include "hasse/json_io.hpp"

namespace hasse {

std::string sha256_hex(const void* data, std::size_t len) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int digest_len = 0;
    if (!EVP_Digest(data, len, digest.data(), &digest_len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(digest_len * 2);
    for (unsigned int i = 0; i < digest_len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for digest: " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return sha256_hex(bytes.data(), bytes.size());
}

nlohmann::json to_json(const RunManifest& m) {
    nlohmann::json inputs = nlohmann::json::object(), outputs = nlohmann::json::object();
    for (const auto& [path, digest] : m.inputs) inputs[path] = digest;
    for (const auto& [path, digest] : m.outputs) outputs[path] = digest;
    return nlohmann::json{{"command", m.command},
                          {"params", m.params},
                          {"version", kToolVersion},
                          {"inputs", inputs},
                          {"outputs", outputs}};
}

std::filesystem::path manifest_path_for(const std::filesystem::path& output) {
    std::filesystem::path p = output;
    p += ".manifest.json";
    return p;
}

void write_manifest(const RunManifest& m, const std::filesystem::path& output) {
    write_json_file(manifest_path_for(output), to_json(m));
}

}  // namespace hasse
