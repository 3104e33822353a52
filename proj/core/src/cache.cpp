#include "genrest/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "genrest/json_writer.hpp"

namespace genrest {

namespace {
constexpr int kCacheVersion = 1;

std::string canonical_payload(const GroupCacheData& d) {
    JsonWriter w;
    w.begin_object();
    w.key("version");
    w.value(kCacheVersion);
    w.key("family");
    w.value(d.family);
    w.key("q");
    w.value(d.q);
    w.key("elements");
    w.begin_array();
    for (uint64_t k : d.keys) w.value(static_cast<unsigned long long>(k));
    w.end_array();
    w.key("classes");
    w.begin_array();
    for (const auto& c : d.classes) {
        w.begin_array();
        for (int m : c) w.value(m);
        w.end_array();
    }
    w.end_array();
    w.key("subgroups");
    w.begin_object();
    auto set = [&](const char* name, const std::vector<int>& v) {
        w.key(name);
        w.begin_array();
        for (int m : v) w.value(m);
        w.end_array();
    };
    set("b", d.borel);
    set("t", d.torus);
    set("u", d.unipotent);
    set("z", d.center);
    w.end_object();
    w.end_object();
    return w.str();
}
} // namespace

uint64_t cache_content_hash(const std::string& payload) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string group_cache_path(const std::string& dir, const std::string& family, int q) {
    return (std::filesystem::path(dir) / ("genrest-" + family + "-q" + std::to_string(q) + ".json")).string();
}

std::optional<GroupCacheData> load_group_cache(const std::string& dir, const std::string& family, int q) {
    std::string path = group_cache_path(dir, family, q);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("version").get<int>() != kCacheVersion) return std::nullopt;
        GroupCacheData d;
        d.family = j.at("family").get<std::string>();
        d.q = j.at("q").get<int>();
        if (d.family != family || d.q != q) return std::nullopt;
        d.keys = j.at("elements").get<std::vector<uint64_t>>();
        d.classes = j.at("classes").get<std::vector<std::vector<int>>>();
        const auto& sub = j.at("subgroups");
        d.borel = sub.at("b").get<std::vector<int>>();
        d.torus = sub.at("t").get<std::vector<int>>();
        d.unipotent = sub.at("u").get<std::vector<int>>();
        d.center = sub.at("z").get<std::vector<int>>();
        uint64_t stored = j.at("hash").get<uint64_t>();
        if (stored != cache_content_hash(canonical_payload(d))) return std::nullopt;
        return d;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void store_group_cache(const std::string& dir, const GroupCacheData& data) {
    std::filesystem::create_directories(dir);
    std::string payload = canonical_payload(data);
    uint64_t h = cache_content_hash(payload);
    // splice the hash in as the first key so readers can check it cheaply
    std::string body = "{\"hash\":" + std::to_string(h) + "," + payload.substr(1);
    std::ofstream out(group_cache_path(dir, data.family, data.q), std::ios::binary | std::ios::trunc);
    out << body;
}

} // namespace genrest
