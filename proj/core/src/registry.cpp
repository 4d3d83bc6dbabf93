#include "confighom/registry.hpp"

#include "confighom/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef CONFIGHOM_CORPUS_DIR_DEFAULT
#define CONFIGHOM_CORPUS_DIR_DEFAULT ""
#endif

namespace confighom::registry {

namespace fs = std::filesystem;
using nlohmann::json;

std::string corpus_dir() {
    if (const char* env = std::getenv("CONFIGHOM_CORPUS_DIR")) return env;
    return CONFIGHOM_CORPUS_DIR_DEFAULT;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string resolve_data_path(const std::string& path) {
    if (fs::exists(path)) return path;
    fs::path fallback = fs::path(corpus_dir()) / path;
    if (fs::exists(fallback)) return fallback.string();
    throw ValidationError("file not found: " + path + " (also tried " +
                          fallback.string() + ")");
}

std::vector<Entry> load_known_values() {
    const std::string dir = corpus_dir();
    if (dir.empty() || !fs::is_directory(dir))
        throw ValidationError("known-values directory not found: " + dir);

    std::vector<fs::path> files;
    for (const auto& item : fs::directory_iterator(dir))
        if (item.is_regular_file() && item.path().extension() == ".json")
            files.push_back(item.path());
    std::sort(files.begin(), files.end());

    std::vector<Entry> out;
    for (const fs::path& file : files) {
        json j;
        try {
            j = json::parse(read_file(file.string()));
        } catch (const json::exception& e) {
            throw ValidationError("bad JSON in " + file.string() + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("entries")) continue;
        for (const auto& rec : j["entries"]) {
            Entry e;
            e.name = rec.at("name").get<std::string>();
            e.source = rec.value("source", std::string{});
            e.payload_json = rec.dump();
            out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Entry& a, const Entry& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].name == out[i - 1].name)
            throw ValidationError("duplicate known-values entry: " + out[i].name);
    return out;
}

const Entry& find(const std::vector<Entry>& entries, const std::string& name) {
    for (const Entry& e : entries)
        if (e.name == name) return e;
    throw ValidationError("no known-values entry named " + name);
}

} // namespace confighom::registry
