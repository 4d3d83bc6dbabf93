#pragma once

#include <string>
#include <vector>

namespace confighom::registry {

// Directory holding the known-values data files; the CONFIGHOM_CORPUS_DIR
// environment variable overrides the location compiled into the library.
std::string corpus_dir();

// Read a whole file; error mentions the path.
std::string read_file(const std::string& path);

// A path is tried as given, then relative to the corpus directory.
std::string resolve_data_path(const std::string& path);

// One known-values record: a table (or family) with a provenance label kept
// separate from anything the engine computes.
struct Entry {
    std::string name;
    std::string source;
    std::string payload_json; // record body, serialized
};

// All entries from every *.json file in the corpus directory that carries an
// "entries" array, sorted by name.
std::vector<Entry> load_known_values();

const Entry& find(const std::vector<Entry>& entries, const std::string& name);

} // namespace confighom::registry
