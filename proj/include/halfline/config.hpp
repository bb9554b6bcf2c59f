#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halfline/boundary.hpp"
#include "halfline/model.hpp"

namespace halfline {

// Declarative run configuration: INI-style sections of key = value pairs,
// '#' comments, parse errors reported with line numbers.  All numeric
// tolerances live here, not in code.
class RunConfig {
  public:
    static RunConfig parse_file(const std::string& path);
    static RunConfig parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           std::optional<std::string> fallback = std::nullopt) const;
    double get_double(const std::string& section, const std::string& key,
                      std::optional<double> fallback = std::nullopt) const;
    long get_int(const std::string& section, const std::string& key,
                 std::optional<long> fallback = std::nullopt) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
    std::vector<double> get_double_list(const std::string& section, const std::string& key) const;

    void set(const std::string& section, const std::string& key, const std::string& value);

    // Canonical "section.key = value" dump (sorted); config_hash is FNV-1a
    // over it, so semantically identical configs hash identically.
    std::string canonical() const;
    std::string config_hash() const;

    const std::string& origin() const { return origin_; }

    // Typed builders with cross-field validation.
    GridPtr build_grid() const;
    ModelParams build_model(GridPtr g) const;
    BoundaryData build_boundary() const;
    double T() const { return get_double("time", "T", 1.0); }
    double dt() const { return get_double("time", "dt", 0.01); }
    std::size_t snapshot_stride() const {
        return static_cast<std::size_t>(get_int("time", "snapshot_stride", 1));
    }
    std::string output_directory() const;  // honors HALFLINE_OUT_ROOT
    void validate() const;

  private:
    struct Entry {
        std::string value;
        int line = 0;
    };
    std::string origin_;
    std::map<std::string, std::map<std::string, Entry>> sections_;
};

// Built-in presets (theorem4-small-data, theorem7-band, theorem8-profile,
// linear-only, ...); throws ConfigError for unknown names.
std::vector<std::string> preset_names();
RunConfig preset_config(const std::string& name);

}  // namespace halfline
