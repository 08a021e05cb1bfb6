#ifndef IOACO_CONFIG_HPP
#define IOACO_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ioaco/optimizer.hpp"
#include "ioaco/outranking.hpp"
#include "ioaco/problems.hpp"

namespace ioaco {

// Flat line-oriented config text: `[section]` headers, `key = value` lines,
// `#` comments. Intervals are "lo,hi"; lists are space-separated.

struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;
};

struct ConfigSection {
    std::string name;  // e.g. "dm pull-north" or "optimizer"
    int line = 0;
    std::vector<ConfigEntry> entries;

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
};

struct ConfigFile {
    std::vector<ConfigSection> sections;

    const ConfigSection* find(const std::string& name) const;
    std::vector<const ConfigSection*> find_all(const std::string& prefix) const;
};

ConfigFile parse_config(std::istream& in, const std::string& origin);
ConfigFile parse_config_file(const std::string& path);

// value parsers; all raise std::invalid_argument with the offending text
double parse_real(const std::string& text);
std::uint64_t parse_unsigned(const std::string& text);
Interval parse_interval(const std::string& text);
std::vector<Interval> parse_interval_list(const std::string& text);
std::vector<std::string> split_words(const std::string& text);

/// Shortest exact decimal form of v (round-trips through parse_real).
std::string format_real(double v);

struct NamedDm {
    std::string name;
    DmModel model;
};

/// Reads `[dm <name>]` sections; a model file may hold one or several.
NamedDm dm_from_section(const ConfigSection& section);
std::vector<NamedDm> load_dms(const std::string& path);
void write_dm(std::ostream& out, const NamedDm& dm);

OptimizerConfig optimizer_from_section(const ConfigSection& section);
void write_optimizer(std::ostream& out, const OptimizerConfig& config);

struct PlanInstance {
    std::string problem_id;
    std::size_t n_obj = 0;
};

struct ExperimentPlan {
    std::uint64_t master_seed = 1;
    std::size_t runs_per_cell = 30;
    std::size_t aroi_sample = 5000;
    bool all_pairs_average = false;
    std::vector<std::string> algorithms;  // subset of {ioaco, baseline}
    std::vector<PlanInstance> instances;
    std::vector<NamedDm> dms;
    OptimizerConfig optimizer;
};

ExperimentPlan plan_from_config(const ConfigFile& config);
ExperimentPlan load_plan(const std::string& path);

struct DmDefaults {
    Interval indifference{0.02, 0.05};
    Interval veto{0.20, 0.40};
    Interval lambda{0.6, 0.7};
    double beta = 0.67;
    double rel_half_width = 0.10;  // weight interval widening
};

/// Synthetic decision makers: seeded simplex centres widened into weight
/// intervals, fixed thresholds in normalized objective units.
std::vector<NamedDm> generate_dm_settings(std::size_t count, std::uint64_t master_seed,
                                          std::size_t n_obj,
                                          const DmDefaults& defaults = {});

} // namespace ioaco

#endif
