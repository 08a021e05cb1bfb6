#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ioaco/config.hpp"
#include "ioaco/rng.hpp"

namespace ioaco {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail_at(const std::string& origin, int line, const std::string& what) {
    throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + what);
}

} // namespace

bool ConfigSection::has(const std::string& key) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const ConfigEntry& e) { return e.key == key; });
}

const std::string& ConfigSection::get(const std::string& key) const {
    for (const auto& e : entries) {
        if (e.key == key) return e.value;
    }
    throw std::invalid_argument("missing key '" + key + "' in section [" + name + "]");
}

std::string ConfigSection::get_or(const std::string& key, const std::string& fallback) const {
    for (const auto& e : entries) {
        if (e.key == key) return e.value;
    }
    return fallback;
}

const ConfigSection* ConfigFile::find(const std::string& name) const {
    for (const auto& s : sections) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

std::vector<const ConfigSection*> ConfigFile::find_all(const std::string& prefix) const {
    std::vector<const ConfigSection*> out;
    for (const auto& s : sections) {
        if (s.name.rfind(prefix, 0) == 0) out.push_back(&s);
    }
    return out;
}

ConfigFile parse_config(std::istream& in, const std::string& origin) {
    ConfigFile file;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail_at(origin, line_no, "unterminated section header");
            ConfigSection section;
            section.name = trim(line.substr(1, line.size() - 2));
            section.line = line_no;
            if (section.name.empty()) fail_at(origin, line_no, "empty section name");
            file.sections.push_back(std::move(section));
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            fail_at(origin, line_no, "expected 'key = value', got '" + line + "'");
        }
        if (file.sections.empty()) {
            fail_at(origin, line_no, "key outside any [section]");
        }
        ConfigEntry entry;
        entry.key = trim(line.substr(0, eq));
        entry.value = trim(line.substr(eq + 1));
        entry.line = line_no;
        if (entry.key.empty()) fail_at(origin, line_no, "empty key");
        file.sections.back().entries.push_back(std::move(entry));
    }
    return file;
}

ConfigFile parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_config(in, path);
}

double parse_real(const std::string& text) {
    const std::string t = trim(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    if (used != t.size()) throw std::invalid_argument("trailing junk in number: '" + text + "'");
    if (!std::isfinite(v)) throw std::invalid_argument("number must be finite: '" + text + "'");
    return v;
}

std::uint64_t parse_unsigned(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty() || t[0] == '-') throw std::invalid_argument("not a count: '" + text + "'");
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw std::invalid_argument("not a count: '" + text + "'");
    }
    return v;
}

Interval parse_interval(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        const double v = parse_real(text);  // plain number reads as degenerate
        return make_interval(v, v);
    }
    return make_interval(parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1)));
}

std::vector<std::string> split_words(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> words;
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

std::vector<Interval> parse_interval_list(const std::string& text) {
    std::vector<Interval> out;
    for (const auto& w : split_words(text)) out.push_back(parse_interval(w));
    return out;
}

std::string format_real(double v) {
    char buf[64];
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::stod(buf) == v) break;
    }
    return buf;
}

NamedDm dm_from_section(const ConfigSection& section) {
    if (section.name.rfind("dm", 0) != 0) {
        throw std::invalid_argument("not a dm section: [" + section.name + "]");
    }
    NamedDm dm;
    const std::string tail = section.name.size() > 2 ? trim(section.name.substr(2)) : "";
    dm.name = section.has("name") ? section.get("name") : tail;
    if (dm.name.empty()) dm.name = "dm";
    dm.model.weights = parse_interval_list(section.get("weights"));
    dm.model.indifference = parse_interval_list(section.get("indifference"));
    dm.model.veto = parse_interval_list(section.get("veto"));
    dm.model.lambda = parse_interval(section.get("lambda"));
    dm.model.beta = parse_real(section.get("beta"));
    validate(dm.model);
    return dm;
}

std::vector<NamedDm> load_dms(const std::string& path) {
    const ConfigFile file = parse_config_file(path);
    std::vector<NamedDm> out;
    for (const auto* section : file.find_all("dm")) {
        out.push_back(dm_from_section(*section));
    }
    if (out.empty()) throw std::invalid_argument("no [dm] section in " + path);
    return out;
}

namespace {

std::string interval_text(const Interval& v) {
    return format_real(v.lo) + "," + format_real(v.hi);
}

std::string interval_list_text(const std::vector<Interval>& list) {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out += ' ';
        out += interval_text(list[i]);
    }
    return out;
}

} // namespace

void write_dm(std::ostream& out, const NamedDm& dm) {
    out << "[dm " << dm.name << "]\n";
    out << "weights = " << interval_list_text(dm.model.weights) << "\n";
    out << "indifference = " << interval_list_text(dm.model.indifference) << "\n";
    out << "veto = " << interval_list_text(dm.model.veto) << "\n";
    out << "lambda = " << interval_text(dm.model.lambda) << "\n";
    out << "beta = " << format_real(dm.model.beta) << "\n";
}

OptimizerConfig optimizer_from_section(const ConfigSection& section) {
    OptimizerConfig config;
    config.zeta = parse_real(section.get_or("zeta", "0.1"));
    config.xi = parse_real(section.get_or("xi", "0.5"));
    config.kappa = parse_unsigned(section.get_or("kappa", "50"));
    config.n_ants = parse_unsigned(section.get_or("n_ants", "0"));
    config.iter_max = parse_unsigned(section.get_or("iter_max", "100"));
    config.mode = optimizer_mode_from_string(section.get_or("mode", "preference"));
    config.norm_epsilon = parse_real(section.get_or("norm_epsilon", "0.001"));
    config.norm_alpha = parse_real(section.get_or("norm_alpha", "0.5"));
    config.seed = parse_unsigned(section.get_or("seed", "1"));
    config.trace = section.get_or("trace", "0") == "1";
    validate(config);
    return config;
}

void write_optimizer(std::ostream& out, const OptimizerConfig& config) {
    out << "[optimizer]\n";
    out << "zeta = " << format_real(config.zeta) << "\n";
    out << "xi = " << format_real(config.xi) << "\n";
    out << "kappa = " << config.kappa << "\n";
    out << "n_ants = " << config.n_ants << "\n";
    out << "iter_max = " << config.iter_max << "\n";
    out << "mode = " << to_string(config.mode) << "\n";
    out << "norm_epsilon = " << format_real(config.norm_epsilon) << "\n";
    out << "norm_alpha = " << format_real(config.norm_alpha) << "\n";
    out << "seed = " << config.seed << "\n";
    out << "trace = " << (config.trace ? 1 : 0) << "\n";
}

ExperimentPlan plan_from_config(const ConfigFile& config) {
    const ConfigSection* campaign = config.find("campaign");
    if (!campaign) throw std::invalid_argument("plan needs a [campaign] section");

    ExperimentPlan plan;
    plan.master_seed = parse_unsigned(campaign->get_or("master_seed", "1"));
    plan.runs_per_cell = parse_unsigned(campaign->get_or("runs_per_cell", "30"));
    plan.aroi_sample = parse_unsigned(campaign->get_or("aroi_sample", "5000"));
    plan.all_pairs_average = campaign->get_or("all_pairs_average", "0") == "1";
    plan.algorithms = split_words(campaign->get_or("algorithms", "ioaco baseline"));
    for (const auto& a : plan.algorithms) {
        if (a != "ioaco" && a != "baseline") {
            throw std::invalid_argument("unknown algorithm '" + a + "' in plan");
        }
    }
    if (plan.algorithms.empty()) throw std::invalid_argument("plan lists no algorithms");

    for (const auto& word : split_words(campaign->get_or("problems", ""))) {
        const std::size_t colon = word.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("problem entries are id:m, got '" + word + "'");
        }
        PlanInstance inst;
        inst.problem_id = word.substr(0, colon);
        inst.n_obj = parse_unsigned(word.substr(colon + 1));
        make_problem(inst.problem_id, inst.n_obj);  // validate early
        plan.instances.push_back(std::move(inst));
    }

    if (const ConfigSection* opt = config.find("optimizer")) {
        plan.optimizer = optimizer_from_section(*opt);
    }
    for (const auto* section : config.find_all("dm")) {
        plan.dms.push_back(dm_from_section(*section));
    }
    for (std::size_t i = 0; i < plan.dms.size(); ++i) {
        for (std::size_t j = i + 1; j < plan.dms.size(); ++j) {
            if (plan.dms[i].name == plan.dms[j].name) {
                throw std::invalid_argument("duplicate dm name: " + plan.dms[i].name);
            }
        }
    }
    return plan;
}

ExperimentPlan load_plan(const std::string& path) {
    return plan_from_config(parse_config_file(path));
}

std::vector<NamedDm> generate_dm_settings(std::size_t count, std::uint64_t master_seed,
                                          std::size_t n_obj, const DmDefaults& defaults) {
    if (count < 1) throw std::invalid_argument("need at least one decision maker");
    if (n_obj < 2) throw std::invalid_argument("need at least two objectives");
    std::vector<NamedDm> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(mix_seed({master_seed, 0x646d, i, n_obj}));
        std::vector<double> centre(n_obj);
        double total = 0.0;
        for (auto& c : centre) {
            double u = rng.uniform01();
            while (u <= 0.0) u = rng.uniform01();
            c = -std::log(u);
            total += c;
        }
        NamedDm dm;
        dm.name = "dm" + std::to_string(i + 1);
        dm.model.weights.reserve(n_obj);
        for (double c : centre) {
            const double w = c / total;
            dm.model.weights.push_back(
                make_interval(w * (1.0 - defaults.rel_half_width),
                              w * (1.0 + defaults.rel_half_width)));
        }
        dm.model.indifference.assign(n_obj, defaults.indifference);
        dm.model.veto.assign(n_obj, defaults.veto);
        dm.model.lambda = defaults.lambda;
        dm.model.beta = defaults.beta;
        validate(dm.model);
        out.push_back(std::move(dm));
    }
    return out;
}

} // namespace ioaco
