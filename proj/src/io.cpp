#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ioaco/io.hpp"
#include "ioaco/rng.hpp"

#include "json.hpp"

namespace ioaco {
namespace {

using json = nlohmann::ordered_json;

} // namespace

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    if (target.has_parent_path()) {
        std::filesystem::create_directories(target.parent_path());
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
        if (!out.flush()) throw std::runtime_error("short write on " + tmp);
    }
    std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string aroi_to_text(const ARoI& aroi) {
    std::ostringstream out;
    out << "# aroi problem=" << aroi.problem_id << " m=" << aroi.n_obj
        << " dm=" << aroi.dm_id << " sample=" << aroi.sample_size
        << " seed=" << aroi.seed << " points=" << aroi.points.size() << "\n";
    for (const auto& p : aroi.points) {
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k) out << ' ';
            out << format_real(p[k]);
        }
        out << '\n';
    }
    return out.str();
}

ARoI aroi_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header) || header.rfind("# aroi ", 0) != 0) {
        throw std::runtime_error("not an aroi file (missing header)");
    }
    ARoI aroi;
    std::size_t expected = 0;
    {
        std::istringstream fields(header.substr(7));
        std::string kv;
        while (fields >> kv) {
            const std::size_t eq = kv.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = kv.substr(0, eq);
            const std::string value = kv.substr(eq + 1);
            if (key == "problem") aroi.problem_id = value;
            else if (key == "m") aroi.n_obj = parse_unsigned(value);
            else if (key == "dm") aroi.dm_id = value;
            else if (key == "sample") aroi.sample_size = parse_unsigned(value);
            else if (key == "seed") aroi.seed = parse_unsigned(value);
            else if (key == "points") expected = parse_unsigned(value);
        }
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        ObjectiveVector p;
        double v = 0.0;
        while (row >> v) p.push_back(v);
        if (aroi.n_obj != 0 && p.size() != aroi.n_obj) {
            throw std::runtime_error("aroi row has wrong arity");
        }
        aroi.points.push_back(std::move(p));
    }
    if (expected != 0 && aroi.points.size() != expected) {
        throw std::runtime_error("aroi point count does not match header");
    }
    return aroi;
}

void save_aroi(const std::string& path, const ARoI& aroi) {
    write_file_atomic(path, aroi_to_text(aroi));
}

ARoI load_aroi(const std::string& path) { return aroi_from_text(read_file(path)); }

namespace {

json interval_json(const Interval& v) { return json::array({v.lo, v.hi}); }

Interval interval_from_json(const json& j) {
    return make_interval(j.at(0).get<double>(), j.at(1).get<double>());
}

json dm_json(const DmModel& dm) {
    json j;
    j["weights"] = json::array();
    j["indifference"] = json::array();
    j["veto"] = json::array();
    for (const auto& w : dm.weights) j["weights"].push_back(interval_json(w));
    for (const auto& q : dm.indifference) j["indifference"].push_back(interval_json(q));
    for (const auto& v : dm.veto) j["veto"].push_back(interval_json(v));
    j["lambda"] = interval_json(dm.lambda);
    j["beta"] = dm.beta;
    return j;
}

DmModel dm_from_json(const json& j) {
    DmModel dm;
    for (const auto& w : j.at("weights")) dm.weights.push_back(interval_from_json(w));
    for (const auto& q : j.at("indifference")) {
        dm.indifference.push_back(interval_from_json(q));
    }
    for (const auto& v : j.at("veto")) dm.veto.push_back(interval_from_json(v));
    dm.lambda = interval_from_json(j.at("lambda"));
    dm.beta = j.at("beta").get<double>();
    return dm;
}

} // namespace

std::string run_result_to_json(const RunResult& result) {
    json j;
    j["problem"] = {{"family", result.problem.family == ProblemFamily::dtlz ? "dtlz" : "wfg"},
                    {"index", result.problem.index},
                    {"n_obj", result.problem.n_obj},
                    {"n_vars", result.problem.n_vars}};
    j["config"] = {{"zeta", result.config.zeta},
                   {"xi", result.config.xi},
                   {"kappa", result.config.kappa},
                   {"n_ants", result.config.n_ants},
                   {"iter_max", result.config.iter_max},
                   {"mode", to_string(result.config.mode)},
                   {"norm_epsilon", result.config.norm_epsilon},
                   {"norm_alpha", result.config.norm_alpha},
                   {"seed", result.config.seed},
                   {"trace", result.config.trace}};
    j["dm"] = result.dm ? dm_json(*result.dm) : json(nullptr);
    j["evaluations"] = result.evaluations;
    j["archive"] = json::array();
    for (const auto& s : result.archive.solutions) {
        json row;
        row["x"] = s.x;
        row["objectives"] = s.objectives;
        row["normalized"] = s.normalized;
        row["violation"] = s.violation;
        row["front"] = s.front;
        row["strength"] = s.strength;
        row["weakness"] = s.weakness;
        row["birth"] = s.birth;
        j["archive"].push_back(std::move(row));
    }
    j["best_compromise"] = result.best_compromise;
    j["trace"] = json::array();
    for (const auto& t : result.trace) {
        j["trace"].push_back({{"iteration", t.iteration},
                              {"front_histogram", t.front_histogram},
                              {"best_weakness", t.best_weakness},
                              {"best_strength", t.best_strength}});
    }
    return j.dump(1) + "\n";
}

RunResult run_result_from_json(const std::string& text) {
    const json j = json::parse(text);
    RunResult result;
    const json& problem = j.at("problem");
    result.problem = make_problem(
        problem.at("family").get<std::string>() + std::to_string(problem.at("index").get<int>()),
        problem.at("n_obj").get<std::size_t>());
    const json& config = j.at("config");
    result.config.zeta = config.at("zeta").get<double>();
    result.config.xi = config.at("xi").get<double>();
    result.config.kappa = config.at("kappa").get<std::size_t>();
    result.config.n_ants = config.at("n_ants").get<std::size_t>();
    result.config.iter_max = config.at("iter_max").get<std::size_t>();
    result.config.mode = optimizer_mode_from_string(config.at("mode").get<std::string>());
    result.config.norm_epsilon = config.at("norm_epsilon").get<double>();
    result.config.norm_alpha = config.at("norm_alpha").get<double>();
    result.config.seed = config.at("seed").get<std::uint64_t>();
    result.config.trace = config.at("trace").get<bool>();
    if (!j.at("dm").is_null()) result.dm = dm_from_json(j.at("dm"));
    result.evaluations = j.at("evaluations").get<std::uint64_t>();
    result.archive.zeta = result.config.zeta;
    result.archive.xi = result.config.xi;
    for (const auto& row : j.at("archive")) {
        ArchiveSolution s;
        s.x = row.at("x").get<std::vector<double>>();
        s.objectives = row.at("objectives").get<ObjectiveVector>();
        s.normalized = row.at("normalized").get<ObjectiveVector>();
        s.violation = row.at("violation").get<double>();
        s.front = row.at("front").get<std::size_t>();
        s.strength = row.at("strength").get<std::size_t>();
        s.weakness = row.at("weakness").get<std::size_t>();
        s.birth = row.at("birth").get<std::size_t>();
        result.archive.solutions.push_back(std::move(s));
    }
    result.best_compromise = j.at("best_compromise").get<std::vector<std::size_t>>();
    for (const auto& t : j.at("trace")) {
        TracePoint point;
        point.iteration = t.at("iteration").get<std::size_t>();
        point.front_histogram = t.at("front_histogram").get<std::vector<std::size_t>>();
        point.best_weakness = t.at("best_weakness").get<std::size_t>();
        point.best_strength = t.at("best_strength").get<std::size_t>();
        result.trace.push_back(std::move(point));
    }
    return result;
}

void save_run_result(const std::string& path, const RunResult& result) {
    write_file_atomic(path, run_result_to_json(result));
}

RunResult load_run_result(const std::string& path) {
    return run_result_from_json(read_file(path));
}

const char* const kResultsHeader =
    "problem,m,dm,algorithm,seed,min_euclid,avg_euclid,min_cheby,avg_cheby,"
    "evaluations,wall_ms";

std::string result_row_to_csv(const ResultRow& row) {
    std::ostringstream out;
    out << row.problem_id << ',' << row.n_obj << ',' << row.dm_id << ','
        << row.algorithm << ',' << row.seed << ',' << format_real(row.block.min_euclid)
        << ',' << format_real(row.block.avg_euclid) << ','
        << format_real(row.block.min_cheby) << ',' << format_real(row.block.avg_cheby)
        << ',' << row.evaluations << ',' << row.wall_ms;
    return out.str();
}

CsvReadOutcome read_results_csv(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty results file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (hash_text(line) != hash_text(kResultsHeader)) {
        throw std::runtime_error("results schema mismatch in " + path);
    }

    CsvReadOutcome outcome;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 11) {
            outcome.skipped.push_back("line " + std::to_string(line_no) +
                                      ": expected 11 fields, got " +
                                      std::to_string(fields.size()));
            continue;
        }
        try {
            ResultRow row;
            row.problem_id = fields[0];
            row.n_obj = parse_unsigned(fields[1]);
            row.dm_id = fields[2];
            row.algorithm = fields[3];
            row.seed = parse_unsigned(fields[4]);
            row.block.min_euclid = parse_real(fields[5]);
            row.block.avg_euclid = parse_real(fields[6]);
            row.block.min_cheby = parse_real(fields[7]);
            row.block.avg_cheby = parse_real(fields[8]);
            row.evaluations = parse_unsigned(fields[9]);
            row.wall_ms = parse_unsigned(fields[10]);
            outcome.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            outcome.skipped.push_back("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return outcome;
}

} // namespace ioaco
