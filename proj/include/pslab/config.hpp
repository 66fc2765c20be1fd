#pragma once

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "pslab/base.hpp"
#include "pslab/sieve.hpp"

namespace pslab {

enum class output_format { csv, json };

// Runtime knobs shared by every command.  Sources, lowest to highest
// precedence: built-in defaults, the PSLAB_THREADS environment variable, a
// JSON config file, explicit command-line flags.  The CLI applies flag
// overrides itself after calling load_* below.
struct run_config {
    unsigned threads = 0;  // 0 = pick hardware concurrency at resolve time
    double epsilon = 0.01;
    double eta = 0.05;
    double slack = 10.0;
    u64 seed = 1;
    u64 segment_size = default_segment_size;
    std::string output_path;  // empty = stdout
    output_format format = output_format::csv;

    unsigned resolved_threads() const {
        if (threads > 0) return threads;
        unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? hw : 1;
    }

    void validate() const {
        if (!(epsilon > 0 && epsilon <= 0.1))
            throw std::invalid_argument("epsilon must be in (0, 0.1]");
        if (!(eta > 0 && eta <= 0.5))
            throw std::invalid_argument("eta must be in (0, 0.5]");
        if (!(slack >= 1))
            throw std::invalid_argument("slack must be >= 1");
        if (segment_size < 64)
            throw std::invalid_argument("segment_size must be >= 64");
    }
};

inline output_format parse_format(const std::string& s) {
    if (s == "csv") return output_format::csv;
    if (s == "json") return output_format::json;
    throw std::invalid_argument("format must be csv or json");
}

inline void apply_environment(run_config& cfg) {
    if (const char* env = std::getenv("PSLAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) cfg.threads = static_cast<unsigned>(v);
    }
}

inline void apply_config_file(run_config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    if (j.contains("threads")) cfg.threads = j.at("threads").get<unsigned>();
    if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
    if (j.contains("eta")) cfg.eta = j.at("eta").get<double>();
    if (j.contains("slack")) cfg.slack = j.at("slack").get<double>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<u64>();
    if (j.contains("segment_size")) cfg.segment_size = j.at("segment_size").get<u64>();
    if (j.contains("output_path")) cfg.output_path = j.at("output_path").get<std::string>();
    if (j.contains("format")) cfg.format = parse_format(j.at("format").get<std::string>());
}

}  // namespace pslab
