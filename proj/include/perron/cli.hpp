#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "perron/conebuild.hpp"
#include "perron/matana.hpp"
#include "perron/report.hpp"
#include "perron/searchdpf.hpp"

namespace perron {

struct RunConfig {
    std::string command;
    std::string polynomial;
    ConeMode mode = ConeMode::Adaptive;
    // "ones" or "optimize:<iterations>"
    std::string alpha = "ones";
    long double shrink_floor = 1e-3L;
    std::uint64_t budget = 100000000;
    unsigned precision = 4096;
    std::optional<std::string> basis_file;
    std::optional<std::string> out_dir;
    std::uint64_t seed = 0;
    bool assume_irreducible = false;
    bool primitive = false;
    int n_max = 4;
    SearchMode search_mode = SearchMode::Primitive;
    DotStyle dot_style = DotStyle::Labels;
    bool text = false;
    std::optional<std::string> certificate_path;
    std::optional<std::string> matrix_path;
};

// Inputs that determine the outputs; paths are left out so runs into
// different directories stay byte-identical.
Json config_json(const RunConfig& config);

int cmd_analyze(const RunConfig& config, std::ostream& out);
int cmd_construct(const RunConfig& config, std::ostream& out);
int cmd_bound(const RunConfig& config, std::ostream& out);
int cmd_search(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);

// Dispatches on config.command; library errors become a JSON diagnostic on
// `err` and the matching exit code.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace perron
