#pragma once

#include <json.hpp>

#include "strat/space.hpp"

namespace strat {

// SSD document: {"space": <expr>} with <expr> one of
//   {"atom": "NAME"}                                  -- shipped atom
//   {"atom": {"name", "vertices", "facets", "strata"?}}
//   {"cone": e} | {"susp": e} | {"join": [e, e]} | {"prod": [e, e]}
DescPtr parse_ssd_json(const nlohmann::json& j);
DescPtr parse_ssd_text(const std::string& text);
DescPtr parse_ssd_file(const std::string& path);

// FNV-1a over the canonical dump; deterministic for a fixed input
std::string input_digest(const nlohmann::json& input);

struct Report {
    std::string command;
    std::string digest;
    nlohmann::json input_echo;
    nlohmann::json payload;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

// CLI entry point: subcommands homology, ih, witt, signature, resolve,
// orient-check. Exit 0 on success, 1 on validation failure, 2 on an
// internal error.
int run_cli(int argc, const char* const* argv);

}  // namespace strat
