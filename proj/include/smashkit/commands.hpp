#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "smashkit/permgrp.hpp"

namespace smashkit::commands {

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t oracle_dim_cap = 256;  ///< Wedderburn cross-check runs at or below this dimension
  std::size_t hopf_dim_cap = 64;
  std::size_t algebra_dim_cap = 2000;
  perm::Caps caps;
};

/// Report JSON plus whether any check failed.
struct CommandResult {
  std::string json;
  bool mismatch = false;
};

CommandResult run_pgl(std::uint64_t q, const RunConfig& cfg);

/// spec: {"degree": n, "G": [cycles...], "L": [...], "F": [...]}
CommandResult run_bismash(std::string_view spec, const RunConfig& cfg);

/// name: "agl1-<q>" or "heis7-z3"
CommandResult run_frobenius(std::string_view name, const RunConfig& cfg);
/// spec: {"degree": n, "G": [...], "N": [...], "H": [...]}; "L"/"F" accepted for N/H.
CommandResult run_frobenius_spec(std::string_view spec, const RunConfig& cfg);

/// Every prime power in [lo, hi]; an empty range gives an empty report.
CommandResult run_screen(std::uint64_t lo, std::uint64_t hi, const RunConfig& cfg);

/// |N(S)| for the Singer subgroup S of GL_n(2), n in {2, 3, 4}.
CommandResult run_singer(unsigned n, const RunConfig& cfg);

/// Decomposes an algebra given in the structure-constant JSON format.
CommandResult run_decompose(std::string_view algebra_json, const RunConfig& cfg);

/// Structure-constant JSON of k^C # kS for PGL_2(q), or of a spec file.
std::string export_pgl_algebra(std::uint64_t q, const RunConfig& cfg);
std::string export_spec_algebra(std::string_view spec, const RunConfig& cfg);

/// Human-readable rendering of any report produced above.
std::string render_table(std::string_view report_json);

}  // namespace smashkit::commands
