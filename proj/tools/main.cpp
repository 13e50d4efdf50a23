// smashkit command-line front end. Talks to the library only through the C API.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "smashkit/smashkit.h"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kCap = 3 };

int exit_code(sk_status s) {
  switch (s) {
    case SK_OK: return kOk;
    case SK_MISMATCH:
    case SK_ERR_ALGEBRA:
    case SK_ERR_INTERNAL: return kMismatch;
    case SK_ERR_CAP_EXCEEDED: return kCap;
    default: return kUsage;
  }
}

struct Range {
  std::uint64_t from = 0, to = 0;
};

std::optional<Range> parse_range(const std::string& text) {
  auto number = [](const std::string& s, std::uint64_t& out) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) return false;
    out = std::stoull(s);
    return true;
  };
  Range r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    if (!number(text, r.from)) return std::nullopt;
    r.to = r.from;
    return r;
  }
  if (!number(text.substr(0, dots), r.from) || !number(text.substr(dots + 2), r.to)) return std::nullopt;
  return r;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bismash products of factorized groups: simple-module dimensions and structure checks"};
  app.require_subcommand(1);
  app.fallthrough();

  sk_config cfg;
  sk_config_init(&cfg);
  std::string format = "table";
  app.add_option("--seed", cfg.seed, "random seed for the Wedderburn oracle")->capture_default_str();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  app.add_option("--dim-cap", cfg.oracle_dim_cap, "largest dimension for the Wedderburn cross-check")
      ->capture_default_str();
  app.add_option("--hopf-cap", cfg.hopf_dim_cap, "largest dimension for the Hopf axiom suite")->capture_default_str();

  std::uint64_t q = 0;
  auto* pgl = app.add_subcommand("pgl", "bismash product of PGL_2(q) = S C");
  pgl->add_option("--q", q, "prime power")->required();

  std::string spec;
  auto* bis = app.add_subcommand("bismash", "bismash product from a factorized-group spec file");
  bis->add_option("--spec", spec, "JSON {\"degree\", \"G\", \"L\", \"F\"}")->required();

  std::string family;
  auto* frob = app.add_subcommand("frobenius", "Frobenius group N x| H with L = N, F = H");
  frob->add_option("name", family, "agl1-<q> or heis7-z3");
  frob->add_option("--spec", spec, "JSON {\"degree\", \"G\", \"N\", \"H\"}");

  std::string qrange, range;
  auto* scr = app.add_subcommand("screen", "arithmetic screen of the PGL_2(q) degree pattern");
  scr->add_option("--q", qrange, "q or A..B");
  scr->add_option("--range", range, "A..B");

  unsigned n = 0;
  auto* sing = app.add_subcommand("singer", "Singer normalizer in GL_n(2)");
  sing->add_option("--n", n, "2, 3 or 4")->required();

  auto* dec = app.add_subcommand("decompose", "Wedderburn decomposition of a structure-constant algebra");
  dec->add_option("--spec", spec, "algebra JSON {dim, prime, entries, unit}")->required();

  auto* exp = app.add_subcommand("export-algebra", "write structure constants as JSON");
  exp->add_option("--q", q, "PGL_2(q) package");
  exp->add_option("--spec", spec, "factorized-group spec file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  std::string spec_text;
  if (!spec.empty()) {
    auto text = read_file(spec);
    if (!text) return usage_error("cannot read " + spec);
    spec_text = std::move(*text);
  }

  char* out = nullptr;
  sk_status status = SK_OK;
  bool is_report = true;
  if (pgl->parsed()) {
    status = sk_run_pgl(q, &cfg, &out);
  } else if (bis->parsed()) {
    status = sk_run_bismash(spec_text.c_str(), &cfg, &out);
  } else if (frob->parsed()) {
    if (family.empty() == spec.empty()) return usage_error("frobenius needs exactly one of NAME or --spec");
    status = family.empty() ? sk_run_frobenius_spec(spec_text.c_str(), &cfg, &out)
                            : sk_run_frobenius(family.c_str(), &cfg, &out);
  } else if (scr->parsed()) {
    if (qrange.empty() == range.empty()) return usage_error("screen needs exactly one of --q or --range");
    const auto r = parse_range(qrange.empty() ? range : qrange);
    if (!r) return usage_error("malformed range \"" + (qrange.empty() ? range : qrange) + "\"");
    status = sk_run_screen(r->from, r->to, &cfg, &out);
  } else if (sing->parsed()) {
    status = sk_run_singer(n, &cfg, &out);
  } else if (dec->parsed()) {
    status = sk_run_decompose(spec_text.c_str(), &cfg, &out);
  } else if (exp->parsed()) {
    if ((q == 0) == spec.empty()) return usage_error("export-algebra needs exactly one of --q or --spec");
    status = q ? sk_export_pgl_algebra(q, &cfg, &out) : sk_export_spec_algebra(spec_text.c_str(), &cfg, &out);
    is_report = false;
  }

  if (out) {
    if (is_report && format == "table") {
      char* table = nullptr;
      if (sk_render_table(out, &table) != SK_OK) {
        std::cerr << "error: " << sk_last_error() << "\n";
        sk_string_free(out);
        return kMismatch;
      }
      std::fputs(table, stdout);
      sk_string_free(table);
    } else {
      std::fputs(out, stdout);
    }
    sk_string_free(out);
  }
  if (status != SK_OK) std::cerr << "error: " << sk_status_name(status) << ": " << sk_last_error() << "\n";
  return exit_code(status);
}
