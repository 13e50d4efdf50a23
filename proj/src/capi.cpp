#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "smashkit/bismash.hpp"
#include "smashkit/commands.hpp"
#include "smashkit/error.hpp"
#include "smashkit/smashkit.h"
#include "smashkit/wedderburn.hpp"

using namespace smashkit;

struct sk_group {
  perm::Group group;
};

struct sk_factorized {
  bismash::FactorizedGroup fg;
};

struct sk_algebra {
  wedderburn::StructureConstantAlgebra algebra;
};

namespace {

thread_local std::string g_last_error;

sk_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ContextMismatch:
    case ErrorCode::DivisionByZero:
    case ErrorCode::NotNormal:
    case ErrorCode::NotAbelian: return SK_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return SK_ERR_PARSE;
    case ErrorCode::CapExceeded: return SK_ERR_CAP_EXCEEDED;
    case ErrorCode::NotFactorized: return SK_ERR_NOT_FACTORIZED;
    case ErrorCode::NotFrobenius: return SK_ERR_NOT_FROBENIUS;
    case ErrorCode::NotNilpotent:
    case ErrorCode::Decomposition: return SK_ERR_ALGEBRA;
    case ErrorCode::Mismatch: return SK_MISMATCH;
    case ErrorCode::Internal: return SK_ERR_INTERNAL;
  }
  return SK_ERR_INTERNAL;
}

template <class Fn>
sk_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SK_ERR_INTERNAL;
  }
}

sk_status null_arg(const char* name) {
  g_last_error = std::string("null argument: ") + name;
  return SK_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

commands::RunConfig to_run_config(const sk_config* cfg) {
  sk_config c;
  sk_config_init(&c);
  if (cfg) c = *cfg;
  commands::RunConfig r;
  r.seed = c.seed;
  r.oracle_dim_cap = c.oracle_dim_cap;
  r.hopf_dim_cap = c.hopf_dim_cap;
  r.algebra_dim_cap = c.algebra_dim_cap;
  r.caps.order = c.order_cap;
  r.caps.enumeration = c.enumeration_cap;
  return r;
}

sk_status emit(const commands::CommandResult& res, char** report) {
  *report = dup_string(res.json);
  if (res.mismatch) {
    g_last_error = "one or more checks failed";
    return SK_MISMATCH;
  }
  return SK_OK;
}

sk_status copy_degrees(const DegreeMultiset& d, uint64_t* out, size_t capacity, size_t* count) {
  *count = d.size();
  for (size_t i = 0; i < d.size() && i < capacity && out; ++i) out[i] = d.values()[i];
  return SK_OK;
}

}  // namespace

extern "C" {

void sk_config_init(sk_config* cfg) {
  if (!cfg) return;
  const commands::RunConfig d;
  cfg->seed = d.seed;
  cfg->oracle_dim_cap = d.oracle_dim_cap;
  cfg->hopf_dim_cap = d.hopf_dim_cap;
  cfg->algebra_dim_cap = d.algebra_dim_cap;
  cfg->order_cap = d.caps.order;
  cfg->enumeration_cap = d.caps.enumeration;
}

const char* sk_version(void) { return "0.1.0"; }

const char* sk_status_name(sk_status status) {
  switch (status) {
    case SK_OK: return "ok";
    case SK_MISMATCH: return "mismatch";
    case SK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SK_ERR_PARSE: return "parse error";
    case SK_ERR_CAP_EXCEEDED: return "cap exceeded";
    case SK_ERR_NOT_FACTORIZED: return "not an exact factorization";
    case SK_ERR_NOT_FROBENIUS: return "not a Frobenius group";
    case SK_ERR_ALGEBRA: return "algebra error";
    case SK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* sk_last_error(void) { return g_last_error.c_str(); }

void sk_string_free(char* s) { std::free(s); }

sk_status sk_group_create(size_t degree, const char* const* generators, size_t count, const sk_config* cfg,
                          sk_group** out) {
  if (!out) return null_arg("out");
  if (count > 0 && !generators) return null_arg("generators");
  return guarded([&] {
    std::vector<perm::Permutation> gens;
    for (size_t i = 0; i < count; ++i) {
      if (!generators[i]) return null_arg("generator string");
      gens.push_back(perm::Permutation::parse_cycles(generators[i], degree));
    }
    const auto rc = to_run_config(cfg);
    *out = new sk_group{perm::Group::from_generators(degree, std::move(gens), rc.caps)};
    return SK_OK;
  });
}

void sk_group_free(sk_group* g) { delete g; }

sk_status sk_group_order(const sk_group* g, uint64_t* out) {
  if (!g) return null_arg("group");
  if (!out) return null_arg("out");
  *out = g->group.order();
  return SK_OK;
}

sk_status sk_group_contains(const sk_group* g, const char* cycles, int* out) {
  if (!g) return null_arg("group");
  if (!cycles) return null_arg("cycles");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = g->group.contains(perm::Permutation::parse_cycles(cycles, g->group.degree())) ? 1 : 0;
    return SK_OK;
  });
}

sk_status sk_factorize(const sk_group* g, const sk_group* l, const sk_group* f, sk_factorized** out) {
  if (!g || !l || !f) return null_arg("group");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new sk_factorized{bismash::FactorizedGroup::create(g->group, l->group, f->group)};
    return SK_OK;
  });
}

void sk_factorized_free(sk_factorized* fg) { delete fg; }

sk_status sk_kmm_dimensions(const sk_factorized* fg, uint64_t* dims, size_t capacity, size_t* count) {
  if (!fg) return null_arg("factorized group");
  if (!count) return null_arg("count");
  return guarded([&] { return copy_degrees(bismash::kmm_dimensions(fg->fg).dims, dims, capacity, count); });
}

sk_status sk_build_algebra(const sk_factorized* fg, const sk_config* cfg, sk_algebra** out) {
  if (!fg) return null_arg("factorized group");
  if (!out) return null_arg("out");
  return guarded([&] {
    const auto rc = to_run_config(cfg);
    *out = new sk_algebra{bismash::build_algebra(fg->fg, bismash::MutualActions(fg->fg), bismash::oracle_prime(fg->fg),
                                                 rc.algebra_dim_cap)};
    return SK_OK;
  });
}

sk_status sk_algebra_from_json(const char* json, sk_algebra** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new sk_algebra{wedderburn::algebra_from_json(json)};
    return SK_OK;
  });
}

sk_status sk_algebra_to_json(const sk_algebra* a, char** out) {
  if (!a) return null_arg("algebra");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup_string(wedderburn::to_json(a->algebra));
    return SK_OK;
  });
}

sk_status sk_algebra_dim(const sk_algebra* a, uint64_t* out) {
  if (!a) return null_arg("algebra");
  if (!out) return null_arg("out");
  *out = a->algebra.dim();
  return SK_OK;
}

void sk_algebra_free(sk_algebra* a) { delete a; }

sk_status sk_decompose(const sk_algebra* a, uint64_t seed, uint64_t* degrees, size_t capacity, size_t* count) {
  if (!a) return null_arg("algebra");
  if (!count) return null_arg("count");
  return guarded([&] { return copy_degrees(wedderburn::decompose(a->algebra, seed).degrees, degrees, capacity, count); });
}

sk_status sk_run_pgl(uint64_t q, const sk_config* cfg, char** report) {
  if (!report) return null_arg("report");
  return guarded([&] { return emit(commands::run_pgl(q, to_run_config(cfg)), report); });
}

sk_status sk_run_bismash(const char* spec_json, const sk_config* cfg, char** report) {
  if (!spec_json) return null_arg("spec");
  if (!report) return null_arg("report");
  return guarded([&] { return emit(commands::run_bismash(spec_json, to_run_config(cfg)), report); });
}

sk_status sk_run_frobenius(const char* name, const sk_config* cfg, char** report) {
  if (!name) return null_arg("name");
  if (!report) return null_arg("report");
  return guarded([&] { return emit(commands::run_frobenius(name, to_run_config(cfg)), report); });
}

sk_status sk_run_frobenius_spec(const char* spec_json, const sk_config* cfg, char** report) {
  if (!spec_json) return null_arg("spec");
  if (!report) return null_arg("report");
  return guarded([&] { return emit(commands::run_frobenius_spec(spec_json, to_run_config(cfg)), report); });
}

sk_status sk_run_screen(uint64_t q_from, uint64_t q_to, const sk_config* cfg, char** report) {
  if (!report) return null_arg("report");
  return guarded([&] { return emit(commands::run_screen(q_from, q_to, to_run_config(cfg)), report); });
}

sk_status sk_run_singer(unsigned n, const sk_config* cfg, char** report) {
  if (!report) return null_arg("report");
  return guarded([&] { return emit(commands::run_singer(n, to_run_config(cfg)), report); });
}

sk_status sk_run_decompose(const char* algebra_json, const sk_config* cfg, char** report) {
  if (!algebra_json) return null_arg("algebra json");
  if (!report) return null_arg("report");
  return guarded([&] { return emit(commands::run_decompose(algebra_json, to_run_config(cfg)), report); });
}

sk_status sk_export_pgl_algebra(uint64_t q, const sk_config* cfg, char** json) {
  if (!json) return null_arg("json");
  return guarded([&] {
    *json = dup_string(commands::export_pgl_algebra(q, to_run_config(cfg)));
    return SK_OK;
  });
}

sk_status sk_export_spec_algebra(const char* spec_json, const sk_config* cfg, char** json) {
  if (!spec_json) return null_arg("spec");
  if (!json) return null_arg("json");
  return guarded([&] {
    *json = dup_string(commands::export_spec_algebra(spec_json, to_run_config(cfg)));
    return SK_OK;
  });
}

sk_status sk_render_table(const char* report_json, char** out) {
  if (!report_json) return null_arg("report");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = dup_string(commands::render_table(report_json));
    return SK_OK;
  });
}

}  // extern "C"
