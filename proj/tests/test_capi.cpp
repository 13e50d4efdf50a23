// Exercises the shared library through its C header only.
#include <string>
#include <vector>

#include "doctest.h"
#include "smashkit/smashkit.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { sk_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

sk_group* make_group(size_t degree, std::vector<const char*> gens) {
  sk_group* g = nullptr;
  REQUIRE(sk_group_create(degree, gens.data(), gens.size(), nullptr, &g) == SK_OK);
  return g;
}

}  // namespace

TEST_CASE("config defaults") {
  sk_config cfg;
  sk_config_init(&cfg);
  CHECK(cfg.seed == 0);
  CHECK(cfg.oracle_dim_cap == 256);
  CHECK(cfg.hopf_dim_cap == 64);
  CHECK(cfg.algebra_dim_cap == 2000);
  CHECK(cfg.order_cap == 1000000);
  CHECK(cfg.enumeration_cap == 100000);
  CHECK(std::string(sk_status_name(SK_MISMATCH)) == "mismatch");
}

TEST_CASE("groups, factorization and dimensions") {
  sk_group* s3 = make_group(3, {"(1 2 3)", "(1 2)"});
  sk_group* a3 = make_group(3, {"(1 2 3)"});
  sk_group* c2 = make_group(3, {"(1 2)"});
  uint64_t order = 0;
  CHECK(sk_group_order(s3, &order) == SK_OK);
  CHECK(order == 6);
  int member = -1;
  CHECK(sk_group_contains(a3, "(1 2)", &member) == SK_OK);
  CHECK(member == 0);
  CHECK(sk_group_contains(s3, "(1 3)", &member) == SK_OK);
  CHECK(member == 1);
  CHECK(sk_group_contains(s3, "(1 3", &member) == SK_ERR_PARSE);
  CHECK(std::string(sk_last_error()).find("offset 4") != std::string::npos);

  sk_factorized* fg = nullptr;
  CHECK(sk_factorize(s3, a3, a3, &fg) == SK_ERR_NOT_FACTORIZED);
  CHECK(fg == nullptr);
  REQUIRE(sk_factorize(s3, a3, c2, &fg) == SK_OK);

  size_t count = 0;
  CHECK(sk_kmm_dimensions(fg, nullptr, 0, &count) == SK_OK);
  CHECK(count == 3);
  std::vector<uint64_t> dims(count);
  CHECK(sk_kmm_dimensions(fg, dims.data(), dims.size(), &count) == SK_OK);
  CHECK(dims == std::vector<uint64_t>{1, 1, 2});

  sk_algebra* a = nullptr;
  REQUIRE(sk_build_algebra(fg, nullptr, &a) == SK_OK);
  uint64_t dim = 0;
  CHECK(sk_algebra_dim(a, &dim) == SK_OK);
  CHECK(dim == 6);
  std::vector<uint64_t> deg(8);
  CHECK(sk_decompose(a, 3, deg.data(), deg.size(), &count) == SK_OK);
  deg.resize(count);
  CHECK(deg == std::vector<uint64_t>{1, 1, 2});

  Owned json;
  CHECK(sk_algebra_to_json(a, &json.p) == SK_OK);
  sk_algebra* b = nullptr;
  REQUIRE(sk_algebra_from_json(json.p, &b) == SK_OK);
  Owned json2;
  CHECK(sk_algebra_to_json(b, &json2.p) == SK_OK);
  CHECK(json.str() == json2.str());

  sk_algebra_free(b);
  sk_algebra_free(a);
  sk_factorized_free(fg);
  sk_group_free(c2);
  sk_group_free(a3);
  sk_group_free(s3);
}

TEST_CASE("null handles are rejected") {
  uint64_t order = 0;
  CHECK(sk_group_order(nullptr, &order) == SK_ERR_INVALID_ARGUMENT);
  CHECK(sk_run_pgl(3, nullptr, nullptr) == SK_ERR_INVALID_ARGUMENT);
  sk_group* g = nullptr;
  CHECK(sk_group_create(3, nullptr, 1, nullptr, &g) == SK_ERR_INVALID_ARGUMENT);
  sk_group_free(nullptr);
  sk_string_free(nullptr);
}

TEST_CASE("command runners") {
  Owned r;
  CHECK(sk_run_pgl(3, nullptr, &r.p) == SK_OK);
  CHECK(r.str().find("\"dims\": [\n    1,\n    1,\n    2,\n    3,\n    3\n  ]") != std::string::npos);
  CHECK(r.str().find("\"verdict\": \"match\"") != std::string::npos);

  Owned bad;
  CHECK(sk_run_pgl(6, nullptr, &bad.p) == SK_ERR_INVALID_ARGUMENT);
  CHECK(bad.p == nullptr);

  sk_config cfg;
  sk_config_init(&cfg);
  cfg.enumeration_cap = 100;
  Owned capped;
  CHECK(sk_run_pgl(7, &cfg, &capped.p) == SK_ERR_CAP_EXCEEDED);

  Owned t;
  CHECK(sk_render_table(r.p, &t.p) == SK_OK);
  CHECK(t.str().find("verdict  match") != std::string::npos);

  Owned f;
  CHECK(sk_run_frobenius("agl1-7", nullptr, &f.p) == SK_OK);
  Owned nf;
  CHECK(sk_run_frobenius_spec(
            R"js({"degree": 7, "G": ["(1 2 3 4 5)", "(6 7)"], "N": ["(1 2 3 4 5)"], "H": ["(6 7)"]})js", nullptr,
            &nf.p) == SK_ERR_NOT_FROBENIUS);
  Owned unk;
  CHECK(sk_run_frobenius("heis5", nullptr, &unk.p) == SK_ERR_INVALID_ARGUMENT);

  Owned s;
  CHECK(sk_run_screen(2, 9, nullptr, &s.p) == SK_OK);
  CHECK(s.str().find("\"realizable\": [\n      2,\n      3\n    ]") != std::string::npos);

  Owned sg;
  CHECK(sk_run_singer(3, nullptr, &sg.p) == SK_OK);
  CHECK(sg.str().find("\"normalizer_order\": 21") != std::string::npos);

  Owned parse;
  CHECK(sk_run_bismash("{\"degree\": 3,", nullptr, &parse.p) == SK_ERR_PARSE);
  CHECK(std::string(sk_last_error()).find("offset") != std::string::npos);
}

TEST_CASE("reports are deterministic for a fixed config") {
  sk_config cfg;
  sk_config_init(&cfg);
  cfg.seed = 42;
  Owned a, b;
  CHECK(sk_run_pgl(4, &cfg, &a.p) == SK_OK);
  CHECK(sk_run_pgl(4, &cfg, &b.p) == SK_OK);
  CHECK(a.str() == b.str());
}
