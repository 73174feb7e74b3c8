#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "orbisect/errors.hpp"
#include "orbisect/io.hpp"
#include "orbisect/models.hpp"

using namespace orbisect;
using nlohmann::json;

namespace {

std::string fx(const char* name) {
  return std::string(ORBISECT_FIXTURES_DIR) + "/" + name;
}

io::InputStamp test_stamp(const std::string& gamma_token) {
  io::InputStamp st;
  st.space_path = "space.json";
  st.space_hash = io::sha256_hex("space");
  st.group_path = "group.json";
  st.group_hash = io::sha256_hex("group");
  if (!gamma_token.empty()) {
    auto g = io::parse_gamma(gamma_token);
    st.gamma_name = g.presentation.name;
    st.gamma_path = g.path;
    st.gamma_hash = g.hash;
  }
  return st;
}

}  // namespace

TEST_CASE("sha256 test vectors") {
  CHECK(io::sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(io::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(io::sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
  CHECK(io::sha256_hex("abcdefghbcdefghicdefghijdefghijkefghijklfghijklmghijklmnhijklmno"
                       "ijklmnopjklmnopqklmnopqrlmnopqrsmnopqrstnopqrstu") ==
        "cf5b16a778af8380036ce59e7b0492370b249b11e8f07a51afac45037afee9d1");
  // 55 and 56 bytes straddle the padding boundary.
  CHECK(io::sha256_hex(std::string(55, 'a')) ==
        "9f4390f8d30c2dd92ec9f095b65e2b9ae9b0a925a5258e241c9f1e910f734318");
  CHECK(io::sha256_hex(std::string(56, 'a')) ==
        "b35439a4ac6f0948b6d6f9e3c6af0f5f590ce20f1bde7090ef7970686ec6738a");
}

TEST_CASE("file roundtrip") {
  const std::string path = "io_roundtrip_tmp.json";
  io::write_file_atomic(path, "first\n");
  CHECK(io::read_file(path) == "first\n");
  io::write_file_atomic(path, "second\n");
  CHECK(io::read_file(path) == "second\n");
  std::remove(path.c_str());

  CHECK_THROWS_AS(io::read_file("does_not_exist_am7q.json"), InputError);
  CHECK_THROWS_AS(io::write_file_atomic("no_such_dir_am7q/x.json", "x"), InputError);
}

TEST_CASE("group files") {
  auto z3 = io::group_from_json(io::read_file(fx("z3.json")));
  CHECK(z3.order() == 3);
  CHECK(z3.label(1) == "r");

  auto s3 = io::group_from_json(io::read_file(fx("s3.json")));
  CHECK(s3.order() == 6);
  CHECK(s3.label(3) == "(012)");

  auto table = io::group_from_json(R"({"table": [[0,1],[1,0]]})");
  CHECK(table.order() == 2);
  CHECK_FALSE(table.from_permutation_form());
  CHECK_NOTHROW(io::group_from_json(R"({"order": 2, "table": [[0,1],[1,0]]})"));

  CHECK_THROWS_AS(io::group_from_json("not json"), InputError);
  CHECK_THROWS_AS(io::group_from_json("{}"), InputError);
  CHECK_THROWS_AS(io::group_from_json(R"({"order": 3, "table": [[0,1],[1,0]]})"), InputError);
  CHECK_THROWS_AS(io::group_from_json(R"({"degree": 2})"), InputError);
  CHECK_THROWS_AS(io::group_from_json(R"({"table": [[0,1],[1,0]], "labels": ["e"]})"),
                  InputError);
}

TEST_CASE("complex files") {
  auto z3 = io::group_from_json(io::read_file(fx("z3.json")));
  auto football = io::complex_from_json(io::read_file(fx("football.json")), z3);
  CHECK(football.complex.num_vertices == 5);
  CHECK(football.complex.simplices.size() == 20);
  CHECK(is_admissible(football));

  auto s3 = io::group_from_json(io::read_file(fx("s3.json")));
  auto cone = io::complex_from_json(io::read_file(fx("s3model.json")), s3);
  CHECK(cone.complex.num_vertices == 9);
  CHECK(euler_characteristic(cone.complex) == 3);

  // Element-indexed action with a table-built group.
  auto c2 = io::group_from_json(R"({"table": [[0,1],[1,0]]})");
  const char* swap_text =
      R"({"vertices": 2, "maximal_simplices": [[0,1]],
          "action": {"elements": [[0,1],[1,0]]}})";
  auto sw = io::complex_from_json(swap_text, c2);
  CHECK(sw.complex.num_vertices == 2);
  CHECK_FALSE(is_admissible(sw));

  // Generator-indexed actions need a permutation-built group.
  const char* gen_text =
      R"({"vertices": 2, "maximal_simplices": [[0,1]], "action": {"generators": [[1,0]]}})";
  CHECK_THROWS_AS(io::complex_from_json(gen_text, c2), InputError);
  CHECK_THROWS_AS(io::complex_from_json(R"({"vertices": 1, "maximal_simplices": []})", c2),
                  InputError);
  CHECK_THROWS_AS(io::complex_from_json("[]", c2), InputError);
}

TEST_CASE("presentation files and gamma tokens") {
  auto zk2 = io::presentation_from_json(io::read_file(fx("zk2.json")));
  CHECK(zk2.num_generators == 2);
  CHECK(zk2.relators == std::vector<std::vector<int>>{{1, 2, -1, -2}});
  CHECK(zk2.name == "Z^2");
  CHECK_THROWS_AS(io::presentation_from_json(R"({"relators": []})"), InputError);
  CHECK_THROWS_AS(io::presentation_from_json(R"({"generators": 1, "relators": [[5]]})"),
                  InputError);

  auto z = io::parse_gamma("Z");
  CHECK(z.presentation.name == "Z");
  CHECK(z.path.empty());
  CHECK(z.hash.size() == 64);

  // All spellings of the same builtin stamp identically.
  CHECK(io::parse_gamma("Z2").hash == io::parse_gamma("Z^2").hash);
  CHECK(io::parse_gamma("Zk:2").hash == io::parse_gamma("Z^2").hash);
  CHECK(io::parse_gamma("F2").hash == io::parse_gamma("Fk:2").hash);
  CHECK(io::parse_gamma("C3").hash == io::parse_gamma("C:3").hash);
  CHECK(io::parse_gamma("D4").hash == io::parse_gamma("D:4").hash);
  CHECK(io::parse_gamma("C3").hash != io::parse_gamma("C4").hash);

  // Rank one free group is the integers, including its stamp.
  CHECK(io::parse_gamma("F1").presentation.name == "Z");
  CHECK(io::parse_gamma("F1").hash == io::parse_gamma("Z").hash);
  CHECK(io::parse_gamma("Z1").hash == io::parse_gamma("Z").hash);

  // File form: stamped by the file bytes.
  auto from_file = io::parse_gamma(fx("zk2.json"));
  CHECK(from_file.presentation.num_generators == 2);
  CHECK(from_file.path == fx("zk2.json"));
  CHECK(from_file.hash == io::sha256_hex(io::read_file(fx("zk2.json"))));
  CHECK(from_file.hash != io::parse_gamma("Z^2").hash);

  CHECK_THROWS_AS(io::parse_gamma("Q7"), InputError);   // not builtin, not a file
  CHECK_THROWS_AS(io::parse_gamma("Z0"), InputError);
}

TEST_CASE("sector report shape and determinism") {
  auto m = football_model();
  auto d = gamma_sectors(m.space, presentation::integers());
  auto classes = classify_homs(enumerate_homs(presentation::integers(), *m.group));
  auto st = test_stamp("Z");

  auto text = io::sector_report(st, d, classes, true);
  CHECK(text.back() == '\n');
  CHECK(io::sector_report(st, d, classes, true) == text);

  auto j = json::parse(text);
  CHECK(j.at("tool") == "orbisect");
  CHECK(j.at("report") == "sectors");
  CHECK(j.at("gamma") == "Z");
  CHECK(j.at("inputs").at("space").at("path") == "space.json");
  CHECK(j.at("inputs").at("gamma").at("name") == "Z");
  CHECK_FALSE(j.at("inputs").at("gamma").contains("path"));
  REQUIRE(j.at("coarse").size() == 3);
  CHECK(j.at("coarse")[0].at("rep") == json::array({0}));
  CHECK(j.at("coarse")[0].at("centralizer_order") == 3);
  CHECK(j.at("coarse")[0].at("fixed_cells") == json::array({5, 9, 6}));
  CHECK(j.at("coarse")[1].at("fixed_cells") == json::array({2}));
  REQUIRE(j.at("refined").size() == 5);
  CHECK(j.at("refined")[0].at("chi") == 2);
  CHECK(j.at("refined")[1].at("projection") == json::array({0}));
  CHECK(j.at("poset").size() == 5);
  CHECK(j.at("diagnostics").at("subdivisions") == 0);
  CHECK(j.at("diagnostics").at("hom_count") == 3);
  CHECK(j.at("diagnostics").at("hom_classes").size() == 3);
  CHECK(j.at("diagnostics").at("dropped_empty_classes") == 0);
  CHECK(j.at("diagnostics").at("base_components") == 1);
  CHECK(j.at("diagnostics").at("coarse_count") == 3);
  CHECK(j.at("diagnostics").at("refined_count") == 5);

  auto coarse_only = json::parse(io::sector_report(st, d, classes, false));
  CHECK_FALSE(coarse_only.contains("refined"));
  CHECK_FALSE(coarse_only.contains("poset"));
}

TEST_CASE("single-loop reports agree across the two entry points") {
  auto m = football_model();
  auto st = test_stamp("Z");
  auto classes = classify_homs(enumerate_homs(presentation::integers(), *m.group));
  auto via_inertia = io::sector_report(st, inertia(m.space), classes, true);
  auto via_multi = io::sector_report(st, multisectors(m.space, 1), classes, true);
  CHECK(via_inertia == via_multi);
}

TEST_CASE("euler report shape") {
  auto m = football_model();
  auto r = gamma_euler(m.space, presentation::integers());
  auto text = io::euler_report(test_stamp("Z"), r, orbifold_euler_total(m.space));
  auto j = json::parse(text);
  CHECK(j.at("report") == "euler");
  CHECK(j.at("sector_sum") == 6);
  CHECK(j.at("oracle") == "6");
  CHECK(j.at("agree") == true);
  CHECK(j.at("diagnostics").at("orbifold_total") == "2/3");
  CHECK(j.at("diagnostics").at("oracle_integral") == true);

  auto rf = gamma_euler(m.space, presentation::free_group(2));
  auto jf = json::parse(io::euler_report(test_stamp("F2"), rf, orbifold_euler_total(m.space)));
  CHECK(jf.at("oracle").is_null());
}

TEST_CASE("fixed-point sector and covering report shape") {
  auto m = s3_cone_model();
  auto l = leida_sectors(m.space);
  auto d = gamma_sectors(m.space, presentation::integers());
  auto cov = covering_data(d, l);
  auto j = json::parse(io::leida_report(test_stamp("Z"), l, d, cov));
  CHECK(j.at("report") == "leida");
  REQUIRE(j.at("sectors").size() == 4);
  CHECK(j.at("sectors")[2].at("subgroup") == json::array({0, 3, 4}));
  CHECK(j.at("sectors")[2].at("normalizer_order") == 6);
  CHECK(j.at("sectors")[2].at("components") == 2);
  REQUIRE(j.at("covering").size() == 3);
  CHECK(j.at("covering")[2].at("index") == 2);
  CHECK(j.at("covering")[2].at("subgroup_class") == 2);
  CHECK(j.at("diagnostics").at("sector_count") == 4);
}

TEST_CASE("covers report shape") {
  auto m = s3_cone_model();
  auto r = covers_local_groups(m.space, presentation::integers());
  auto j = json::parse(io::covers_report(test_stamp("Z"), r));
  CHECK(j.at("report") == "covers");
  CHECK(j.at("covers") == false);
  CHECK(j.at("refuter") == json::array({0, 1, 2, 3, 4, 5}));

  auto r2 = covers_local_groups(m.space, presentation::free_group(2));
  auto j2 = json::parse(io::covers_report(test_stamp("F2"), r2));
  CHECK(j2.at("covers") == true);
  CHECK(j2.at("refuter").is_null());
  CHECK(j2.at("witnesses").size() == 6);
  CHECK(j2.at("diagnostics").at("subgroups_considered") == 6);
}

TEST_CASE("certificate report shape") {
  auto m = football_model();
  auto cert = verify_object_bijection(m.space, presentation::integers());
  auto j = json::parse(io::certificate_report(test_stamp("Z"), cert));
  CHECK(j.at("report") == "certificate");
  CHECK(j.at("check") == "thm31");
  CHECK(j.at("ok") == true);
  CHECK(j.at("counterexample").is_null());
  CHECK(j.at("counts").at("objects_local") == 9);
  CHECK(j.at("diagnostics").at("subdivisions") == 0);

  // A stamp without a gamma input carries no gamma block.
  auto jn = json::parse(io::certificate_report(test_stamp(""), cert));
  CHECK_FALSE(jn.at("inputs").contains("gamma"));
}
