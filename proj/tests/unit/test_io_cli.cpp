#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "melonforge/cli.hpp"
#include "melonforge/error.hpp"
#include "melonforge/generators.hpp"
#include "melonforge/intermediate_field.hpp"
#include "melonforge/io.hpp"

using namespace melonforge;
using io::json;

namespace {

const std::string data_dir = MELONFORGE_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("melonforge_test_" + name);
  io::write_text_file(path.string(), text);
  return path.string();
}

}  // namespace

TEST_SUITE("io_cli") {
  TEST_CASE("JSON round trips") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
      const auto sample = random_gm_bubble(rng, 3 + trial % 4, 2 + 2 * (trial % 6));
      CHECK(io::bubble_from_json(io::to_json(sample.bubble)) == sample.bubble);
      const auto cert = io::certificate_from_json(io::to_json(sample.certificate));
      CHECK(cert.sequence == sample.certificate.sequence);
      CHECK(cert.multiset == sample.certificate.multiset);
      if (sample.bubble.num_vertices() >= 4) {
        const GluingGraph g = decompose(sample.bubble, sample.certificate);
        CHECK(same_gluing(io::gluing_from_json(io::to_json(g)), g));
        const PlaneTree t = to_plane_tree(g);
        CHECK(io::plane_tree_from_json(io::to_json(t)) == t);
      }
      const FeynmanGraph f = random_quartic_graph(rng, 3 + trial % 3, 1 + trial % 4);
      const FeynmanGraph back = io::feynman_from_json(io::to_json(f));
      CHECK(back.black_of_white() == f.black_of_white());
      const DecoratedMap m = j_quartic(f);
      const DecoratedMap mb = io::map_from_json(io::to_json(m));
      CHECK(mb.rotation == m.rotation);
      CHECK(mb.edges == m.edges);
    }
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(io::bubble_from_json(json::parse(R"({"d": 3})")), Error);
    try {
      io::read_json_file(data_dir + "/missing.json");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::Io);
    }
    auto cert = io::to_json(fixtures::worked_example_certificate());
    cert["multiset"][0]["count"] = 7;
    CHECK_THROWS_AS(io::certificate_from_json(cert), Error);
  }

  TEST_CASE("scaling of the melonic quartic") {
    const Run r = run({"scaling", data_dir + "/q1_d3.json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("s") == "-2");
  }

  TEST_CASE("covariance series") {
    const Run r = run({"covariance", "--V", "4", "--series", "--order", "3"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("coefficients") == json({"1", "2", "8", "40"}));
    const Run tsv = run({"--format", "tsv", "covariance", "--V", "4", "--series", "--order", "2"});
    CHECK(tsv.out == "0\t1\n1\t2\n2\t8\n");
    const Run numeric = run({"covariance", "--V", "4", "--t", "0.1"});
    CHECK(json::parse(numeric.out).at("C").get<double>() == doctest::Approx(1.3819660112501051));
    CHECK(run({"covariance", "--V", "4", "--t", "0.3"}).code == cli::kNoConvergence);
  }

  TEST_CASE("recognize, decompose and tree outputs are re-readable") {
    const std::string bubble = temp_file("worked.json", io::to_json(fixtures::worked_example()).dump());
    const Run rec = run({"recognize", bubble});
    REQUIRE(rec.code == 0);
    const auto cert = io::certificate_from_json(json::parse(rec.out));
    CHECK(cert.multiset == fixtures::worked_example_multiset());
    const std::string cert_file = temp_file("cert.json", rec.out);
    CHECK(run({"validate", cert_file}).code == 0);

    const Run dec = run({"decompose", bubble});
    REQUIRE(dec.code == 0);
    const std::string gluing_file = temp_file("gluing.json", dec.out);
    CHECK(json::parse(run({"validate", gluing_file}).out).at("kind") == "gluing");

    const Run tree = run({"tree", gluing_file});
    REQUIRE(tree.code == 0);
    const std::string tree_file = temp_file("tree.json", tree.out);
    CHECK(json::parse(run({"validate", tree_file}).out).at("kind") == "tree");
    const Run back = run({"tree", tree_file});
    CHECK(boundary(io::gluing_from_json(json::parse(back.out))).num_vertices() == 14);

    CHECK(run({"export-dot", bubble}).out.starts_with("graph bubble"));
    CHECK(run({"export-dot", tree_file}).out.starts_with("graph tree"));
    CHECK(run({"export-dot", gluing_file}).out.starts_with("graph gluing"));
  }

  TEST_CASE("matrix model commands") {
    const std::string tree = data_dir + "/melonic_path_tree.json";
    const Run eta = run({"eta", "--tree", tree});
    CHECK(eta.code == 0);
    CHECK(json::parse(eta.out).at("eta") == json({"0", "0", "0", "0"}));
    const Run saddle = run({"saddle", "--tree", tree, "--t", "0.02"});
    CHECK(saddle.code == 0);
    CHECK(json::parse(saddle.out).at("gradient_norm").get<double>() <= 1e-8);
    CHECK(run({"saddle", "--tree", tree, "--t", "0.02", "--equation", "stated"}).code == cli::kNoConvergence);
    const Run det = run({"verify-determinant", "--tree", tree, "--n", "3", "--trials", "10", "--seed", "7"});
    CHECK(det.code == 0);
    CHECK(det.out == run({"verify-determinant", "--tree", tree, "--n", "3", "--trials", "10", "--seed", "7"}).out);
    CHECK(run({"expand-log", "--tree", tree, "--order", "3", "--check", "--trials", "3"}).code == 0);
  }

  TEST_CASE("enumeration commands") {
    const std::string q = data_dir + "/q1_d3.json";
    const Run e = run({"enumerate", "--bubble", q, "--copies", "2"});
    CHECK(e.code == 0);
    CHECK(json::parse(e.out).at("total") == 20);
    const Run g = run({"gmax", "--bubble", q, "--copies", "2"});
    CHECK(json::parse(g.out).at("delta_max") == "3");
    const Run x = run({"crosscheck", q, "--order", "2"});
    CHECK(x.code == 0);
    CHECK(json::parse(x.out).at("agree") == true);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"scaling", data_dir + "/missing.json"}).code == cli::kIo);
    CHECK(run({"validate", data_dir + "/not_regular.json"}).code == cli::kValidation);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("seeded generation is deterministic") {
    const auto a = run({"generate", "tree", "--d", "5", "--size", "4", "--seed", "9"});
    const auto b = run({"generate", "tree", "--d", "5", "--size", "4", "--seed", "9"});
    CHECK(a.out == b.out);
    CHECK(run({"validate", temp_file("gen.json", a.out)}).code == 0);
  }
}
