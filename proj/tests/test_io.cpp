#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "dss/bsa.hpp"
#include "dss/io.hpp"
#include "dss/nptcheck.hpp"
#include "dss/oracle.hpp"

using nlohmann::json;

namespace {

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("state json round trip") {
    const dss::DssState s(3, {0.1, 0.4, 0.4, 0.1});
    const dss::DssState back = dss::parse_state_json(dss::state_to_json(s));
    CHECK(back.n() == 3);
    for (int k = 0; k <= 3; ++k) CHECK(back.p(k) == s.p(k));
}

TEST_CASE("state file round trip") {
    const auto path = temp_file("dss_io_state.json");
    const dss::DssState s(2, {0.2, 0.6, 0.2});
    dss::write_state_file(path.string(), s);
    const dss::DssState back = dss::read_state_file(path.string());
    CHECK(back.n() == 2);
    for (int k = 0; k <= 2; ++k) CHECK(back.p(k) == s.p(k));
    std::filesystem::remove(path);
}

TEST_CASE("malformed state input is rejected") {
    CHECK_THROWS_AS(dss::parse_state_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(dss::parse_state_json("{\"n\":3}"), std::invalid_argument);
    CHECK_THROWS_AS(dss::parse_state_json("{\"n\":3,\"p\":[0.5,0.6]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(dss::parse_state_json("{\"n\":3,\"p\":[0.5,0.2,0.2,\"x\"]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(dss::parse_state_json("{\"n\":2,\"p\":[0.5,0.2,0.2]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(dss::parse_state_json("{\"n\":2.5,\"p\":[0.5,0.3,0.2]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(dss::read_state_file("/no/such/file.json"),
                    std::invalid_argument);
    // drift within 1e-9 is tolerated
    const dss::DssState drift =
        dss::parse_state_json("{\"n\":2,\"p\":[0.2,0.6,0.2000000002]}");
    CHECK(drift.p(0) + drift.p(1) + drift.p(2) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("matrix json round trip") {
    dss::HermitianMatrix h(2);
    h.set(0, 0, 1.5);
    h.set(0, 1, dss::cdouble{0.25, -0.75});
    h.set(1, 1, -2.0);
    const std::string text = dss::matrix_to_json(h);
    const json j = json::parse(text);
    CHECK(j["dim"] == 2);
    CHECK(j["re"][0][1] == 0.25);
    CHECK(j["im"][0][1] == -0.75);
    CHECK(j["im"][1][0] == 0.75);

    const dss::HermitianMatrix back = dss::parse_matrix_json(text);
    CHECK(back.max_abs_diff(h) == 0.0);

    CHECK_THROWS_AS(dss::parse_matrix_json("{\"dim\":2,\"re\":[[1,2],[3,4]],"
                                           "\"im\":[[0,0],[0,0]]}"),
                    std::domain_error);
    CHECK_THROWS_AS(dss::parse_matrix_json("{\"dim\":2}"), std::invalid_argument);
}

TEST_CASE("classification report serializes with the documented keys") {
    const dss::NptReport report = dss::classify(dss::DssState(3, {0.1, 0.4, 0.4, 0.1}));
    const json j = json::parse(dss::report_to_json(report));
    CHECK(j["is_full_npt"] == true);
    CHECK(j["negative_count"] == 2);
    CHECK(j["conds_pt"].size() == 2);
    CHECK(j["conds_closed"].size() == 2);
    CHECK(j["pt_eigenvalues"].size() == 6);
}

TEST_CASE("decomposition report serializes with the documented keys") {
    const dss::BsaResult result = dss::compute_bsa(dss::DssState(3, {0.1, 0.4, 0.4, 0.1}));
    const json j = json::parse(dss::report_to_json(result));
    CHECK(j["lambda"].get<double>() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(j["bsa_diag"].size() == 4);
    CHECK(j["remainder_diag"].size() == 4);
    CHECK(j["weights_per_projector"].get<double>() ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(j.contains("x"));
    CHECK(j.contains("y"));

    const dss::LemmaReport lemma = dss::verify_single_maximality(
        dss::DssState(3, {0.1, 0.4, 0.4, 0.1}), 0);
    const json lj = json::parse(dss::report_to_json(lemma));
    CHECK(lj["passed"] == true);
    CHECK(lj["expected"] == 6.0);
    CHECK(lj.contains("quantity"));
    CHECK(lj.contains("deviation"));
}

TEST_CASE("oracle report serializes with the documented keys") {
    const dss::OracleReport report =
        dss::compare(dss::DssState(2, {0.2, 0.6, 0.2}), 401);
    const json j = json::parse(dss::report_to_json(report));
    CHECK(j["agrees"] == true);
    CHECK(j["analytic"].get<double>() == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(j.contains("lower"));
    CHECK(j.contains("upper"));
    CHECK(j["gap"].get<double>() ==
          doctest::Approx(j["upper"].get<double>() - j["lower"].get<double>())
              .epsilon(1e-15));
}
