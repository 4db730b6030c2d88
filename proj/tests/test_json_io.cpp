#include "prismlab/errors.hpp"
#include "prismlab/json_io.hpp"
#include "prismlab/orientation.hpp"
#include "prismlab/tverberg.hpp"

#include <catch_amalgamated.hpp>

using namespace prismlab;

TEST_CASE("cell encoding", "[json]")
{
    const Cell c({{0}, {1, 3}});
    CHECK(cell_to_json(c) == Json::parse(R"({"parts": [[0], [1, 3]]})"));
    CHECK(cell_from_json(cell_to_json(c)) == SignedCell{c, 1});
    CHECK(cell_from_json(Json::parse(R"({"parts": [[0], [3, 1]]})")) == SignedCell{c, -1});
    CHECK_THROWS_AS(cell_from_json(Json::parse(R"({"parts": [[0], []]})")), ParseError);
    CHECK_THROWS_AS(cell_from_json(Json::parse(R"({"parts": [[0], [0]]})")), ParseError);
    CHECK_THROWS_AS(cell_from_json(Json::parse(R"({"parts": "x"})")), ParseError);
    CHECK_THROWS_AS(cell_from_json(Json::parse(R"([[0]])")), ParseError);
}

TEST_CASE("chain encoding round trips", "[json]")
{
    Chain chain(1);
    chain.add(Cell({{0}, {1, 2}}), 3);
    chain.add(Cell({{1, 2}, {0}}), -1);
    const Json j = chain_to_json(chain);
    CHECK(j["dim"] == 1);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coef"] == 3);
    CHECK(chain_from_json(j) == chain);

    // unsorted parts fold their sign into the coefficient
    const Json flipped = Json::parse(R"({"dim": 1, "terms": [{"cell": {"parts": [[0], [2, 1]]}, "coef": 3}]})");
    CHECK(chain_from_json(flipped).coefficient(Cell({{0}, {1, 2}})) == -3);
    CHECK_THROWS_AS(chain_from_json(Json::parse(R"({"dim": 2, "terms": [{"cell": {"parts": [[0], [1, 2]]}, "coef": 1}]})")),
                    std::exception);
    CHECK(chain_to_json(Chain(-1))["terms"].empty());
}

TEST_CASE("generic complex schema round trips", "[json]")
{
    const auto generic = to_generic(ComplexSpec{3, 2});
    const Json j = generic_to_json(generic);
    CHECK(j["top_cells"].size() == 14);
    CHECK(j["codim1"].size() == 24);
    CHECK(j["top_cells"][0]["factors"].is_array());
    CHECK(j["codim1"][0]["cofaces"][0].contains("induced_sign_if_plus"));
    CHECK(j["codim1"][0]["cofaces"][0]["top"].is_string());
    CHECK(generic_to_json(generic_from_json(j)) == j);
}

TEST_CASE("report encodings", "[json]")
{
    const auto coherence = coherence_to_json(verify_o_orientability(ComplexSpec{2, 2}), true);
    CHECK(coherence["pass"] == true);
    CHECK(coherence["faces"].size() == 6);
    CHECK_FALSE(coherence_to_json(verify_o_orientability(ComplexSpec{2, 2}), false).contains("faces"));

    const Json h = homology_to_json(std::vector<HomologyGroup>{{0, 0, {}}, {1, 2, {BigInt(2), BigInt(4)}}});
    CHECK(h[1]["free_rank"] == 2);
    CHECK(h[1]["torsion"] == Json::array({"2", "4"}));

    const PointConfig square{2, {{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
    const Json cert = certificate_to_json(*tverberg_search(square, 2).certificate);
    CHECK(cert["witness"] == Json::array({"1/2", "1/2"}));
    CHECK(cert["parts"] == Json::parse("[[0, 1], [2, 3]]"));
}
