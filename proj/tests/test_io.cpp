#include <doctest.h>

#include "simflow/error.hpp"
#include "simflow/fixtures.hpp"
#include "simflow/homology.hpp"
#include "simflow/io.hpp"

using namespace simflow;

namespace {

std::string parse_error(std::string_view text)
{
    try {
        parse_document(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        return e.what();
    }
    FAIL("expected ParseError");
    return {};
}

} // namespace

TEST_CASE("parse documents")
{
    const auto doc = parse_document(R"({"name": "tri", "facets": [[0, 1], [1, 2], [0, 2]], "metadata": {"k": 1}})");
    CHECK(doc.name == "tri");
    CHECK(doc.facets.size() == 3);
    CHECK(doc.metadata["k"] == 1);

    const auto bare = parse_document(R"({"facets": [[2, 0, 1]]})");
    CHECK_FALSE(bare.name);
    CHECK(bare.metadata.empty());

    const auto c = parse_complex(R"({"facets": [[0, 1], [1, 2], [0, 2]]})");
    CHECK(c.facet_count() == 3);
    CHECK(c.dimension() == 1);
}

TEST_CASE("parse errors name the problem")
{
    CHECK(parse_error("{\"facets\": [[0, 1]").find("ParseError") != std::string::npos);
    CHECK(parse_error("[]").find("object") != std::string::npos);
    CHECK(parse_error("{}").find("facets") != std::string::npos);
    CHECK(parse_error(R"({"facets": 3})").find("facets") != std::string::npos);
    CHECK(parse_error(R"({"facets": [[0, -1]]})").find("facets[0][1]") != std::string::npos);
    CHECK(parse_error(R"({"facets": [[0, 1], [0, "a"]]})").find("facets[1][1]") != std::string::npos);
    CHECK(parse_error(R"({"facets": [[0, 1], 7]})").find("facets[1]") != std::string::npos);
    CHECK(parse_error(R"({"facets": [[0, 1]], "name": 5})").find("name") != std::string::npos);
    CHECK(parse_error(R"({"facets": [[0, 1]], "metadata": []})").find("metadata") != std::string::npos);
}

TEST_CASE("structural errors come from the builder")
{
    try {
        parse_complex(R"({"facets": [[0, 1, 2], [0, 3]]})");
        FAIL("expected NotPure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPure);
    }
    try {
        parse_complex(R"({"facets": []})");
        FAIL("expected EmptyInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyInput);
    }
}

TEST_CASE("round trip")
{
    for (const auto& [name, c] : fixtures::corpus()) {
        CAPTURE(name);
        const std::string text = serialize_complex(c, name);
        const auto doc = parse_document(text);
        CHECK(doc.name == name);
        const auto back = build_complex(doc.facets);
        CHECK(back.facet_lists() == c.facet_lists());
        CHECK(serialize_complex(back, name) == text);
    }
}

TEST_CASE("original labels are kept in metadata")
{
    const auto c = parse_complex(R"({"facets": [[10, 30], [30, 20], [20, 10]]})");
    const auto doc = to_document(c);
    CHECK(doc.facets == std::vector<std::vector<std::uint64_t>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(doc.metadata["original_labels"] == nlohmann::json::array({10, 20, 30}));
    CHECK(to_json(doc)["facets"].size() == 3);

    const auto dense = to_document(fixtures::cycle(3), "c3");
    CHECK_FALSE(dense.metadata.contains("original_labels"));
    CHECK(to_json(dense)["name"] == "c3");
}

TEST_CASE("fixtures by name")
{
    CHECK(fixtures::by_name("cycle", {{"n", 6}}).facet_count() == 6);
    CHECK(fixtures::by_name("complete", {{"n", 5}, {"k", 3}}).facet_count() == 10);
    CHECK(fixtures::by_name("simplex_boundary", {{"d", 3}}).facet_count() == 5);
    CHECK(fixtures::by_name("rp2", {}).facet_count() == 10);
    CHECK(fixtures::by_name("petersen", {}).facet_count() == 15);
    CHECK_THROWS_AS(fixtures::by_name("torus", {}), Error);
    CHECK_THROWS_AS(fixtures::by_name("cycle", {}), Error);
    CHECK_THROWS_AS(fixtures::cycle(2), Error);
    for (const auto& name : fixtures::names()) CHECK_FALSE(name.empty());

    CHECK(fixtures::validate("rp2", fixtures::rp2()));
    CHECK(fixtures::validate("rp2_disjoint_pair", fixtures::rp2_disjoint_pair()));
    CHECK(fixtures::validate("petersen", fixtures::petersen()));
    CHECK_FALSE(fixtures::validate("rp2", fixtures::simplex_boundary(2)));
    CHECK_FALSE(fixtures::validate("petersen", fixtures::complete(5, 2)));
}
