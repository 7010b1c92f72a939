#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strat/corpus.hpp"
#include "strat/ssd.hpp"
#include "strat/witt.hpp"

using namespace strat;
using nlohmann::json;

namespace {
std::string data_path(const std::string& name) {
    return std::string(STRAT_DATA_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("parse named and explicit atoms") {
    DescPtr a = parse_ssd_text(R"({"space": {"cone": {"atom": "T2"}}})");
    CHECK(a->kind == SpaceDesc::Kind::Cone);
    CHECK(desc_equal(a->left, corpus::t2_desc()));

    DescPtr b = parse_ssd_text(R"({"space": {"join": [{"atom": "S2"}, {"atom": "S2"}]}})");
    CHECK(b->kind == SpaceDesc::Kind::Join);
    CHECK(dim(b) == 5);

    DescPtr c = parse_ssd_text(
        R"({"space": {"atom": {"name": "tri", "vertices": 3, "facets": [[0,1],[1,2],[0,2]]}}})");
    CHECK(homology_ranks(c->atom->complex()) == std::vector<int>{1, 1});
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_ssd_text("{"), ParseError);
    CHECK_THROWS_AS(parse_ssd_text(R"({"nospace": 1})"), ParseError);
    CHECK_THROWS_AS(parse_ssd_text(R"({"space": {"frob": 1}})"), ParseError);
    // malformed facet index
    CHECK_THROWS_AS(
        parse_ssd_text(
            R"({"space": {"atom": {"name": "bad", "vertices": 2, "facets": [[0,5]]}}})"),
        ParseError);
}

TEST_CASE("declared strata are validated") {
    // a cone triangulation with the apex declared singular
    std::string text = R"({"space": {"atom": {
        "name": "cone-s1", "vertices": 4,
        "facets": [[0,1,3],[1,2,3],[0,2,3]],
        "strata": {"labels": ["apex", "reg"], "relations": [["apex", "reg"]],
                   "default": "reg",
                   "assign": [{"label": "apex", "simplices": [[3]]}]}}}})";
    DescPtr d = parse_ssd_text(text);
    CHECK(d->atom->poset().size() == 2);
    CHECK(d->atom->stratum_dim(d->atom->poset().index_of("apex")) == 0);

    // an invalid labelling (singular edge with regular endpoints) is rejected
    std::string bad = R"({"space": {"atom": {
        "name": "bad", "vertices": 2, "facets": [[0,1]],
        "strata": {"labels": ["sing", "reg"], "relations": [["sing", "reg"]],
                   "default": "reg",
                   "assign": [{"label": "sing", "simplices": [[0,1]]}]}}}})";
    CHECK_THROWS_AS(parse_ssd_text(bad), ValidationError);
}

TEST_CASE("shipped data files match the built-in corpus") {
    for (auto [file, desc] :
         std::vector<std::pair<std::string, DescPtr>>{{"s1.ssd", corpus::sphere_desc(1)},
                                                      {"s2.ssd", corpus::sphere_desc(2)},
                                                      {"s3.ssd", corpus::sphere_desc(3)},
                                                      {"s4.ssd", corpus::sphere_desc(4)},
                                                      {"t2.ssd", corpus::t2_desc()},
                                                      {"rp2.ssd", corpus::rp2_desc()},
                                                      {"cp2.ssd", corpus::cp2_desc()}}) {
        DescPtr loaded = parse_ssd_file(data_path(file));
        CHECK(desc_equal(loaded, desc));
    }
}

TEST_CASE("digest round-trips through the report echo") {
    json input = json::parse(R"({"space": {"susp": {"atom": "T2"}}})");
    std::string d1 = input_digest(input);
    json echoed = json::parse(input.dump());
    CHECK(input_digest(echoed) == d1);
    // digest distinguishes inputs
    json other = json::parse(R"({"space": {"susp": {"atom": "S2"}}})");
    CHECK(input_digest(other) != d1);
}

TEST_CASE("witt verdict from a data file") {
    DescPtr d = parse_ssd_file(data_path("susp_t2.ssd"));
    CHECK(!witt_check(d).overall);
    DescPtr e = parse_ssd_file(data_path("susp_s2.ssd"));
    CHECK(witt_check(e).overall);
}
