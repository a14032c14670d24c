#include <doctest.h>

#include <random>

#include "octagrid/json_io.hpp"
#include "octagrid/subgraph.hpp"

using namespace octagrid;

TEST_CASE("labeling round-trips through JSON") {
    std::mt19937 rng(3);
    Labeling lab;
    lab.h = 2;
    lab.k = 1;
    for (const Edge& e : full_window(4, 3, {-2, 5}).edges()) {
        lab.assignment.emplace(e, static_cast<int>(rng() % 30));
    }
    const Json j = labeling_to_json(lab);
    const Labeling back = labeling_from_json(j);
    CHECK(back.h == lab.h);
    CHECK(back.k == lab.k);
    CHECK(back.assignment == lab.assignment);
    CHECK(labeling_to_json(back).dump() == j.dump());  // stable output
}

TEST_CASE("labeling parsing rejects malformed documents") {
    CHECK_THROWS_AS(labeling_from_json(Json::parse(R"({"h":1,"k":2})")), std::invalid_argument);
    CHECK_THROWS_AS(labeling_from_json(Json::parse(R"({"edges":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(
        labeling_from_json(Json::parse(
            R"({"h":1,"k":2,"edges":[{"a":[0,0],"b":[2,0],"color":1}]})")),
        std::invalid_argument);  // not a T8 edge
    CHECK_THROWS_AS(
        labeling_from_json(Json::parse(
            R"({"h":1,"k":2,"edges":[{"a":[0,0],"b":[1,0],"color":-3}]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        labeling_from_json(Json::parse(
            R"({"h":1,"k":2,"edges":[{"a":[0,0],"b":[1,0],"color":1},
                                     {"a":[1,0],"b":[0,0],"color":2}]})")),
        std::invalid_argument);  // same edge twice
}

TEST_CASE("periodic labeling round-trips through JSON") {
    std::mt19937 rng(5);
    PeriodicLabeling plab;
    plab.px = 6;
    plab.py = 8;
    plab.labels.resize(static_cast<std::size_t>(4 * plab.px * plab.py));
    for (int& c : plab.labels) c = static_cast<int>(rng() % 29);

    const Json j = periodic_to_json(plab);
    CHECK(is_periodic_document(j));
    const PeriodicLabeling back = periodic_from_json(j);
    CHECK(back.px == plab.px);
    CHECK(back.py == plab.py);
    CHECK(back.labels == plab.labels);
}

TEST_CASE("periodic parsing rejects bad periods and incomplete domains") {
    CHECK_THROWS_AS(
        periodic_from_json(Json::parse(R"({"h":1,"k":2,"period":[4,6],"labels":[]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        periodic_from_json(Json::parse(R"({"h":1,"k":2,"period":[6,6],"labels":[]})")),
        std::invalid_argument);  // missing labels
    CHECK_THROWS_AS(
        periodic_from_json(Json::parse(
            R"({"h":1,"k":2,"period":[6,6],
                "labels":[{"anchor":[0,0],"class":"X","color":0}]})")),
        std::invalid_argument);  // bad class
    CHECK_THROWS_AS(
        periodic_from_json(Json::parse(
            R"({"h":1,"k":2,"period":[6,6],
                "labels":[{"anchor":[7,0],"class":"H","color":0}]})")),
        std::invalid_argument);  // anchor outside the domain
}

TEST_CASE("labeling files are not periodic documents") {
    CHECK_FALSE(is_periodic_document(Json::parse(R"({"h":1,"k":2,"edges":[]})")));
}
