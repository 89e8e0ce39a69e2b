#include "slcdual/io.hpp"

namespace slcdual {

using nlohmann::json;

namespace {

json x31(bool figure) {
    // D = P^2 with four general lines; iota pairs l1/l2 and l3/l4.
    json inc = json::array({
        json::array({{"p12", "l1"}, {"p12", "l2"}}),
        json::array({{"p13", "l1"}, {"p24", "l2"}}),
        json::array({{"p14", "l1"}, {"p23", "l2"}}),
    });
    if (figure) {
        inc.push_back(json::array({{"p13", "l3"}, {"p24", "l4"}}));
        inc.push_back(json::array({{"p23", "l3"}, {"p14", "l4"}}));
    } else {
        inc.push_back(json::array({{"p13", "l3"}, {"p14", "l4"}}));
        inc.push_back(json::array({{"p23", "l3"}, {"p24", "l4"}}));
    }
    inc.push_back(json::array({{"p34", "l3"}, {"p34", "l4"}}));
    return json{
        {"components", {"p2"}},
        {"curves",
         {{{"id", "l1"}, {"component", "p2"}},
          {{"id", "l2"}, {"component", "p2"}},
          {{"id", "l3"}, {"component", "p2"}},
          {{"id", "l4"}, {"component", "p2"}}}},
        {"points",
         {{{"id", "p12"}, {"component", "p2"}, {"curves", {"l1", "l2"}}},
          {{"id", "p13"}, {"component", "p2"}, {"curves", {"l1", "l3"}}},
          {{"id", "p14"}, {"component", "p2"}, {"curves", {"l1", "l4"}}},
          {{"id", "p23"}, {"component", "p2"}, {"curves", {"l2", "l3"}}},
          {{"id", "p24"}, {"component", "p2"}, {"curves", {"l2", "l4"}}},
          {{"id", "p34"}, {"component", "p2"}, {"curves", {"l3", "l4"}}}}},
        {"involution", {{"curve_pairs", json::array({{"l1", "l2"}, {"l3", "l4"}})}, {"incidence_pairs", inc}}},
    };
}

}  // namespace

std::vector<std::string> builtin_example_names() {
    return {"pinch-point", "x31-figure", "x31-text", "snc-triangle",
            "double-curve", "loop-pair", "folded-curve"};
}

json builtin_example(const std::string& name) {
    if (name == "pinch-point") {
        // affine plane glued to itself along the two axes by s -> -s
        return json{
            {"components", {"plane"}},
            {"curves", {{{"id", "cs"}, {"component", "plane"}}, {{"id", "ct"}, {"component", "plane"}}}},
            {"points", {{{"id", "q"}, {"component", "plane"}, {"curves", {"cs", "ct"}}}}},
            {"involution",
             {{"curve_pairs", json::array({{"cs", "cs"}, {"ct", "ct"}})},
              {"incidence_pairs",
               {json::array({{"q", "cs"}, {"q", "cs"}}), json::array({{"q", "ct"}, {"q", "ct"}})}}}},
        };
    }
    if (name == "x31-figure") return x31(true);
    if (name == "x31-text") return x31(false);
    if (name == "snc-triangle") {
        return json{
            {"components", {"d1", "d2", "d3"}},
            {"curves",
             {{{"id", "c12"}, {"component", "d1"}},
              {{"id", "c13"}, {"component", "d1"}},
              {{"id", "c21"}, {"component", "d2"}},
              {{"id", "c23"}, {"component", "d2"}},
              {{"id", "c31"}, {"component", "d3"}},
              {{"id", "c32"}, {"component", "d3"}}}},
            {"points",
             {{{"id", "q1"}, {"component", "d1"}, {"curves", {"c12", "c13"}}},
              {{"id", "q2"}, {"component", "d2"}, {"curves", {"c21", "c23"}}},
              {{"id", "q3"}, {"component", "d3"}, {"curves", {"c31", "c32"}}}}},
            {"involution",
             {{"curve_pairs", json::array({{"c12", "c21"}, {"c13", "c31"}, {"c23", "c32"}})},
              {"incidence_pairs",
               {json::array({{"q1", "c12"}, {"q2", "c21"}}),
                json::array({{"q1", "c13"}, {"q3", "c31"}}),
                json::array({{"q2", "c23"}, {"q3", "c32"}})}}}},
        };
    }
    if (name == "double-curve") {
        return json{
            {"components", {"d1", "d2"}},
            {"curves", {{{"id", "a"}, {"component", "d1"}}, {{"id", "b"}, {"component", "d2"}}}},
            {"points", json::array()},
            {"involution", {{"curve_pairs", json::array({{"a", "b"}})}, {"incidence_pairs", json::array()}}},
        };
    }
    if (name == "loop-pair") {
        return json{
            {"components", {"d1"}},
            {"curves", {{{"id", "a"}, {"component", "d1"}}, {{"id", "b"}, {"component", "d1"}}}},
            {"points", json::array()},
            {"involution", {{"curve_pairs", json::array({{"a", "b"}})}, {"incidence_pairs", json::array()}}},
        };
    }
    if (name == "folded-curve") {
        return json{
            {"components", {"d1"}},
            {"curves", {{{"id", "a"}, {"component", "d1"}}}},
            {"points", json::array()},
            {"involution", {{"curve_pairs", json::array({{"a", "a"}})}, {"incidence_pairs", json::array()}}},
        };
    }
    throw UnknownExample("unknown example '" + name + "'");
}

}  // namespace slcdual
