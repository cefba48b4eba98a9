#include "doctest.h"

#include "shiftspec/corpus.hpp"
#include "shiftspec/json_io.hpp"
#include "shiftspec/rng.hpp"

using namespace shiftspec;
using nlohmann::json;

TEST_CASE("rule set serialization") {
    Alphabet a({"#", "a", "b"}, "#");
    RuleSet fin = RuleSet::finite(a, {a.parse_word("a"), a.parse_word("bab")}, 3);
    json j = rule_set_to_json(fin);
    CHECK(j.at("alphabet") == json::array({"#", "a", "b"}));
    CHECK(j.at("hash") == "#");
    CHECK(j.at("kind") == "finite");
    CHECK(j.at("members") == json::array({"a", "bab"}));
    CHECK(j.at("max_len") == 3);
    CHECK(j.at("beyond") == "exclude");

    RuleSet back = rule_set_from_json(j);
    auto syms = all_symbols(a);
    for_each_word(syms, 5, [&](const Word& y) {
        REQUIRE(lang_contains(fin, y) == lang_contains(back, y));
        return true;
    });

    json jc = rule_set_to_json(condensed_rules(2, a));
    CHECK(jc.at("kind") == "condensed");
    CHECK(jc.at("n") == 2);
    RuleSet back2 = rule_set_from_json(jc);
    CHECK(rule_contains(back2, a.parse_word("aba")));
    CHECK_FALSE(rule_contains(back2, a.parse_word("aaa")));

    json j0 = rule_set_to_json(condensed_rules(0, a));
    CHECK(j0.at("kind") == "all_a_odd");
    CHECK(rule_contains(rule_set_from_json(j0), a.parse_word("aaaaaaa")));
}

TEST_CASE("code serialization") {
    Code c2 = builtin_code("code2");
    json j = code_to_json(c2);
    CHECK(j.at("hash") == "#");
    CHECK(j.at("blocks").at("a") == "010");
    CHECK(j.at("blocks").at("b") == "011");
    CHECK(j.at("blocks").at("#") == "0");

    Code back = code_from_json(j);
    CHECK(is_admissible(back).admissible);
    CHECK(gap_constant(back) == 18);
}

TEST_CASE("block code serialization") {
    BlockCode fb = generator(GeneratorFamily::boyle4, "b");
    json j = block_code_to_json(fb);
    CHECK(j.at("radius") == 1);
    CHECK(j.at("builtin") == "boyle4:b");
    CHECK(j.at("table").at("cba") == "a");
    CHECK(j.at("table").at("aba") == "b");

    BlockCode back = block_code_from_json(j);
    CHECK(back.table() == fb.table());

    BlockCode named = block_code_from_json(json{{"builtin", "condensed:2"}});
    CHECK(named.radius() == 2);
}

TEST_CASE("group word and certificate serialization") {
    GroupWord gw{GeneratorFamily::boyle8, {"b1", "c2", "b1"}};
    json j = group_word_to_json(gw);
    CHECK(j.at("family") == "boyle8");
    CHECK(j.at("letters") == json::array({"b1", "c2", "b1"}));
    GroupWord back = group_word_from_json(j);
    CHECK(back.family == GeneratorFamily::boyle8);
    CHECK(back.letters == gw.letters);

    Code c2 = builtin_code("code2");
    Alphabet a({"#", "a", "b"}, "#");
    RuleSet with_a = RuleSet::finite(a, {a.parse_word("a")}, 1);
    json cert = gap_certificate_to_json(glue_flat(c2, with_a, "00100", "00100"));
    CHECK(cert.at("k") == 18);
    CHECK(cert.at("i") == 18);
    CHECK(cert.at("j") == 0);
    CHECK(cert.at("v") == std::string(18, '0'));
}

TEST_CASE("window serialization marks undefined positions") {
    auto w = oxtoby_window({"x1"}, 0, 2, 1);
    json j = oxtoby_window_to_json(w);
    CHECK(j.at("entries") == json::array({"x1", "_", "x1"}));
    CHECK(j.at("lo") == 0);
    CHECK(j.at("hi") == 2);
    CHECK(j.at("depth") == 1);
}
