#include "doctest.h"

#include <set>

#include "shiftspec/block_code.hpp"
#include "shiftspec/rules.hpp"

using namespace shiftspec;

TEST_CASE("window application") {
    BlockCode fb = generator(GeneratorFamily::boyle4, "b");
    const Alphabet& a = fb.alphabet();
    CHECK(a.format_word(fb.apply_window(a.parse_word("cba"))) == "a");
    CHECK(a.format_word(fb.apply_window(a.parse_word("aba"))) == "b");
    CHECK(a.format_word(fb.apply_window(a.parse_word("cbacba"))) == "aaca");

    BlockCode id = identity_block_code(boyle4_alphabet());
    Word w = a.parse_word("dcba#");
    CHECK(id.apply_window(w) == w);

    CHECK_THROWS_AS(fb.apply_window(a.parse_word("ab")), precondition_error);
}

TEST_CASE("star maps") {
    BlockCode fb = generator(GeneratorFamily::boyle4, "b");
    const Alphabet& a = fb.alphabet();
    CHECK(a.format_word(star_map(fb, a.parse_word("cb"))) == "ca");
    CHECK(star_map(fb, Word{}).empty());
    // the leading # counts as a non-{a,b} predecessor, so a leading a or b swaps
    CHECK(a.format_word(star_map(fb, a.parse_word("a"))) == "b");
    CHECK(a.format_word(star_map(fb, a.parse_word("aaaa"))) == "baaa");

    BlockCode f2 = condensed_generator(2);
    const Alphabet& ca = f2.alphabet();
    CHECK(ca.format_word(star_map(f2, ca.parse_word("aaa"))) == "aba");
    CHECK(ca.format_word(star_map(f2, ca.parse_word("aba"))) == "aaa");
    CHECK(ca.format_word(star_map(f2, ca.parse_word("aaaaa"))) == "aaaaa");
    CHECK(ca.format_word(star_map(f2, ca.parse_word("ab"))) == "ab");

    BlockCode f1 = condensed_generator(1);
    CHECK(ca.format_word(star_map(f1, ca.parse_word("a"))) == "b");
    CHECK(ca.format_word(star_map(f1, ca.parse_word("b"))) == "a");
    CHECK(ca.format_word(star_map(f1, ca.parse_word("ab"))) == "ab");

    CHECK_THROWS_AS(star_map(fb, a.parse_word("a#")), input_error);
}

TEST_CASE("composition") {
    BlockCode fb = generator(GeneratorFamily::boyle4, "b");
    BlockCode fc = generator(GeneratorFamily::boyle4, "c");
    const Alphabet& a = fb.alphabet();

    BlockCode bb = compose(fb, fb);
    auto syms = all_symbols(a);
    for_each_word(syms, 5, [&](const Word& w) {
        if (w.size() != 5) return true;
        Word out = bb.apply_window(w);
        REQUIRE(out.size() == 1);
        REQUIRE(out[0] == w[2]);
        return true;
    });

    BlockCode id = identity_block_code(boyle4_alphabet());
    CHECK(compose(id, fb).table() == fb.table());
    CHECK(compose(fb, id).table() == fb.table());

    // apply_window compatibility
    Word w = a.parse_word("abacbad");
    CHECK(compose(fc, fb).apply_window(w) == fc.apply_window(fb.apply_window(w)));

    BlockCode b1 = generator(GeneratorFamily::boyle8, "b1");
    BlockCode c2 = generator(GeneratorFamily::boyle8, "c2");
    CHECK(compose(b1, c2).table() == compose(c2, b1).table());
}

TEST_CASE("star naturality under composition") {
    std::vector<BlockCode> gens{generator(GeneratorFamily::boyle4, "b"), generator(GeneratorFamily::boyle4, "c"),
                                generator(GeneratorFamily::boyle4, "d")};
    const Alphabet& a = gens[0].alphabet();
    auto nonhash = a.nonhash_symbols();
    for (const BlockCode& f : gens)
        for (const BlockCode& g : gens) {
            BlockCode fg = compose(f, g);
            for_each_word(nonhash, 5, [&](const Word& w) {
                REQUIRE(star_map(fg, w) == star_map(f, star_map(g, w)));
                return true;
            });
        }
    BlockCode f1 = condensed_generator(1), f2 = condensed_generator(2);
    BlockCode f12 = compose(f1, f2);
    auto nh = f1.alphabet().nonhash_symbols();
    for_each_word(nh, 5, [&](const Word& w) {
        REQUIRE(star_map(f12, w) == star_map(f1, star_map(f2, w)));
        return true;
    });
}

TEST_CASE("group words") {
    GroupWord single{GeneratorFamily::boyle4, {"b"}};
    CHECK(eval_group_word(single).table() == generator(GeneratorFamily::boyle4, "b").table());

    GroupWord doubled{GeneratorFamily::boyle4, {"b", "b"}};
    CHECK_FALSE(doubled.is_reduced());
    BlockCode bb = eval_group_word(doubled);
    const Alphabet& a = bb.alphabet();
    auto syms = all_symbols(a);
    for_each_word(syms, 5, [&](const Word& w) {
        if (w.size() == 5) REQUIRE(bb.apply_window(w)[0] == w[2]);
        return true;
    });

    // letters apply left to right: [b,c] acts as f_c after f_b
    GroupWord bc{GeneratorFamily::boyle4, {"b", "c"}};
    CHECK(bc.is_reduced());
    Word run = a.parse_word("aaaaa");
    Word image = star_map(eval_group_word(bc), run);
    CHECK(a.format_word(image) == "bcaaa");
    CHECK(image[1] == a.require("c"));
    auto chain = generator_chain(bc);
    CHECK(star_chain(chain, run) == image);

    CHECK(reduced_words(GeneratorFamily::boyle4, 3).size() == 12);
    CHECK(reduced_words(GeneratorFamily::boyle8, 2).size() == 30);
}

TEST_CASE("hash preservation certificates") {
    CHECK(is_hash_preserving_upto(generator(GeneratorFamily::boyle4, "b"), 6));
    CHECK(is_hash_preserving_upto(generator(GeneratorFamily::boyle8, "c1"), 4));
    for (int n = 1; n <= 3; ++n)
        CHECK(is_hash_preserving_upto(condensed_generator(n), static_cast<std::size_t>(2 * n + 1)));

    BlockCode shift = BlockCode::from_rule(boyle4_alphabet(), 1, [](const Word& w) { return w[2]; }, "shift");
    CHECK_FALSE(is_hash_preserving_upto(shift, 2));

    // constant maps destroy the frame
    Alphabet a = boyle4_alphabet();
    BlockCode constant = BlockCode::from_rule(a, 0, [&](const Word&) { return a.require("a"); });
    CHECK_FALSE(is_hash_preserving_upto(constant, 1));
}

TEST_CASE("induced action on rule sets") {
    BlockCode fb = generator(GeneratorFamily::boyle4, "b");
    const Alphabet& a = fb.alphabet();
    // rule members are odd-length words, so the two-letter swap shows up
    // inside an odd member; the star map itself sends cb to ca
    CHECK(a.format_word(star_map(fb, a.parse_word("cb"))) == "ca");
    RuleSet r2 = RuleSet::finite(a, {a.parse_word("acb")}, 3);
    RuleSet moved2 = induced_rules(fb, r2, 3);
    REQUIRE(moved2.members().size() == 1);
    CHECK(a.format_word(*moved2.members().begin()) == "bca");

    RuleSet empty = RuleSet::empty(a, 3);
    CHECK(induced_rules(fb, empty, 4).members().empty());
    CHECK_THROWS_AS(RuleSet::finite(a, {a.parse_word("cb")}, 2), input_error);

    // the condensed generator sends the base family to the exchanged family
    Alphabet ca = condensed_alphabet();
    for (int n = 1; n <= 2; ++n) {
        BlockCode fn = condensed_generator(n);
        RuleSet ind = induced_rules(fn, condensed_rules(0, ca), static_cast<std::size_t>(2 * n + 3));
        RuleSet cn = condensed_rules(n, ca);
        for_each_word(ca.nonhash_symbols(), static_cast<std::size_t>(2 * n + 3), [&](const Word& w) {
            REQUIRE(rule_contains(ind, w) == rule_contains(cn, w));
            return true;
        });
    }

    BlockCode shift = BlockCode::from_rule(boyle4_alphabet(), 1, [](const Word& w) { return w[2]; }, "shift");
    CHECK_THROWS_AS(induced_rules(shift, r2, 3), not_hash_preserving);
}

TEST_CASE("almost trivial witnesses") {
    BlockCode id = identity_block_code(boyle4_alphabet());
    CHECK_FALSE(almost_trivial_witness(id, 6).has_value());

    BlockCode fb = generator(GeneratorFamily::boyle4, "b");
    auto w = almost_trivial_witness(fb, 6);
    REQUIRE(w.has_value());
    CHECK(fb.alphabet().format_word(*w) == "a"); // first length-then-lex word moved

    // a reduced boyle8 word within one half moves pure runs of that half's a
    GroupWord word{GeneratorFamily::boyle8, {"b2", "c2"}};
    auto chain = generator_chain(word);
    const Alphabet& a8 = chain[0].alphabet();
    Word run = a8.parse_word("a2,a2,a2");
    CHECK(star_chain(chain, run) != run);
}

TEST_CASE("star bijections and fixed words") {
    BlockCode fb = generator(GeneratorFamily::boyle4, "b");
    CHECK(star_bijection_check(fb, 2));
    CHECK(star_bijection_check(identity_block_code(boyle4_alphabet()), 3));

    for (int n = 1; n <= 3; ++n) {
        BlockCode fn = condensed_generator(n);
        std::size_t len = static_cast<std::size_t>(2 * n - 1);
        CHECK(star_bijection_check(fn, len));
        // the permutation is exactly the advertised transposition
        const Alphabet& ca = fn.alphabet();
        Word run(len, ca.require("a"));
        Word swapped = run;
        swapped[static_cast<std::size_t>(n - 1)] = ca.require("b");
        CHECK(star_map(fn, run) == swapped);
        CHECK(star_map(fn, swapped) == run);
        std::size_t moved = 0;
        for_each_word(ca.nonhash_symbols(), len, [&](const Word& w) {
            if (w.size() == len && star_map(fn, w) != w) ++moved;
            return true;
        });
        CHECK(moved == 2);
    }

    GroupWord bc{GeneratorFamily::boyle4, {"b", "c"}};
    auto chain = generator_chain(bc);
    const Alphabet& a = chain[0].alphabet();
    for (std::size_t len = 1; len <= 4; ++len) CHECK(star_bijection_check_chain(chain, a, len));
    CHECK(fixed_word_count_chain(chain, a, 3) < 4 * 4 * 4);
}

TEST_CASE("free-product witness structure") {
    Alphabet a = boyle4_alphabet();
    SymbolId a_sym = a.require("a");
    for (std::size_t len = 1; len <= 4; ++len)
        for (const auto& letters : reduced_words(GeneratorFamily::boyle4, len)) {
            GroupWord gw{GeneratorFamily::boyle4, letters};
            auto chain = generator_chain(gw);
            Word run(len + 1, a_sym);
            Word image = star_chain(chain, run);
            REQUIRE(image.size() == run.size());
            CHECK(image[len - 1] == a.require(letters.back()));
            for (std::size_t p = len; p < image.size(); ++p) CHECK(image[p] == a_sym);
        }
}

TEST_CASE("multi-character symbol words parse with and without commas") {
    Alphabet a = boyle8_alphabet();
    Word expected{a.require("a1"), a.require("b1"), a.require("c2")};
    CHECK(a.parse_word("a1,b1,c2") == expected);
    CHECK(a.parse_word("a1b1c2") == expected); // greedy longest match
    CHECK(a.format_word(expected) == "a1,b1,c2");
    CHECK_THROWS_AS(a.parse_word("a1,zz"), input_error);
}

TEST_CASE("boyle8 generators swap within their half") {
    BlockCode fc1 = generator(GeneratorFamily::boyle8, "c1");
    const Alphabet& a = fc1.alphabet();
    // c1 and a1 exchange when the left neighbor is outside {c1, a1}
    CHECK(a.format_word(fc1.apply_window(a.parse_word("b2,c1,d1"))) == "a1");
    CHECK(a.format_word(fc1.apply_window(a.parse_word("b2,a1,d1"))) == "c1");
    CHECK(a.format_word(fc1.apply_window(a.parse_word("c1,c1,d1"))) == "c1");
    // symbols of the other half are untouched
    CHECK(a.format_word(fc1.apply_window(a.parse_word("b2,c2,d1"))) == "c2");
    CHECK(a.format_word(star_map(fc1, a.parse_word("c1,b1"))) == "a1,b1");
}

TEST_CASE("builtin block code lookup") {
    CHECK(builtin_block_code("boyle4:c").radius() == 1);
    CHECK(builtin_block_code("boyle8:d2").alphabet().size() == 9);
    CHECK(builtin_block_code("condensed:3").radius() == 3);
    CHECK_THROWS_AS(builtin_block_code("boyle4:x"), input_error);
    CHECK_THROWS_AS(builtin_block_code("nope"), input_error);
}
