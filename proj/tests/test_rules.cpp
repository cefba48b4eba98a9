#include "doctest.h"

#include <set>

#include "shiftspec/corpus.hpp"
#include "shiftspec/rng.hpp"
#include "shiftspec/rules.hpp"

using namespace shiftspec;

namespace {

Alphabet alpha3() { return Alphabet({"#", "a", "b"}, "#"); }

// Independent membership oracle straight from the forbidden-word definition:
// y lies in the language iff no factor of y has the shape # w # with w a
// #-free odd word outside R. Edge extendability is automatic.
bool forbidden_factor_oracle(const RuleSet& r, const Word& y) {
    const Alphabet& a = r.alphabet();
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!a.is_hash(y[i])) continue;
        for (std::size_t j = i + 1; j < y.size(); ++j) {
            if (!a.is_hash(y[j])) continue;
            Word inner(y.begin() + static_cast<long>(i) + 1, y.begin() + static_cast<long>(j));
            bool hash_free = true;
            for (SymbolId s : inner) hash_free = hash_free && !a.is_hash(s);
            if (!hash_free) break; // later j only adds more #'s inside
            if (inner.size() % 2 == 1 && !r.contains(inner)) return false;
        }
    }
    return true;
}

std::vector<RuleSet> sample_rule_sets() {
    Alphabet a = alpha3();
    std::vector<RuleSet> out;
    out.push_back(RuleSet::empty(a, 5));
    out.push_back(condensed_rules(0, a));
    out.push_back(condensed_rules(2, a));
    SplitMix64 rng(42);
    for (int t = 0; t < 4; ++t) out.push_back(random_finite_rules(a, 5, rng));
    return out;
}

} // namespace

TEST_CASE("rule membership") {
    Alphabet a = alpha3();
    RuleSet r0 = condensed_rules(0, a);
    CHECK(rule_contains(r0, a.parse_word("aaa")));
    CHECK_FALSE(rule_contains(r0, a.parse_word("aba")));
    CHECK_FALSE(rule_contains(r0, a.parse_word("aa")));
    CHECK_FALSE(rule_contains(r0, Word{}));

    RuleSet fin = RuleSet::finite(a, {a.parse_word("a"), a.parse_word("bab")}, 3);
    CHECK(rule_contains(fin, a.parse_word("bab")));
    CHECK(rule_contains(fin, a.parse_word("a")));
    CHECK_FALSE(rule_contains(fin, a.parse_word("b")));
    CHECK_FALSE(rule_contains(fin, a.parse_word("aaaaa"))); // beyond max_len, excluded

    RuleSet incl = RuleSet::finite(a, {a.parse_word("a")}, 1, BeyondPolicy::include);
    CHECK(rule_contains(incl, a.parse_word("bbb"))); // beyond max_len, included

    CHECK_THROWS_AS((void)rule_contains(r0, Word{17}), input_error);
}

TEST_CASE("language membership by segment rule") {
    Alphabet a = alpha3();
    RuleSet none = RuleSet::empty(a, 5);
    RuleSet r0 = condensed_rules(0, a);
    CHECK(lang_contains(none, a.parse_word("ab")));
    CHECK_FALSE(lang_contains(none, a.parse_word("#a#")));
    CHECK(lang_contains(none, a.parse_word("#aa#")));
    CHECK(lang_contains(r0, a.parse_word("#aa#")));
    CHECK(lang_contains(r0, a.parse_word("#aaa#")));
    CHECK(lang_contains(r0, a.parse_word("####")));
    CHECK(lang_contains(r0, Word{}));
    CHECK(lang_contains(none, a.parse_word("a#"))); // edge segments unconstrained
    CHECK(lang_contains(none, a.parse_word("ab#ba")));
}

TEST_CASE("language membership agrees with the forbidden-factor oracle") {
    Alphabet a = alpha3();
    auto syms = all_symbols(a);
    for (const RuleSet& r : sample_rule_sets()) {
        for_each_word(syms, 6, [&](const Word& y) {
            CAPTURE(a.format_word(y));
            REQUIRE(lang_contains(r, y) == forbidden_factor_oracle(r, y));
            return true;
        });
    }
}

TEST_CASE("language is factorial") {
    Alphabet a = alpha3();
    auto syms = all_symbols(a);
    for (const RuleSet& r : sample_rule_sets()) {
        for_each_word(syms, 6, [&](const Word& y) {
            if (!lang_contains(r, y)) return true;
            for (std::size_t i = 0; i < y.size(); ++i)
                for (std::size_t j = i; j <= y.size(); ++j) {
                    Word sub(y.begin() + static_cast<long>(i), y.begin() + static_cast<long>(j));
                    REQUIRE(lang_contains(r, sub));
                }
            return true;
        });
    }
}

TEST_CASE("enlarging a finite rule set never shrinks the language") {
    Alphabet a = alpha3();
    SplitMix64 rng(7);
    auto syms = all_symbols(a);
    for (int t = 0; t < 4; ++t) {
        RuleSet small = random_finite_rules(a, 5, rng);
        std::set<Word> bigger = small.members();
        auto nonhash = a.nonhash_symbols();
        for_each_word(nonhash, 5, [&](const Word& w) {
            if (w.size() % 2 == 1 && rng.flip()) bigger.insert(w);
            return true;
        });
        RuleSet big = RuleSet::finite(a, bigger, 5);
        for_each_word(syms, 6, [&](const Word& y) {
            if (lang_contains(small, y)) REQUIRE(lang_contains(big, y));
            return true;
        });
    }
}

TEST_CASE("glue2 follows the tail/head recipe") {
    Alphabet a = alpha3();
    RuleSet none = RuleSet::empty(a, 5);
    CHECK(a.format_word(glue2(none, a.parse_word("#a"), a.parse_word("a#"))) == "aa");
    CHECK(lang_contains(none, a.parse_word("#aaaa#")));
    CHECK(a.format_word(glue2(none, a.parse_word("a#"), a.parse_word("#a"))) == "##");
    CHECK(a.format_word(glue2(none, a.parse_word("#a"), a.parse_word("#a"))) == "a#");
    CHECK(lang_contains(none, a.parse_word("#aa##a")));
    CHECK(a.format_word(glue2(none, {}, {})) == "##");
    CHECK_THROWS_AS(glue2(none, a.parse_word("#a#"), {}), precondition_error);
}

TEST_CASE("glue2 joins every language pair with a two-letter connector") {
    Alphabet a = alpha3();
    auto syms = all_symbols(a);
    for (const RuleSet& r : sample_rule_sets()) {
        std::vector<Word> members;
        for_each_word(syms, 4, [&](const Word& y) {
            if (lang_contains(r, y)) members.push_back(y);
            return true;
        });
        for (const Word& w : members)
            for (const Word& u : members) {
                Word v = glue2(r, w, u);
                REQUIRE(v.size() == 2);
                Word joined = w;
                joined.insert(joined.end(), v.begin(), v.end());
                joined.insert(joined.end(), u.begin(), u.end());
                CAPTURE(a.format_word(w));
                CAPTURE(a.format_word(u));
                REQUIRE(lang_contains(r, joined));
                auto cands = glue2_candidates(r, w, u);
                REQUIRE_FALSE(cands.empty());
                REQUIRE(std::find(cands.begin(), cands.end(), v) != cands.end());
            }
    }
}

TEST_CASE("side profiles predict every pair exactly") {
    // the acceptance suite quantifies over (has-#, tail/head) classes; here
    // every pair up to length 5 is checked directly against its class
    // representatives
    Alphabet a = alpha3();
    SplitMix64 rng(17);
    RuleSet r = random_finite_rules(a, 3, rng);
    auto syms = all_symbols(a);

    auto tail_rep = [&](const Word& w) {
        std::size_t run = 0;
        while (run < w.size() && !a.is_hash(w[w.size() - 1 - run])) ++run;
        bool has_hash = run < w.size();
        Word content;
        if (run <= 3) {
            content.assign(w.end() - static_cast<long>(run), w.end());
        } else {
            content.assign(run % 2 == 0 ? 4 : 5, a.first_nonhash());
        }
        Word rep;
        if (has_hash) rep.push_back(a.hash());
        rep.insert(rep.end(), content.begin(), content.end());
        return rep;
    };
    auto head_rep = [&](const Word& w) {
        Word rev(w.rbegin(), w.rend());
        Word rep = tail_rep(rev);
        return Word(rep.rbegin(), rep.rend());
    };

    std::vector<Word> members;
    for_each_word(syms, 5, [&](const Word& y) {
        if (lang_contains(r, y)) members.push_back(y);
        return true;
    });
    for (const Word& w : members)
        for (const Word& u : members) {
            Word wr = tail_rep(w), ur = head_rep(u);
            REQUIRE(glue2(r, w, u) == glue2(r, wr, ur));
            Word v = glue2(r, w, u);
            Word joined = w;
            joined.insert(joined.end(), v.begin(), v.end());
            joined.insert(joined.end(), u.begin(), u.end());
            Word joined_rep = wr;
            joined_rep.insert(joined_rep.end(), v.begin(), v.end());
            joined_rep.insert(joined_rep.end(), ur.begin(), ur.end());
            REQUIRE(lang_contains(r, joined) == lang_contains(r, joined_rep));
            REQUIRE(glue2_candidates(r, w, u) == glue2_candidates(r, wr, ur));
        }
}

TEST_CASE("condensed rule family") {
    Alphabet a = alpha3();
    RuleSet r0 = condensed_rules(0, a);
    CHECK(r0.kind() == RuleKind::all_a_odd);
    CHECK(rule_contains(r0, a.parse_word("aaaaaaaaaaaaaaaaaaaaa"))); // no truncation

    RuleSet r1 = condensed_rules(1, a);
    CHECK(rule_contains(r1, a.parse_word("b")));
    CHECK_FALSE(rule_contains(r1, a.parse_word("a")));
    CHECK(rule_contains(r1, a.parse_word("aaa")));

    RuleSet r2 = condensed_rules(2, a);
    CHECK(rule_contains(r2, a.parse_word("aba")));
    CHECK_FALSE(rule_contains(r2, a.parse_word("aaa")));
    CHECK(rule_contains(r2, a.parse_word("a")));
    CHECK(rule_contains(r2, a.parse_word("aaaaa")));
    CHECK_FALSE(rule_contains(r2, a.parse_word("bab")));

    Alphabet no_b({"#", "a"}, "#");
    CHECK_THROWS_AS(condensed_rules(1, no_b), input_error);
}

TEST_CASE("language agreement with witnesses") {
    Alphabet a = alpha3();
    RuleSet r0 = condensed_rules(0, a);
    RuleSet r3 = condensed_rules(3, a);
    CHECK(lang_agree_upto(r0, r3, 5).agree);
    auto res = lang_agree_upto(r0, r3, 9);
    CHECK_FALSE(res.agree);
    REQUIRE(res.witness.has_value());
    CHECK(a.format_word(*res.witness) == "#aaaaa#");
    CHECK(lang_agree_upto(r3, r3, 8).agree);

    for (int n = 1; n <= 4; ++n) {
        RuleSet rn = condensed_rules(n, a);
        CHECK(lang_agree_upto(r0, rn, static_cast<std::size_t>(2 * n - 1)).agree);
        Word excluded = a.parse_word("#" + std::string(static_cast<std::size_t>(2 * n - 1), 'a') + "#");
        CHECK_FALSE(lang_contains(rn, excluded));
        CHECK(lang_contains(r0, excluded));
    }
}
