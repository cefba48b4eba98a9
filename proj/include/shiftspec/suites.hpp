#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "json.hpp"

#include "shiftspec/alphabet.hpp"
#include "shiftspec/block_code.hpp"
#include "shiftspec/codes.hpp"
#include "shiftspec/corpus.hpp"
#include "shiftspec/json_io.hpp"
#include "shiftspec/oxtoby.hpp"
#include "shiftspec/rng.hpp"
#include "shiftspec/rules.hpp"

namespace shiftspec {

struct SuiteResult {
    std::string name;
    bool passed = true;
    long long checks = 0;
    json payload;
    std::string first_witness;

    void fail(const std::string& witness) {
        passed = false;
        if (first_witness.empty()) first_witness = witness;
    }
    void expect(bool ok, const std::string& witness) {
        ++checks;
        if (!ok) fail(witness);
    }
};

inline json suite_result_to_json(const SuiteResult& r) {
    json out{{"suite", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"report", r.payload}};
    if (!r.first_witness.empty()) out["witness"] = r.first_witness;
    return out;
}

namespace suites {

// ---------------------------------------------------------------------------
// spec-gap2: the length-2 connector over {#,a,b}
//
// The per-pair predicate (connector value, membership of wvu, and the
// exhaustive two-letter candidate set) depends on w only through whether w
// contains # and its maximal #-free tail, and on u symmetrically through its
// head. Tails and heads longer than max_len matter only through their parity,
// since the corpus rule sets exclude words beyond max_len. Grouping the
// language words by these profiles makes the full pair quantifier exact at a
// fraction of the cost; a seeded direct sample double-checks the grouping.
// ---------------------------------------------------------------------------

namespace detail {

inline Word side_profile_rep(const Alphabet& a, const Word& w, int max_len, bool tail_side) {
    std::size_t run = 0;
    if (tail_side) {
        while (run < w.size() && !a.is_hash(w[w.size() - 1 - run])) ++run;
    } else {
        while (run < w.size() && !a.is_hash(w[run])) ++run;
    }
    bool has_hash = run < w.size();
    Word content;
    if (run <= static_cast<std::size_t>(max_len)) {
        if (tail_side)
            content.assign(w.end() - static_cast<long>(run), w.end());
        else
            content.assign(w.begin(), w.begin() + static_cast<long>(run));
    } else {
        std::size_t len = static_cast<std::size_t>(max_len) + 1;
        if (len % 2 != run % 2) ++len;
        content.assign(len, a.first_nonhash());
    }
    Word rep;
    if (tail_side) {
        if (has_hash) rep.push_back(a.hash());
        rep.insert(rep.end(), content.begin(), content.end());
    } else {
        rep = content;
        if (has_hash) rep.push_back(a.hash());
    }
    return rep;
}

inline std::string binary_word(std::size_t len, std::uint64_t bits) {
    std::string s(len, '0');
    for (std::size_t i = 0; i < len; ++i)
        if ((bits >> (len - 1 - i)) & 1) s[i] = '1';
    return s;
}

} // namespace detail

inline SuiteResult run_spec_gap2(std::uint64_t seed) {
    SuiteResult res;
    res.name = "spec-gap2";
    SplitMix64 rng(seed);
    Alphabet alpha({"#", "a", "b"}, "#");
    const int rule_sets = 50, max_member_len = 5;
    const std::size_t pair_len = 8;
    auto syms = all_symbols(alpha);

    long long total_pairs = 0, profile_pairs = 0, direct_samples = 0;
    for (int t = 0; t < rule_sets; ++t) {
        RuleSet r = random_finite_rules(alpha, max_member_len, rng);
        std::map<Word, long long> tails, heads;
        std::vector<Word> members;
        for_each_word(syms, pair_len, [&](const Word& w) {
            if (!lang_contains(r, w)) return true;
            members.push_back(w);
            ++tails[detail::side_profile_rep(alpha, w, max_member_len, true)];
            ++heads[detail::side_profile_rep(alpha, w, max_member_len, false)];
            return true;
        });

        long long pair_sum = 0;
        Word joined;
        for (const auto& [wrep, wcount] : tails) {
            for (const auto& [urep, ucount] : heads) {
                ++profile_pairs;
                pair_sum += wcount * ucount;
                Word v = glue2(r, wrep, urep);
                joined = wrep;
                joined.insert(joined.end(), v.begin(), v.end());
                joined.insert(joined.end(), urep.begin(), urep.end());
                bool member = v.size() == 2 && lang_contains(r, joined);
                auto cands = glue2_candidates(r, wrep, urep);
                bool found = std::find(cands.begin(), cands.end(), v) != cands.end();
                res.expect(member && !cands.empty() && found,
                           "rule set " + std::to_string(t) + ": w tail class " + alpha.format_word(wrep) +
                               ", u head class " + alpha.format_word(urep));
                if (!res.passed) return res;
            }
        }
        total_pairs += pair_sum;
        res.expect(pair_sum == static_cast<long long>(members.size()) * static_cast<long long>(members.size()),
                   "profile counts do not cover the member pairs");

        for (int s = 0; s < 2000; ++s) {
            const Word& w = members[rng.below(members.size())];
            const Word& u = members[rng.below(members.size())];
            Word v = glue2(r, w, u);
            joined = w;
            joined.insert(joined.end(), v.begin(), v.end());
            joined.insert(joined.end(), u.begin(), u.end());
            auto cands = glue2_candidates(r, w, u);
            bool ok = v.size() == 2 && lang_contains(r, joined) && !cands.empty() &&
                      std::find(cands.begin(), cands.end(), v) != cands.end();
            ++direct_samples;
            res.expect(ok, "direct pair w=" + alpha.format_word(w) + " u=" + alpha.format_word(u));
            if (!res.passed) return res;
        }
    }
    res.payload = json{{"seed", seed},
                       {"rule_sets", rule_sets},
                       {"member_max_len", max_member_len},
                       {"pair_word_len", pair_len},
                       {"pairs_covered", total_pairs},
                       {"profile_pairs", profile_pairs},
                       {"direct_samples", direct_samples}};
    return res;
}

// ---------------------------------------------------------------------------
// flat-gap: the length-18 connector for code2
// ---------------------------------------------------------------------------

inline SuiteResult run_flat_gap(std::uint64_t seed) {
    SuiteResult res;
    res.name = "flat-gap";
    SplitMix64 rng(seed);
    Code code = builtin_code("code2");
    Alphabet alpha({"#", "a", "b"}, "#");
    const int rule_sets = 10, max_member_len = 5;
    const std::size_t word_len = 10;
    const long long k = 18;
    res.expect(gap_constant(code) == k, "gap constant of code2 is not 18");

    long long total_pairs = 0, members_total = 0, brute_samples = 0, direct_glue = 0;
    for (int t = 0; t < rule_sets; ++t) {
        RuleSet r = random_finite_rules(alpha, max_member_len, rng);
        std::vector<std::string> members;
        for (std::size_t len = 0; len <= word_len; ++len)
            for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
                std::string y = detail::binary_word(len, bits);
                if (flat_lang_contains(code, r, y)) members.push_back(std::move(y));
            }
        members_total += static_cast<long long>(members.size());

        std::vector<HashFrameCompletion> comp;
        comp.reserve(members.size());
        for (const std::string& y : members) comp.push_back(complete_to_hash_frame(code, r, y));

        std::map<std::pair<std::string, std::string>, std::string> connectors;
        std::string joined;
        for (std::size_t wi = 0; wi < members.size(); ++wi) {
            for (std::size_t ui = 0; ui < members.size(); ++ui) {
                auto key = std::make_pair(comp[wi].suffix, comp[ui].prefix);
                auto it = connectors.find(key);
                if (it == connectors.end()) {
                    GapCertificate cert = assemble_gap_certificate(code, k, key.first, key.second);
                    res.expect(static_cast<long long>(cert.connector.size()) == k,
                               "connector length is not k for suffix/prefix pair");
                    it = connectors.emplace(key, cert.connector).first;
                }
                joined = members[wi];
                joined += it->second;
                joined += members[ui];
                ++total_pairs;
                ++res.checks;
                if (!flat_lang_contains(code, r, joined)) {
                    res.fail("rule set " + std::to_string(t) + ": w=" + members[wi] + " u=" + members[ui]);
                    return res;
                }
            }
        }

        for (int s = 0; s < 2; ++s) {
            const std::string& w = members[rng.below(members.size())];
            const std::string& u = members[rng.below(members.size())];
            GapCertificate cert = glue_flat(code, r, w, u);
            ++direct_glue;
            res.expect(static_cast<long long>(cert.connector.size()) == k &&
                           flat_lang_contains(code, r, w + cert.connector + u),
                       "direct glue_flat failed for w=" + w + " u=" + u);
            bool exists = false;
            for (std::uint64_t bits = 0; bits < (1ull << 18) && !exists; ++bits) {
                std::string v = detail::binary_word(18, bits);
                if (flat_lang_contains(code, r, w + v + u)) exists = true;
            }
            ++brute_samples;
            res.expect(exists, "brute-force search found no 18-letter connector for w=" + w + " u=" + u);
            if (!res.passed) return res;
        }
    }
    res.payload = json{{"seed", seed},         {"rule_sets", rule_sets},  {"word_len", word_len},
                       {"k", k},               {"members", members_total}, {"pairs", total_pairs},
                       {"brute_force_samples", brute_samples}, {"direct_glue_samples", direct_glue}};
    return res;
}

// ---------------------------------------------------------------------------
// code-suite: recognizability, admissibility, gap constants
// ---------------------------------------------------------------------------

inline SuiteResult run_code_suite(std::uint64_t) {
    SuiteResult res;
    res.name = "code-suite";
    json report = json::object();

    json good = json::array();
    for (std::string name : {"code2", "code4a", "code4b", "pow2:1", "pow2:2", "pow2:3", "pow2:4"}) {
        Code c = builtin_code(name);
        auto rec = is_recognizable(c);
        auto adm = is_admissible(c);
        res.expect(rec.recognizable, name + " is not recognizable");
        res.expect(adm.admissible, name + " is not admissible: " + adm.reason);
        good.push_back(json{{"code", name}, {"q", *c.uniform_q()}, {"r", c.hash_len()}});
    }
    report["admissible"] = good;

    Code shifty({{"#", "0"}, {"a", "00"}}, "#");
    auto rec1 = is_recognizable(shifty);
    res.expect(!rec1.recognizable && rec1.witness.has_value(), "{#:0,a:00} should fail recognizability");
    if (rec1.witness) report["shift_witness"] = ambiguity_witness_to_json(*rec1.witness);

    Code overlapping({{"#", "1"}, {"a", "10"}, {"b", "01"}}, "#");
    auto rec2 = is_recognizable(overlapping);
    res.expect(!rec2.recognizable && rec2.witness.has_value(), "the overlapping code should fail recognizability");
    if (rec2.witness) report["overlap_witness"] = ambiguity_witness_to_json(*rec2.witness);

    Code c8 = builtin_code("code8");
    auto adm8 = is_admissible(c8);
    res.expect(!adm8.admissible && adm8.reason.find("a1") != std::string::npos &&
                   adm8.reason.find("a2") != std::string::npos,
               "code8 should report its duplicate block pair");
    report["code8_reason"] = adm8.reason;

    struct GapCase {
        const char* name;
        long long q, r, expected;
    };
    for (GapCase g : {GapCase{"code2", 3, 1, 18}, GapCase{"code4a", 7, 5, 94}, GapCase{"pow2:1", 5, 1, 30},
                      GapCase{"code8-lengths", 11, 9, 234}}) {
        long long formula = 6 * std::max(g.q, g.r) + (2 * g.q * g.r - 2 * g.q - g.r + 1);
        res.expect(formula == g.expected, std::string(g.name) + " formula re-evaluation mismatch");
        res.expect(gap_from_lengths(g.q, g.r) == g.expected, std::string(g.name) + " gap_from_lengths mismatch");
        if (std::string(g.name) != "code8-lengths")
            res.expect(gap_constant(builtin_code(g.name)) == g.expected, std::string(g.name) + " gap_constant mismatch");
    }
    report["gaps"] = json{{"code2", 18}, {"code4a", 94}, {"pow2:1", 30}, {"code8-lengths", 234}};

    res.payload = report;
    return res;
}

// ---------------------------------------------------------------------------
// group-relations: involutions, cross-commutation, free-product witnesses
// ---------------------------------------------------------------------------

namespace detail {

inline Word random_window(const Alphabet& a, SplitMix64& rng, std::size_t min_len, std::size_t max_len) {
    std::size_t len = min_len + rng.below(max_len - min_len + 1);
    Word w(len);
    for (auto& s : w) s = static_cast<SymbolId>(rng.below(a.size()));
    return w;
}

} // namespace detail

inline SuiteResult run_group_relations(std::uint64_t seed) {
    SuiteResult res;
    res.name = "group-relations";
    SplitMix64 rng(seed);

    long long involution_windows = 0, involution_stars = 0, commute_checks = 0, witness_words = 0;
    for (GeneratorFamily family : {GeneratorFamily::boyle4, GeneratorFamily::boyle8}) {
        for (const std::string& name : generator_names(family)) {
            BlockCode g = generator(family, name);
            BlockCode gg = compose(g, g);
            const Alphabet& a = g.alphabet();
            for (int w = 0; w < 100; ++w) {
                Word window = detail::random_window(a, rng, 5, 64);
                Word out = gg.apply_window(window);
                Word center(window.begin() + 2, window.end() - 2);
                ++involution_windows;
                res.expect(out == center, g.name() + " is not an involution on a seeded window");
            }
            auto nonhash = a.nonhash_symbols();
            for_each_word(nonhash, 6, [&](const Word& w) {
                ++involution_stars;
                if (star_map(gg, w) != w) {
                    res.fail(g.name() + " star involution fails on " + a.format_word(w));
                    return false;
                }
                return true;
            });
            if (!res.passed) return res;
        }
    }

    // boyle8 cross-family commutation: identical composed tables both ways
    for (const std::string& s : {"b1", "c1", "d1"})
        for (const std::string& t : {"b2", "c2", "d2"}) {
            BlockCode fs = generator(GeneratorFamily::boyle8, s);
            BlockCode ft = generator(GeneratorFamily::boyle8, t);
            BlockCode st = compose(fs, ft), ts = compose(ft, fs);
            ++commute_checks;
            res.expect(st.table() == ts.table(), s + " and " + t + " do not commute");
            for (int w = 0; w < 10; ++w) {
                Word window = detail::random_window(fs.alphabet(), rng, 5, 64);
                ++commute_checks;
                res.expect(st.apply_window(window) == ts.apply_window(window),
                           s + "/" + t + " window disagreement");
            }
        }

    // every reduced word of length <= 5 moves long a-runs: position k reads
    // the k-th letter's swap symbol, everything past k stays a
    Alphabet b4 = boyle4_alphabet();
    SymbolId a_sym = b4.require("a");
    for (std::size_t len = 1; len <= 5; ++len) {
        for (const auto& letters : reduced_words(GeneratorFamily::boyle4, len)) {
            GroupWord gw{GeneratorFamily::boyle4, letters};
            auto chain = generator_chain(gw);
            Word run(len + 1, a_sym);
            Word image = star_chain(chain, run);
            ++witness_words;
            bool ok = image.size() == run.size() && image[len - 1] == b4.require(letters.back());
            for (std::size_t p = len; p < image.size() && ok; ++p) ok = image[p] == a_sym;
            res.expect(ok, "a-run witness failed for word " + [&] {
                std::string s;
                for (const auto& l : letters) s += l;
                return s;
            }());
        }
    }

    res.payload = json{{"seed", seed},
                       {"involution_windows", involution_windows},
                       {"involution_star_words", involution_stars},
                       {"commutation_checks", commute_checks},
                       {"reduced_witness_words", witness_words}};
    return res;
}

// ---------------------------------------------------------------------------
// induced-condensed: the induced action reproduces the condensed family
// ---------------------------------------------------------------------------

inline SuiteResult run_induced_condensed(std::uint64_t) {
    SuiteResult res;
    res.name = "induced-condensed";
    Alphabet alpha = condensed_alphabet();
    RuleSet r0 = condensed_rules(0, alpha);
    auto nonhash = alpha.nonhash_symbols();
    json per_n = json::array();

    for (int n = 1; n <= 5; ++n) {
        BlockCode fn = condensed_generator(n);
        std::size_t L = static_cast<std::size_t>(2 * n + 3);
        RuleSet ind = induced_rules(fn, r0, L);
        RuleSet rn = condensed_rules(n, alpha);

        long long compared = 0;
        bool equal = true;
        for_each_word(nonhash, L, [&](const Word& w) {
            ++compared;
            if (rule_contains(ind, w) != rule_contains(rn, w)) {
                equal = false;
                res.fail("n=" + std::to_string(n) + ": induced and condensed rules differ at " + alpha.format_word(w));
                return false;
            }
            return true;
        });
        res.expect(equal, "induced rules mismatch at n=" + std::to_string(n));

        auto agree = lang_agree_upto(r0, rn, static_cast<std::size_t>(2 * n - 1));
        res.expect(agree.agree, "languages differ below 2n-1 at n=" + std::to_string(n));

        Word excluded;
        excluded.push_back(alpha.hash());
        for (int i = 0; i < 2 * n - 1; ++i) excluded.push_back(alpha.require("a"));
        excluded.push_back(alpha.hash());
        res.expect(!lang_contains(rn, excluded),
                   "#a^(2n-1)# should leave the language at n=" + std::to_string(n));
        res.expect(lang_contains(r0, excluded), "#a^(2n-1)# should be in the base language");

        // word-level soundness of the induced action
        RuleSet ind9 = induced_rules(fn, r0, std::max<std::size_t>(L, 9));
        long long soundness = 0;
        for_each_word(nonhash, 7, [&](const Word& w) {
            Word framed;
            framed.push_back(alpha.hash());
            framed.insert(framed.end(), w.begin(), w.end());
            framed.push_back(alpha.hash());
            Word image = star_map(fn, w);
            Word framed_image;
            framed_image.push_back(alpha.hash());
            framed_image.insert(framed_image.end(), image.begin(), image.end());
            framed_image.push_back(alpha.hash());
            ++soundness;
            if (lang_contains(r0, framed) != lang_contains(ind9, framed_image)) {
                res.fail("soundness fails at n=" + std::to_string(n) + ", w=" + alpha.format_word(w));
                return false;
            }
            return true;
        });
        res.checks += soundness;
        if (!res.passed) return res;

        per_n.push_back(json{{"n", n},
                             {"rule_words_compared", compared},
                             {"agree_upto", 2 * n - 1},
                             {"excluded", "#" + std::string(static_cast<std::size_t>(2 * n - 1), 'a') + "#"},
                             {"soundness_words", soundness}});
    }
    res.payload = json{{"cases", per_n}};
    return res;
}

// ---------------------------------------------------------------------------
// measure-surrogate: star maps permute each length class
// ---------------------------------------------------------------------------

inline SuiteResult run_measure_surrogate(std::uint64_t) {
    SuiteResult res;
    res.name = "measure-surrogate";
    long long bijection_checks = 0, census_words = 0;

    for (GeneratorFamily family : {GeneratorFamily::boyle4, GeneratorFamily::boyle8}) {
        Alphabet alpha = family == GeneratorFamily::boyle4 ? boyle4_alphabet() : boyle8_alphabet();
        std::vector<std::vector<std::string>> words;
        for (std::size_t len = 1; len <= 3; ++len)
            for (auto& w : reduced_words(family, len)) words.push_back(w);

        for (const auto& letters : words) {
            GroupWord gw{family, letters};
            auto chain = generator_chain(gw);
            for (std::size_t len = 1; len <= 6; ++len) {
                ++bijection_checks;
                res.expect(star_bijection_check_chain(chain, alpha, len), "star map is not a bijection at length " +
                                                                              std::to_string(len));
                if (!res.passed) return res;
            }
            std::size_t census_len = letters.size() + 1;
            std::size_t fixed = fixed_word_count_chain(chain, alpha, census_len);
            std::size_t total = 1;
            for (std::size_t i = 0; i < census_len; ++i) total *= alpha.size() - 1;
            ++census_words;
            res.expect(fixed < total, "a non-identity word fixes every word of length " + std::to_string(census_len));
        }

        // identity reference: every word fixed
        auto id = identity_block_code(alpha);
        res.expect(star_bijection_check(id, 4), "identity fails the bijection check");
    }

    for (int n = 1; n <= 3; ++n) {
        BlockCode fn = condensed_generator(n);
        for (std::size_t len = 1; len <= 6; ++len) {
            ++bijection_checks;
            res.expect(star_bijection_check(fn, len),
                       "condensed:" + std::to_string(n) + " is not a bijection at length " + std::to_string(len));
        }
    }
    res.payload = json{{"bijection_checks", bijection_checks}, {"census_words", census_words}};
    return res;
}

// ---------------------------------------------------------------------------
// oxtoby-structure
// ---------------------------------------------------------------------------

inline SuiteResult run_oxtoby_structure(std::uint64_t seed) {
    SuiteResult res;
    res.name = "oxtoby-structure";
    SplitMix64 rng(seed);

    auto closed = oxtoby_window(oxtoby_points(7), -364, 364, 7, OxtobyMethod::closed_form);
    auto staged = oxtoby_window(oxtoby_points(7), -364, 364, 7, OxtobyMethod::stagewise);
    res.expect(closed.entries == staged.entries, "stagewise and closed-form windows differ on [-364,364]");

    long long per_checks = 0;
    for (int i = 1; i <= 4; ++i) {
        long long m = shiftspec::detail::pow3(i);
        long long span = shiftspec::detail::pow3(i + 1);
        long long reach = 2 * span;
        auto w = oxtoby_window(oxtoby_points(i + 2), -reach, span - 1 + reach, i + 2);
        std::vector<long long> periodic = per_power_positions(i, 0, span - 1);
        std::set<long long> periodic_set(periodic.begin(), periodic.end());
        for (long long j = 0; j < span; ++j) {
            bool expected = periodic_set.count(j) > 0;
            bool actual = per_p_window_check(w, m, j);
            ++per_checks;
            res.expect(actual == expected, "periodic-part mismatch at i=" + std::to_string(i) + ", j=" + std::to_string(j));
            if (!res.passed) return res;
        }
    }

    // midpoint digit sequence
    DigitSequence mid;
    for (int i = 1; i <= 8; ++i) mid.digits.push_back((shiftspec::detail::pow3(i) - 1) / 2);
    auto lemma_mid = lemma_oxt_check(oxtoby_points(9), mid, 0, 1, 8);
    res.expect(lemma_mid.ok(), "midpoint digit sequence fails lemma check: " + lemma_mid.detail);

    long long seeded_prefixes = 0;
    for (int t = 0; t < 10; ++t) {
        auto pre = random_aperiodic_digit_prefix(8, rng);
        for (int i = pre.i0; i <= 8; ++i)
            res.expect(aperiodic_candidate(pre.digits, i) ==
                           ((shiftspec::detail::pow3(i) - 1) / 2 - pre.digits.digits[static_cast<std::size_t>(i - 1)] +
                            shiftspec::detail::pow3(i)) % shiftspec::detail::pow3(i),
                       "aperiodic candidate disagrees with the digit construction");
        auto lemma = lemma_oxt_check(oxtoby_points(9), pre.digits, pre.k, pre.i0, 8);
        ++seeded_prefixes;
        res.expect(lemma.ok(), "seeded digit prefix " + std::to_string(t) + " fails: " + lemma.detail);
    }

    // eventually constant digits correspond to a Toeplitz shift and are rejected
    DigitSequence constant;
    for (int i = 1; i <= 6; ++i) constant.digits.push_back(2);
    auto lemma_const = lemma_oxt_check(oxtoby_points(8), constant, 0, 1, 6);
    res.expect(lemma_const.status == LemmaOxtStatus::precondition_violated,
               "eventually constant digits should be rejected by the precondition gate");

    res.payload = json{{"seed", seed},
                       {"method_window", json{{"lo", -364}, {"hi", 364}, {"depth", 7}}},
                       {"periodic_position_checks", per_checks},
                       {"seeded_digit_prefixes", seeded_prefixes}};
    return res;
}

} // namespace suites

inline std::vector<std::string> suite_names() {
    return {"spec-gap2", "flat-gap", "code-suite", "group-relations", "induced-condensed",
            "measure-surrogate", "oxtoby-structure"};
}

inline SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "spec-gap2") return suites::run_spec_gap2(seed);
    if (name == "flat-gap") return suites::run_flat_gap(seed);
    if (name == "code-suite") return suites::run_code_suite(seed);
    if (name == "group-relations") return suites::run_group_relations(seed);
    if (name == "induced-condensed") return suites::run_induced_condensed(seed);
    if (name == "measure-surrogate") return suites::run_measure_surrogate(seed);
    if (name == "oxtoby-structure") return suites::run_oxtoby_structure(seed);
    throw input_error("unknown suite: " + name);
}

} // namespace shiftspec
