// Command-line front end: every library operation behind a subcommand tree
// with deterministic JSON on stdout. Exit codes: 0 ok, 1 property failed,
// 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shiftspec/block_code.hpp"
#include "shiftspec/codes.hpp"
#include "shiftspec/corpus.hpp"
#include "shiftspec/json_io.hpp"
#include "shiftspec/oxtoby.hpp"
#include "shiftspec/rules.hpp"
#include "shiftspec/suites.hpp"

namespace {

using json = nlohmann::json;
using namespace shiftspec;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_json_arg(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return json::parse(spec);
    return json::parse(slurp(spec));
}

RuleSet load_rules(const std::string& spec) { return rule_set_from_json(load_json_arg(spec)); }

Code load_code(const std::string& spec) {
    if (spec == "code2" || spec == "code4a" || spec == "code4b" || spec == "code8" || spec.rfind("pow2", 0) == 0)
        return builtin_code(spec);
    return code_from_json(load_json_arg(spec));
}

BlockCode load_map(const std::string& spec) {
    if (spec.rfind("boyle4:", 0) == 0 || spec.rfind("boyle8:", 0) == 0 || spec.rfind("condensed:", 0) == 0)
        return builtin_block_code(spec);
    return block_code_from_json(load_json_arg(spec));
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::size_t end = comma == std::string::npos ? s.size() : comma;
        out.push_back(s.substr(pos, end - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

struct Output {
    bool pretty = false;
    int exit_code = 0;

    void emit(const json& payload) const { std::cout << (pretty ? payload.dump(2) : payload.dump()) << "\n"; }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for rule-set shift spaces, binary codes and their specification gaps"};
    app.require_subcommand(1);
    Output out;
    std::uint64_t seed = 1;
    bool json_flag = false;
    app.add_flag("--json", json_flag, "compact JSON output (the default)");
    app.add_flag("--pretty", out.pretty, "indent JSON output");
    app.add_option("--seed", seed, "seed for all randomized corpora");

    // --- code ---------------------------------------------------------------
    auto* code_cmd = app.add_subcommand("code", "binary codes");
    code_cmd->require_subcommand(1);
    std::string code_spec;

    auto* code_check = code_cmd->add_subcommand("check", "recognizability and admissibility");
    code_check->add_option("--code", code_spec, "builtin name, file, - or inline JSON")->required();
    code_check->callback([&] {
        Code c = load_code(code_spec);
        auto rec = is_recognizable(c);
        auto adm = is_admissible(c);
        json payload{{"recognizable", rec.recognizable}, {"admissible", adm.admissible}};
        if (rec.witness) payload["witness"] = ambiguity_witness_to_json(*rec.witness);
        if (!adm.admissible) payload["reason"] = adm.reason;
        if (auto q = c.uniform_q()) payload["q"] = *q;
        payload["r"] = c.hash_len();
        out.emit(payload);
    });

    auto* code_gen = code_cmd->add_subcommand("gen", "emit a builtin code");
    code_gen->add_option("--builtin", code_spec, "code2|code4a|code4b|code8|pow2:N")->required();
    code_gen->callback([&] { out.emit(code_to_json(builtin_code(code_spec))); });

    auto* code_gap = code_cmd->add_subcommand("gap", "specification gap constant");
    code_gap->add_option("--builtin,--code", code_spec, "builtin name, file, - or inline JSON")->required();
    code_gap->callback([&] { out.emit(json{{"k", gap_constant(load_code(code_spec))}}); });

    // --- lang ---------------------------------------------------------------
    auto* lang_cmd = app.add_subcommand("lang", "language membership and gluing");
    lang_cmd->require_subcommand(1);
    std::string rules_spec, word_arg, w_arg, u_arg, lang_code_spec;
    bool flat = false;

    auto* lang_contains_cmd = lang_cmd->add_subcommand("contains", "membership in Lang(X(R)) or its flat image");
    lang_contains_cmd->add_option("--rules", rules_spec, "rule set JSON (file, - or inline)")->required();
    lang_contains_cmd->add_option("--word", word_arg, "query word")->required();
    lang_contains_cmd->add_flag("--flat", flat, "query the flat language");
    lang_contains_cmd->add_option("--code", lang_code_spec, "code for --flat");
    lang_contains_cmd->callback([&] {
        RuleSet r = load_rules(rules_spec);
        if (flat) {
            Code c = load_code(lang_code_spec);
            out.emit(json{{"word", word_arg}, {"contains", flat_lang_contains(c, r, word_arg)}});
        } else {
            Word y = r.alphabet().parse_word(word_arg);
            out.emit(json{{"word", word_arg}, {"contains", lang_contains(r, y)}});
        }
    });

    auto* lang_glue = lang_cmd->add_subcommand("glue", "connector between two language words");
    lang_glue->add_option("--rules", rules_spec, "rule set JSON (file, - or inline)")->required();
    lang_glue->add_option("--w", w_arg, "left word")->required();
    lang_glue->add_option("--u", u_arg, "right word")->required();
    lang_glue->add_flag("--flat", flat, "glue in the flat language");
    lang_glue->add_option("--code", lang_code_spec, "code for --flat");
    lang_glue->callback([&] {
        RuleSet r = load_rules(rules_spec);
        if (flat) {
            Code c = load_code(lang_code_spec);
            GapCertificate cert = glue_flat(c, r, w_arg, u_arg);
            json payload = gap_certificate_to_json(cert);
            payload["joined_in_language"] = flat_lang_contains(c, r, w_arg + cert.connector + u_arg);
            out.emit(payload);
        } else {
            const Alphabet& a = r.alphabet();
            Word w = a.parse_word(w_arg), u = a.parse_word(u_arg);
            Word v = glue2(r, w, u);
            Word joined = w;
            joined.insert(joined.end(), v.begin(), v.end());
            joined.insert(joined.end(), u.begin(), u.end());
            out.emit(json{{"v", a.format_word(v)}, {"joined", a.format_word(joined)},
                          {"joined_in_language", lang_contains(r, joined)}});
        }
    });

    // --- aut ----------------------------------------------------------------
    auto* aut_cmd = app.add_subcommand("aut", "block maps and #-preserving automorphisms");
    aut_cmd->require_subcommand(1);
    std::vector<std::string> map_specs;
    std::string family_arg, letters_arg;
    std::size_t max_len = 6;
    bool with_table = false;

    auto* aut_apply = aut_cmd->add_subcommand("apply", "apply a block map to a window");
    aut_apply->add_option("--map", map_specs, "builtin family:name, file, - or inline JSON")->required();
    aut_apply->add_option("--word", word_arg, "window")->required();
    aut_apply->callback([&] {
        BlockCode f = load_map(map_specs.at(0));
        const Alphabet& a = f.alphabet();
        Word w = a.parse_word(word_arg);
        out.emit(json{{"out", a.format_word(f.apply_window(w))}});
    });

    auto* aut_star = aut_cmd->add_subcommand("star", "word-level star map");
    aut_star->add_option("--map", map_specs, "builtin family:name, file, - or inline JSON")->required();
    aut_star->add_option("--word", word_arg, "#-free word")->required();
    aut_star->callback([&] {
        BlockCode f = load_map(map_specs.at(0));
        const Alphabet& a = f.alphabet();
        out.emit(json{{"out", a.format_word(star_map(f, a.parse_word(word_arg)))}});
    });

    auto* aut_compose = aut_cmd->add_subcommand("compose", "compose block maps (first option applied last)");
    aut_compose->add_option("--map", map_specs, "two or more maps")->required()->expected(2, 16);
    aut_compose->add_flag("--table", with_table, "emit the full table");
    aut_compose->callback([&] {
        BlockCode acc = load_map(map_specs.back());
        for (std::size_t i = map_specs.size() - 1; i-- > 0;) acc = compose(load_map(map_specs[i]), acc);
        out.emit(block_code_to_json(acc, with_table));
    });

    auto* aut_induce = aut_cmd->add_subcommand("induce", "induced action on a rule set");
    aut_induce->add_option("--map", map_specs, "#-preserving map")->required();
    aut_induce->add_option("--rules", rules_spec, "rule set JSON")->required();
    aut_induce->add_option("--max-len", max_len, "materialization bound");
    aut_induce->callback([&] {
        BlockCode f = load_map(map_specs.at(0));
        RuleSet r = load_rules(rules_spec);
        out.emit(rule_set_to_json(induced_rules(f, r, max_len)));
    });

    auto* aut_relations = aut_cmd->add_subcommand("relations", "involution and commutation relations");
    aut_relations->add_option("--family", family_arg, "boyle4|boyle8")->required();
    aut_relations->callback([&] {
        GeneratorFamily family = family_arg == "boyle4" ? GeneratorFamily::boyle4 : GeneratorFamily::boyle8;
        if (family_arg != "boyle4" && family_arg != "boyle8") throw input_error("unknown family: " + family_arg);
        SplitMix64 rng(seed);
        json checks = json::array();
        bool all_ok = true;
        for (const std::string& name : generator_names(family)) {
            BlockCode g = generator(family, name);
            BlockCode gg = compose(g, g);
            bool ok = true;
            for (int t = 0; t < 50 && ok; ++t) {
                Word w(5 + rng.below(60), 0);
                for (auto& s : w) s = static_cast<SymbolId>(rng.below(g.alphabet().size()));
                Word mid(w.begin() + 2, w.end() - 2);
                ok = gg.apply_window(w) == mid;
            }
            checks.push_back(json{{"generator", name}, {"involution", ok}});
            all_ok = all_ok && ok;
        }
        if (family == GeneratorFamily::boyle8) {
            for (const std::string& s : {"b1", "c1", "d1"})
                for (const std::string& t : {"b2", "c2", "d2"}) {
                    BlockCode fs = generator(family, s), ft = generator(family, t);
                    bool ok = compose(fs, ft).table() == compose(ft, fs).table();
                    checks.push_back(json{{"pair", s + "," + t}, {"commute", ok}});
                    all_ok = all_ok && ok;
                }
        }
        out.emit(json{{"family", family_arg}, {"ok", all_ok}, {"checks", checks}});
        if (!all_ok) out.exit_code = 1;
    });

    auto* aut_witness = aut_cmd->add_subcommand("witness", "first word moved by a group word's star map");
    aut_witness->add_option("--family", family_arg, "boyle4|boyle8")->required();
    aut_witness->add_option("--letters", letters_arg, "comma-separated generator letters")->required();
    aut_witness->add_option("--max-len", max_len, "search bound");
    aut_witness->callback([&] {
        if (family_arg != "boyle4" && family_arg != "boyle8") throw input_error("unknown family: " + family_arg);
        GroupWord gw{family_arg == "boyle4" ? GeneratorFamily::boyle4 : GeneratorFamily::boyle8,
                     split_commas(letters_arg)};
        auto chain = generator_chain(gw);
        const Alphabet& a = chain.empty() ? boyle4_alphabet() : chain[0].alphabet();
        std::optional<Word> witness;
        for_each_word(a.nonhash_symbols(), max_len, [&](const Word& w) {
            if (star_chain(chain, w) != w) {
                witness = w;
                return false;
            }
            return true;
        });
        json payload{{"word", group_word_to_json(gw)}, {"reduced", gw.is_reduced()}, {"max_len", max_len}};
        payload["almost_trivial_upto"] = !witness.has_value();
        if (witness) {
            payload["witness"] = a.format_word(*witness);
            payload["image"] = a.format_word(star_chain(chain, *witness));
        }
        out.emit(payload);
    });

    // --- condensed ----------------------------------------------------------
    auto* condensed_cmd = app.add_subcommand("condensed", "the condensed-point rule family");
    condensed_cmd->require_subcommand(1);
    int n_arg = 1;
    auto* condensed_verify = condensed_cmd->add_subcommand("verify", "agreement and exclusion checks for R_n");
    condensed_verify->add_option("--n", n_arg, "family index")->required();
    condensed_verify->callback([&] {
        if (n_arg < 1) throw input_error("--n must be at least 1");
        Alphabet alpha = condensed_alphabet();
        RuleSet r0 = condensed_rules(0, alpha);
        RuleSet rn = condensed_rules(n_arg, alpha);
        BlockCode fn = condensed_generator(n_arg);
        std::size_t L = static_cast<std::size_t>(2 * n_arg + 3);
        RuleSet ind = induced_rules(fn, r0, L);
        bool induced_matches = true;
        for_each_word(alpha.nonhash_symbols(), L, [&](const Word& w) {
            if (rule_contains(ind, w) != rule_contains(rn, w)) {
                induced_matches = false;
                return false;
            }
            return true;
        });
        auto agree = lang_agree_upto(r0, rn, static_cast<std::size_t>(2 * n_arg - 1));
        auto wider = lang_agree_upto(r0, rn, static_cast<std::size_t>(2 * n_arg + 1));
        Word excluded = alpha.parse_word("#" + std::string(static_cast<std::size_t>(2 * n_arg - 1), 'a') + "#");
        bool excluded_ok = !lang_contains(rn, excluded) && lang_contains(r0, excluded);
        json payload{{"n", n_arg},
                     {"agree_upto", 2 * n_arg - 1},
                     {"agree", agree.agree},
                     {"excluded", alpha.format_word(excluded)},
                     {"excluded_left_language", excluded_ok},
                     {"induced_matches", induced_matches}};
        if (!wider.agree && wider.witness) payload["first_disagreement"] = alpha.format_word(*wider.witness);
        out.emit(payload);
        if (!(agree.agree && excluded_ok && induced_matches)) out.exit_code = 1;
    });

    // --- oxtoby ---------------------------------------------------------------
    auto* ox_cmd = app.add_subcommand("oxtoby", "ternary sequence windows and digits");
    ox_cmd->require_subcommand(1);
    std::string points_arg = "x1,x2,x3", digits_arg, method_arg = "closed";
    long long lo = 0, hi = 0, s_arg = 0, k_arg = 0;
    int depth = 1, i_arg = 1, m_arg = 1, i0_arg = 1, imax_arg = 1;

    auto* ox_window = ox_cmd->add_subcommand("window", "a window of the sequence");
    ox_window->add_option("--points", points_arg, "comma-separated distinct points")->required();
    ox_window->add_option("--lo", lo)->required();
    ox_window->add_option("--hi", hi)->required();
    ox_window->add_option("--depth", depth)->required();
    ox_window->add_option("--method", method_arg, "closed|stagewise");
    ox_window->callback([&] {
        OxtobyMethod method = method_arg == "stagewise" ? OxtobyMethod::stagewise : OxtobyMethod::closed_form;
        out.emit(oxtoby_window_to_json(oxtoby_window(split_commas(points_arg), lo, hi, depth, method)));
    });

    auto* ox_per = ox_cmd->add_subcommand("per", "3^i-periodic positions in a range");
    ox_per->add_option("--i", i_arg)->required();
    ox_per->add_option("--lo", lo)->required();
    ox_per->add_option("--hi", hi)->required();
    ox_per->callback([&] { out.emit(json{{"i", i_arg}, {"positions", per_power_positions(i_arg, lo, hi)}}); });

    auto* ox_digits = ox_cmd->add_subcommand("digits", "odometer digits of a shift");
    ox_digits->add_option("--s", s_arg)->required();
    ox_digits->add_option("--m", m_arg)->required();
    ox_digits->callback([&] { out.emit(digit_sequence_to_json(shift_digits(s_arg, m_arg))); });

    auto* ox_lemma = ox_cmd->add_subcommand("lemma", "aperiodic-position reading check");
    ox_lemma->add_option("--points", points_arg)->required();
    ox_lemma->add_option("--digits", digits_arg, "comma-separated coherent digits")->required();
    ox_lemma->add_option("--k", k_arg)->required();
    ox_lemma->add_option("--i0", i0_arg)->required();
    ox_lemma->add_option("--imax", imax_arg)->required();
    ox_lemma->callback([&] {
        DigitSequence d;
        for (const std::string& part : split_commas(digits_arg)) d.digits.push_back(std::stoll(part));
        auto res = lemma_oxt_check(split_commas(points_arg), d, k_arg, i0_arg, imax_arg);
        std::string status = res.status == LemmaOxtStatus::passed ? "passed"
                             : res.status == LemmaOxtStatus::failed ? "failed" : "precondition_violated";
        json payload{{"status", status}};
        if (!res.detail.empty()) payload["detail"] = res.detail;
        json cands = json::array();
        for (int i = i0_arg; i <= imax_arg && static_cast<std::size_t>(i) <= d.digits.size(); ++i)
            cands.push_back(aperiodic_candidate(d, i));
        payload["aperiodic_candidates"] = cands;
        out.emit(payload);
        if (res.status == LemmaOxtStatus::failed) out.exit_code = 1;
    });

    // --- suite ----------------------------------------------------------------
    auto* suite_cmd = app.add_subcommand("suite", "acceptance suites");
    suite_cmd->require_subcommand(1);
    std::string suite_name;
    auto* suite_list = suite_cmd->add_subcommand("list", "list suite names");
    suite_list->callback([&] { out.emit(json{{"suites", suite_names()}}); });
    auto* suite_run = suite_cmd->add_subcommand("run", "run one acceptance suite");
    suite_run->add_option("--name", suite_name, "suite name")->required();
    suite_run->callback([&] {
        SuiteResult r = run_suite(suite_name, seed);
        out.emit(suite_result_to_json(r));
        if (!r.passed) out.exit_code = 1;
    });

    // global flags may follow the subcommand
    for (CLI::App* level1 : {code_cmd, lang_cmd, aut_cmd, condensed_cmd, ox_cmd, suite_cmd}) {
        level1->fallthrough();
        for (CLI::App* level2 : level1->get_subcommands([](CLI::App*) { return true; })) level2->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return out.exit_code;
}
