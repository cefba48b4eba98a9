#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "shiftspec/alphabet.hpp"
#include "shiftspec/block_code.hpp"
#include "shiftspec/codes.hpp"
#include "shiftspec/oxtoby.hpp"
#include "shiftspec/rules.hpp"

namespace shiftspec {

using json = nlohmann::json;

inline json alphabet_to_json(const Alphabet& a) { return json(a.names()); }

inline Alphabet alphabet_from_json(const json& names, const std::string& hash) {
    return Alphabet(names.get<std::vector<std::string>>(), hash);
}

// {"alphabet":["#","a","b"],"hash":"#","kind":"finite","members":["a","bab"],
//  "max_len":3,"beyond":"exclude"}: non-finite kinds carry "marker" (and
// condensed additionally "n" and "swap") instead of the member list.
inline json rule_set_to_json(const RuleSet& r) {
    const Alphabet& a = r.alphabet();
    json out;
    out["alphabet"] = alphabet_to_json(a);
    out["hash"] = a.name(a.hash());
    switch (r.kind()) {
    case RuleKind::finite: {
        out["kind"] = "finite";
        json members = json::array();
        for (const Word& w : r.members()) members.push_back(a.format_word(w));
        out["members"] = members;
        out["max_len"] = r.max_len();
        out["beyond"] = r.beyond() == BeyondPolicy::exclude ? "exclude" : "include";
        break;
    }
    case RuleKind::all_a_odd:
        out["kind"] = "all_a_odd";
        out["marker"] = a.name(r.marker());
        break;
    case RuleKind::condensed:
        out["kind"] = "condensed";
        out["n"] = r.n();
        out["marker"] = a.name(r.marker());
        out["swap"] = a.name(r.swap_symbol());
        break;
    }
    return out;
}

inline RuleSet rule_set_from_json(const json& j) {
    Alphabet a = alphabet_from_json(j.at("alphabet"), j.at("hash").get<std::string>());
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") {
        std::set<Word> members;
        int max_len = j.value("max_len", 0);
        for (const auto& m : j.value("members", json::array())) {
            Word w = a.parse_word(m.get<std::string>());
            max_len = std::max<int>(max_len, static_cast<int>(w.size()));
            members.insert(std::move(w));
        }
        BeyondPolicy beyond = j.value("beyond", std::string("exclude")) == "include" ? BeyondPolicy::include
                                                                                     : BeyondPolicy::exclude;
        return RuleSet::finite(std::move(a), std::move(members), max_len, beyond);
    }
    if (kind == "all_a_odd") {
        SymbolId marker = a.require(j.value("marker", std::string("a")));
        return RuleSet::all_odd_runs(std::move(a), marker);
    }
    if (kind == "condensed") {
        SymbolId marker = a.require(j.value("marker", std::string("a")));
        SymbolId swp = a.require(j.value("swap", std::string("b")));
        return RuleSet::condensed(std::move(a), j.at("n").get<int>(), marker, swp);
    }
    throw input_error("unknown rule set kind: " + kind);
}

// {"hash":"#","blocks":{"a":"010","b":"011","#":"0"}}
inline json code_to_json(const Code& c) {
    json blocks = json::object();
    for (std::size_t i = 0; i < c.size(); ++i) blocks[c.name(static_cast<SymbolId>(i))] = c.block(static_cast<SymbolId>(i));
    return json{{"hash", c.name(c.hash())}, {"blocks", blocks}};
}

inline Code code_from_json(const json& j) {
    std::vector<std::pair<std::string, std::string>> table;
    for (auto it = j.at("blocks").begin(); it != j.at("blocks").end(); ++it)
        table.push_back({it.key(), it.value().get<std::string>()});
    return Code(std::move(table), j.at("hash").get<std::string>());
}

// {"alphabet":[...],"radius":1,"table":{"aaa":"a",...}} or {"builtin":"boyle4:b"}
inline json block_code_to_json(const BlockCode& f, bool include_table = true) {
    json out;
    // only plain family:name tags reload through builtin_block_code
    if (!f.name().empty() && f.name().find('*') == std::string::npos) out["builtin"] = f.name();
    else if (!f.name().empty()) out["name"] = f.name();
    out["alphabet"] = alphabet_to_json(f.alphabet());
    out["radius"] = f.radius();
    if (include_table) {
        const Alphabet& a = f.alphabet();
        json table = json::object();
        const std::size_t span = 2 * static_cast<std::size_t>(f.radius()) + 1;
        Word window(span, 0);
        for (std::size_t idx = 0;; ++idx) {
            table[a.format_word(window)] = a.name(f.table()[idx]);
            std::size_t pos = span;
            while (pos > 0 && window[pos - 1] + 1 == a.size()) window[--pos] = 0;
            if (pos == 0) break;
            ++window[pos - 1];
        }
        out["table"] = table;
    }
    return out;
}

inline BlockCode block_code_from_json(const json& j) {
    if (j.contains("builtin") && !j.contains("table")) return builtin_block_code(j.at("builtin").get<std::string>());
    Alphabet a = alphabet_from_json(j.at("alphabet"),
                                    j.contains("hash") ? j.at("hash").get<std::string>() : std::string("#"));
    int radius = j.at("radius").get<int>();
    const json& table = j.at("table");
    return BlockCode::from_rule(a, radius, [&](const Word& w) { return a.require(table.at(a.format_word(w)).get<std::string>()); });
}

// {"family":"boyle8","letters":["b1","c2","b1"]}
inline json group_word_to_json(const GroupWord& gw) {
    return json{{"family", gw.family == GeneratorFamily::boyle4 ? "boyle4" : "boyle8"}, {"letters", gw.letters}};
}

inline GroupWord group_word_from_json(const json& j) {
    GroupWord gw;
    std::string family = j.at("family").get<std::string>();
    if (family == "boyle4") gw.family = GeneratorFamily::boyle4;
    else if (family == "boyle8") gw.family = GeneratorFamily::boyle8;
    else throw input_error("unknown generator family: " + family);
    gw.letters = j.at("letters").get<std::vector<std::string>>();
    return gw;
}

// {"lo":-9,"hi":9,"depth":3,"entries":["x1","_","x1",...]}
inline json oxtoby_window_to_json(const OxtobyWindow& w) {
    json entries = json::array();
    for (int e : w.entries) entries.push_back(e < 0 ? "_" : w.points[static_cast<std::size_t>(e)]);
    return json{{"lo", w.lo}, {"hi", w.hi}, {"depth", w.depth}, {"points", w.points}, {"entries", entries}};
}

// {"k":18,"i":18,"j":0,"v":"000000000000000000"}
inline json gap_certificate_to_json(const GapCertificate& c) {
    return json{{"k", c.k}, {"i", c.i}, {"j", c.j}, {"v", c.connector}};
}

inline json ambiguity_witness_to_json(const AmbiguityWitness& w) {
    return json{{"kind", w.kind}, {"pattern", w.pattern}, {"offset", w.offset}, {"parse_a", w.parse_a},
                {"parse_b", w.parse_b}};
}

inline json digit_sequence_to_json(const DigitSequence& d) { return json{{"digits", d.digits}}; }

} // namespace shiftspec
