#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shiftspec/alphabet.hpp"
#include "shiftspec/errors.hpp"
#include "shiftspec/rules.hpp"

namespace shiftspec {

// A finite assignment of nonempty binary blocks to symbol names, with a
// distinguished # block. Blocks are not required to be pairwise distinct at
// construction time; is_admissible reports violations instead, so flawed
// tables can still be loaded and inspected.
class Code {
public:
    Code(std::vector<std::pair<std::string, std::string>> symbol_blocks, std::string_view hash_name) {
        if (symbol_blocks.size() < 2) throw input_error("a code needs # and at least one other block");
        for (auto& [name, block] : symbol_blocks) {
            if (name.empty()) throw input_error("empty symbol name");
            if (block.empty()) throw input_error("block for " + name + " is empty");
            for (char c : block)
                if (c != '0' && c != '1') throw input_error("block for " + name + " is not binary");
            for (const auto& n : names_)
                if (n == name) throw input_error("duplicate symbol name: " + name);
            names_.push_back(name);
            blocks_.push_back(block);
        }
        bool found = false;
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == hash_name) {
                hash_ = static_cast<SymbolId>(i);
                found = true;
            }
        if (!found) throw input_error("marker symbol not among code symbols");
    }

    std::size_t size() const { return names_.size(); }
    SymbolId hash() const { return hash_; }
    const std::string& name(SymbolId s) const { return names_.at(s); }
    const std::string& block(SymbolId s) const { return blocks_.at(s); }
    const std::vector<std::string>& block_table() const { return blocks_; }
    const std::string& hash_block() const { return blocks_[hash_]; }

    int hash_len() const { return static_cast<int>(blocks_[hash_].size()); }

    // Common length of non-# blocks, when uniform.
    std::optional<int> uniform_q() const {
        std::optional<int> q;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (static_cast<SymbolId>(i) == hash_) continue;
            int len = static_cast<int>(blocks_[i].size());
            if (!q) q = len;
            else if (*q != len) return std::nullopt;
        }
        return q;
    }

    std::size_t max_block_len() const {
        std::size_t m = 0;
        for (const auto& b : blocks_) m = std::max(m, b.size());
        return m;
    }

    Alphabet symbol_alphabet() const { return Alphabet(names_, names_[hash_]); }

    // Symbol whose block is lexicographically smallest among non-# blocks.
    SymbolId first_nonhash_block_symbol() const {
        SymbolId best = hash_;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (static_cast<SymbolId>(i) == hash_) continue;
            if (best == hash_ || blocks_[i] < blocks_[best]) best = static_cast<SymbolId>(i);
        }
        return best;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::string> blocks_;
    SymbolId hash_ = 0;
};

inline std::string flatten_word(const Code& code, std::span<const SymbolId> word) {
    std::string out;
    for (SymbolId s : word) {
        if (s >= code.size()) throw input_error("symbol outside code");
        out += code.block(s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Recognizability
// ---------------------------------------------------------------------------

struct AmbiguityWitness {
    // periodic_shift: repeating `pattern` biinfinitely yields a sequence with
    // two block decompositions whose boundaries differ by `offset`.
    // two_parses: `pattern` itself carries the two distinct decompositions
    // parse_a / parse_b between common boundaries.
    std::string kind;
    std::string pattern;
    int offset = 0;
    std::vector<std::string> parse_a;
    std::vector<std::string> parse_b;
};

struct RecognizabilityResult {
    bool recognizable = true;
    std::optional<AmbiguityWitness> witness;
    explicit operator bool() const { return recognizable; }
};

namespace detail {

// Alignment states for two parses of one biinfinite sequence: the nonempty
// proper suffix of the leading parse's current block that overhangs the
// lagging parse's last boundary. Appending one block on the lagging side
// moves between states; reaching an equal block means the boundaries merge.
struct AlignmentGraph {
    std::vector<std::string> states;
    std::map<std::string, int> index;
    // edge: (target state, appended block); resync[i] set if some block equals states[i]
    std::vector<std::vector<std::pair<int, std::string>>> edges;
    std::vector<bool> resync;

    explicit AlignmentGraph(const std::vector<std::string>& blocks) {
        std::set<std::string> blockset(blocks.begin(), blocks.end());
        std::set<std::string> st;
        for (const auto& b : blockset)
            for (std::size_t k = 1; k < b.size(); ++k) st.insert(b.substr(k));
        states.assign(st.begin(), st.end());
        for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);
        edges.resize(states.size());
        resync.assign(states.size(), false);
        for (std::size_t i = 0; i < states.size(); ++i) {
            const std::string& d = states[i];
            for (const auto& b : blockset) {
                if (b == d) {
                    resync[i] = true;
                } else if (b.size() < d.size() && d.compare(0, b.size(), b) == 0) {
                    edges[i].push_back({index.at(d.substr(b.size())), b});
                } else if (b.size() > d.size() && b.compare(0, d.size(), d) == 0) {
                    edges[i].push_back({index.at(b.substr(d.size())), b});
                }
            }
        }
    }
};

// Replays a sequence of appended blocks from a given starting overhang and
// records both parse rows. Row A starts as the leading row with `lead_block`
// ending `overhang` characters past row B's boundary.
struct AlignmentReplay {
    std::string binary;
    long long end_a = 0, end_b = 0;
    std::vector<std::pair<long long, std::string>> row_a, row_b;

    AlignmentReplay(const std::string& lead_block, const std::string& overhang) {
        binary = lead_block;
        end_a = static_cast<long long>(lead_block.size());
        end_b = end_a - static_cast<long long>(overhang.size());
        row_a.push_back({0, lead_block});
    }

    void append(const std::string& b) {
        bool a_behind = end_a < end_b;
        long long& end = a_behind ? end_a : end_b;
        auto& row = a_behind ? row_a : row_b;
        row.push_back({end, b});
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::size_t pos = static_cast<std::size_t>(end) + i;
            if (pos < binary.size()) {
                // consistency is guaranteed by the graph construction
            } else {
                binary += b[i];
            }
        }
        end += static_cast<long long>(b.size());
    }

    long long behind_end() const { return std::min(end_a, end_b); }
};

} // namespace detail

// Decides whether biinfinite concatenations of blocks decompose uniquely.
// Two failure shapes exist and both are searched: a cycle in the alignment
// graph (two parses whose boundaries never meet, e.g. a shifted periodic
// sequence) and a divergence-to-resync path (one finite word with two block
// decompositions, embeddable in a biinfinite sequence).
inline RecognizabilityResult is_recognizable(const Code& code) {
    std::vector<std::string> blocks(code.block_table());
    detail::AlignmentGraph g(blocks);

    // cycle search
    std::vector<int> color(g.states.size(), 0);
    for (std::size_t root = 0; root < g.states.size(); ++root) {
        if (color[root] != 0) continue;
        std::vector<std::pair<int, std::size_t>> stack{{static_cast<int>(root), 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [v, ei] = stack.back();
            if (ei < g.edges[v].size()) {
                int to = g.edges[v][ei].first;
                std::size_t my_edge = ei;
                ++ei;
                if (color[to] == 1) {
                    // recover the cycle: walk the stack from `to` up to v
                    std::vector<std::pair<int, std::string>> cycle;
                    std::size_t start = 0;
                    while (stack[start].first != to) ++start;
                    for (std::size_t s = start; s + 1 < stack.size(); ++s) {
                        int from = stack[s].first;
                        int next = stack[s + 1].first;
                        for (auto& [t, blk] : g.edges[from])
                            if (t == next) { cycle.push_back({from, blk}); break; }
                    }
                    { // closing edge v -> to
                        cycle.push_back({v, g.edges[v][my_edge].second});
                    }
                    const std::string& d0 = g.states[to];
                    std::string lead;
                    for (const auto& b : blocks)
                        if (b.size() > d0.size() && b.compare(b.size() - d0.size(), d0.size(), d0) == 0) { lead = b; break; }
                    if (lead.empty()) lead = d0; // unreachable for well-formed graphs
                    detail::AlignmentReplay replay(lead, d0);
                    // rotate the cycle so it starts at `to`
                    std::vector<std::string> labels;
                    std::size_t pivot = 0;
                    for (std::size_t s = 0; s < cycle.size(); ++s)
                        if (cycle[s].first == to) { pivot = s; break; }
                    for (std::size_t s = 0; s < cycle.size(); ++s)
                        labels.push_back(cycle[(pivot + s) % cycle.size()].second);
                    long long p1 = -1;
                    std::string pattern;
                    for (int round = 0; round < 2; ++round) {
                        if (round == 1) p1 = replay.behind_end();
                        for (const auto& blk : labels) replay.append(blk);
                    }
                    long long p2 = replay.behind_end();
                    if (p1 >= 0 && p2 > p1 && static_cast<std::size_t>(p2) <= replay.binary.size())
                        pattern = replay.binary.substr(static_cast<std::size_t>(p1), static_cast<std::size_t>(p2 - p1));
                    else
                        pattern = replay.binary;
                    AmbiguityWitness w;
                    w.kind = "periodic_shift";
                    w.pattern = pattern;
                    w.offset = static_cast<int>(d0.size());
                    for (auto& [pos, blk] : replay.row_a)
                        if (pos >= p1 && pos < p2) w.parse_a.push_back(blk);
                    for (auto& [pos, blk] : replay.row_b)
                        if (pos >= p1 && pos < p2) w.parse_b.push_back(blk);
                    return {false, w};
                }
                if (color[to] == 0) {
                    color[to] = 1;
                    stack.push_back({to, 0});
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }

    // divergence-to-resync search (two decompositions of one finite word)
    std::set<std::string> blockset(blocks.begin(), blocks.end());
    std::map<int, std::pair<std::string, std::string>> origin; // state -> (longer, shorter) initial blocks
    std::queue<int> bfs;
    std::map<int, std::pair<int, std::string>> parent;
    for (const auto& b1 : blockset)
        for (const auto& b2 : blockset) {
            if (b1.size() >= b2.size() || b2.compare(0, b1.size(), b1) != 0) continue;
            int st = g.index.at(b2.substr(b1.size()));
            if (!origin.count(st)) {
                origin[st] = {b2, b1};
                bfs.push(st);
            }
        }
    std::set<int> seen;
    for (auto& [st, _] : origin) seen.insert(st);
    int hit = -1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        if (g.resync[v]) { hit = v; break; }
        for (auto& [to, blk] : g.edges[v])
            if (!seen.count(to)) {
                seen.insert(to);
                parent[to] = {v, blk};
                bfs.push(to);
            }
    }
    if (hit >= 0) {
        std::vector<std::string> path;
        int v = hit;
        while (!origin.count(v)) {
            auto& [pv, blk] = parent.at(v);
            path.push_back(blk);
            v = pv;
        }
        std::reverse(path.begin(), path.end());
        auto [lead, lag] = origin.at(v);
        detail::AlignmentReplay replay(lead, lead.substr(lag.size()));
        replay.row_b.push_back({0, lag});
        for (const auto& blk : path) replay.append(blk);
        replay.append(g.states[hit]); // the resyncing block
        AmbiguityWitness w;
        w.kind = "two_parses";
        w.pattern = replay.binary;
        w.offset = 0;
        for (auto& [pos, blk] : replay.row_a) w.parse_a.push_back(blk);
        for (auto& [pos, blk] : replay.row_b) w.parse_b.push_back(blk);
        return {false, w};
    }

    return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Admissibility
// ---------------------------------------------------------------------------

struct AdmissibilityResult {
    bool admissible = true;
    std::string reason; // empty when admissible
    explicit operator bool() const { return admissible; }
};

inline AdmissibilityResult is_admissible(const Code& code) {
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j)
            if (code.block(static_cast<SymbolId>(i)) == code.block(static_cast<SymbolId>(j)))
                return {false, "blocks are not pairwise distinct: " + code.name(static_cast<SymbolId>(i)) + " = " +
                                   code.name(static_cast<SymbolId>(j)) + " = " + code.block(static_cast<SymbolId>(i))};
    if (code.hash_len() % 2 == 0) return {false, "the # block has even length"};
    auto q = code.uniform_q();
    if (!q) return {false, "non-# blocks do not share one length"};
    if (std::gcd(*q, code.hash_len()) != 1)
        return {false, "gcd(q, |#|) = " + std::to_string(std::gcd(*q, code.hash_len())) + " is not 1"};
    auto rec = is_recognizable(code);
    if (!rec.recognizable) return {false, "not recognizable (" + rec.witness->kind + " ambiguity)"};
    return {true, ""};
}

// ---------------------------------------------------------------------------
// Builtin codes
// ---------------------------------------------------------------------------

inline Code pow2_code(int n) {
    if (n < 1) throw input_error("pow2 codes need n >= 1");
    if (n > 16) throw input_error("pow2 code too large");
    std::vector<std::pair<std::string, std::string>> table;
    table.push_back({"#", "1"});
    for (int w = 0; w < (1 << n); ++w) {
        std::string bits, block = "10";
        for (int i = n - 1; i >= 0; --i) bits += ((w >> i) & 1) ? '1' : '0';
        for (char c : bits) {
            block += c;
            block += '0';
        }
        block += '1';
        table.push_back({"b" + bits, block});
    }
    return Code(std::move(table), "#");
}

inline Code builtin_code(std::string_view name) {
    if (name == "code2")
        return Code({{"a", "010"}, {"b", "011"}, {"#", "0"}}, "#");
    if (name == "code4a")
        return Code({{"a", "1000001"}, {"b", "1001001"}, {"c", "1011101"}, {"d", "1010101"}, {"#", "10001"}}, "#");
    if (name == "code4b")
        return Code({{"a", "01011111"}, {"b", "01001111"}, {"c", "01000111"}, {"d", "01000011"}, {"#", "0"}}, "#");
    if (name == "code8")
        return Code({{"a1", "10000000001"},
                     {"b1", "10010000001"},
                     {"c1", "10111000001"},
                     {"d1", "10101000001"},
                     {"a2", "10000000001"},
                     {"b2", "10000001001"},
                     {"c2", "10000011101"},
                     {"d2", "10000010101"},
                     {"#", "100000001"}},
                    "#");
    if (name.rfind("pow2:", 0) == 0) return pow2_code(std::stoi(std::string(name.substr(5))));
    if (name.rfind("pow2(", 0) == 0 && name.back() == ')')
        return pow2_code(std::stoi(std::string(name.substr(5, name.size() - 6))));
    throw input_error("unknown builtin code: " + std::string(name));
}

// ---------------------------------------------------------------------------
// Parsing flat words
// ---------------------------------------------------------------------------

struct FlatParse {
    std::string prefix; // proper suffix of some block, or empty
    Word body;
    std::string suffix; // proper prefix of some block, or empty
};

namespace detail {

inline void check_binary(std::string_view y) {
    for (char c : y)
        if (c != '0' && c != '1') throw input_error("not a binary word");
}

// Symbol-id translation from the code's ordering to the rule set's alphabet,
// matched by name. The # symbols must coincide.
inline std::vector<SymbolId> code_to_rules_map(const Code& code, const RuleSet& rules) {
    const Alphabet& a = rules.alphabet();
    if (a.size() != code.size()) throw input_error("rule set is not over the code's symbol alphabet");
    std::vector<SymbolId> map(code.size());
    for (std::size_t i = 0; i < code.size(); ++i)
        map[i] = a.require(code.name(static_cast<SymbolId>(i)));
    if (map[code.hash()] != a.hash()) throw input_error("rule set and code disagree on the marker symbol");
    return map;
}

inline bool proper_prefix_of_some_block(const Code& code, std::string_view s) {
    if (s.empty()) return true;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const std::string& b = code.block(static_cast<SymbolId>(i));
        if (b.size() > s.size() && b.compare(0, s.size(), s) == 0) return true;
    }
    return false;
}

inline std::vector<std::string> matching_prefixes(const Code& code, std::string_view y) {
    std::set<std::string> out;
    out.insert("");
    for (std::size_t i = 0; i < code.size(); ++i) {
        const std::string& b = code.block(static_cast<SymbolId>(i));
        for (std::size_t k = 1; k < b.size(); ++k) {
            std::string_view suf(b.data() + k, b.size() - k);
            if (suf.size() <= y.size() && y.compare(0, suf.size(), suf) == 0) out.insert(std::string(suf));
        }
    }
    return {out.begin(), out.end()};
}

} // namespace detail

// All decompositions y = prefix + flatten(body) + suffix.
inline std::vector<FlatParse> parse_flat(const Code& code, std::string_view y) {
    detail::check_binary(y);
    std::vector<FlatParse> out;
    Word body;
    auto dfs = [&](auto&& self, std::size_t pos, const std::string& prefix) -> void {
        std::string_view rest = y.substr(pos);
        if (detail::proper_prefix_of_some_block(code, rest))
            out.push_back({prefix, body, std::string(rest)});
        for (std::size_t i = 0; i < code.size(); ++i) {
            const std::string& b = code.block(static_cast<SymbolId>(i));
            if (b.size() <= rest.size() && rest.compare(0, b.size(), b) == 0) {
                body.push_back(static_cast<SymbolId>(i));
                self(self, pos + b.size(), prefix);
                body.pop_back();
            }
        }
    };
    for (const std::string& p : detail::matching_prefixes(code, y)) dfs(dfs, p.size(), p);
    return out;
}

// Membership in Lang(X(R)_flat): some decomposition of y has a body whose
// interior #-delimited segments are each even or in R, or y sits inside a
// single block. Edge segments are unconstrained, as at the symbol level, and
// a lone symbol occurs in a point of X(R) for every R, so in-block infixes
// belong to every flat language.
inline bool flat_lang_contains(const Code& code, const RuleSet& rules, std::string_view y) {
    detail::check_binary(y);
    const std::vector<SymbolId> to_rules = detail::code_to_rules_map(code, rules);
    for (std::size_t i = 0; i < code.size(); ++i)
        if (code.block(static_cast<SymbolId>(i)).find(y) != std::string::npos) return true;
    const SymbolId hash = code.hash();
    Word seg; // current segment, already in the rule set's symbol ids
    auto dfs = [&](auto&& self, std::size_t pos, bool seen_hash) -> bool {
        std::string_view rest = y.substr(pos);
        if (detail::proper_prefix_of_some_block(code, rest)) return true; // trailing edge unconstrained
        for (std::size_t i = 0; i < code.size(); ++i) {
            const std::string& b = code.block(static_cast<SymbolId>(i));
            if (b.size() > rest.size() || rest.compare(0, b.size(), b) != 0) continue;
            if (static_cast<SymbolId>(i) == hash) {
                if (seen_hash && seg.size() % 2 == 1 && !rules.contains(seg)) continue;
                Word saved;
                saved.swap(seg);
                if (self(self, pos + b.size(), true)) return true;
                saved.swap(seg);
            } else {
                seg.push_back(to_rules[i]);
                if (self(self, pos + b.size(), seen_hash)) return true;
                seg.pop_back();
            }
        }
        return false;
    };
    for (const std::string& p : detail::matching_prefixes(code, y)) {
        seg.clear();
        if (dfs(dfs, p.size(), false)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Specification gap
// ---------------------------------------------------------------------------

inline long long gap_from_lengths(long long q, long long r) {
    return 6 * std::max(q, r) + (2 * q * r - 2 * q - r + 1);
}

inline long long gap_constant(const Code& code) {
    auto adm = is_admissible(code);
    if (!adm.admissible) throw precondition_error("gap_constant needs an admissible code: " + adm.reason);
    return gap_from_lengths(*code.uniform_q(), code.hash_len());
}

// Nonnegative (i, j) with d = r*i + two_q*j and i maximal. Every
// d >= two_q*r - two_q - r + 1 splits; smaller unrepresentable d throw.
inline std::pair<long long, long long> frobenius_split(long long d, long long two_q, long long r) {
    if (two_q <= 0 || r <= 0 || std::gcd(two_q, r) != 1)
        throw input_error("frobenius_split needs coprime positive parts");
    if (d < 0) throw std::out_of_range("negative gap remainder");
    for (long long j = 0; two_q * j <= d; ++j)
        if ((d - two_q * j) % r == 0) return {(d - two_q * j) / r, j};
    throw std::out_of_range(std::to_string(d) + " is not representable as " + std::to_string(r) + "*i + " +
                            std::to_string(two_q) + "*j");
}

// Left/right extensions turning a flat language word into the flattening of a
// symbol word that starts and ends with the # block and is language-valid.
struct HashFrameCompletion {
    std::string prefix; // w_p
    std::string suffix; // w_s
    Word framed;        // the completed symbol word: # ... #
};

namespace detail {

// w is in the code's symbol ids; to_rules translates to the rule alphabet.
inline bool hash_framed_valid(const RuleSet& rules, const Word& w, const std::vector<SymbolId>& to_rules) {
    if (w.empty()) return false;
    Word translated(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) translated[i] = to_rules[w[i]];
    const Alphabet& a = rules.alphabet();
    if (!a.is_hash(translated.front()) || !a.is_hash(translated.back())) return false;
    return lang_contains(rules, translated);
}

} // namespace detail

inline HashFrameCompletion complete_to_hash_frame(const Code& code, const RuleSet& rules, std::string_view y) {
    const std::vector<SymbolId> to_rules = detail::code_to_rules_map(code, rules);
    const SymbolId hash = code.hash();
    const SymbolId nb = code.first_nonhash_block_symbol();
    const long long bound = 3 * static_cast<long long>(code.max_block_len());

    struct Side {
        std::string binary;
        Word symbols;
    };
    std::vector<HashFrameCompletion> found;

    for (const FlatParse& parse : parse_flat(code, y)) {
        std::vector<Side> lefts;
        if (parse.prefix.empty()) {
            if (!parse.body.empty() && parse.body.front() == hash) lefts.push_back({"", {}});
            lefts.push_back({code.hash_block(), {hash}});
            lefts.push_back({code.hash_block() + code.block(nb), {hash, nb}});
        } else {
            for (std::size_t i = 0; i < code.size(); ++i) {
                const std::string& b = code.block(static_cast<SymbolId>(i));
                if (b.size() <= parse.prefix.size()) continue;
                if (b.compare(b.size() - parse.prefix.size(), parse.prefix.size(), parse.prefix) != 0) continue;
                std::string missing = b.substr(0, b.size() - parse.prefix.size());
                SymbolId sym = static_cast<SymbolId>(i);
                if (sym == hash) lefts.push_back({missing, {hash}});
                lefts.push_back({code.hash_block() + missing, {hash, sym}});
                lefts.push_back({code.hash_block() + code.block(nb) + missing, {hash, nb, sym}});
            }
        }
        std::vector<Side> rights;
        if (parse.suffix.empty()) {
            if (!parse.body.empty() && parse.body.back() == hash) rights.push_back({"", {}});
            rights.push_back({code.hash_block(), {hash}});
            rights.push_back({code.block(nb) + code.hash_block(), {nb, hash}});
        } else {
            for (std::size_t i = 0; i < code.size(); ++i) {
                const std::string& b = code.block(static_cast<SymbolId>(i));
                if (b.size() <= parse.suffix.size()) continue;
                if (b.compare(0, parse.suffix.size(), parse.suffix) != 0) continue;
                std::string missing = b.substr(parse.suffix.size());
                SymbolId sym = static_cast<SymbolId>(i);
                if (sym == hash) rights.push_back({missing, {hash}});
                rights.push_back({missing + code.hash_block(), {sym, hash}});
                rights.push_back({missing + code.block(nb) + code.hash_block(), {sym, nb, hash}});
            }
        }
        for (const Side& L : lefts) {
            if (static_cast<long long>(L.binary.size()) > bound) continue;
            for (const Side& R : rights) {
                if (static_cast<long long>(R.binary.size()) > bound) continue;
                Word framed = L.symbols;
                framed.insert(framed.end(), parse.body.begin(), parse.body.end());
                framed.insert(framed.end(), R.symbols.begin(), R.symbols.end());
                if (!detail::hash_framed_valid(rules, framed, to_rules)) continue;
                found.push_back({L.binary, R.binary, framed});
            }
        }
    }

    // occurrences inside a single block have no parse of the form above
    for (std::size_t i = 0; i < code.size(); ++i) {
        const std::string& b = code.block(static_cast<SymbolId>(i));
        SymbolId sym = static_cast<SymbolId>(i);
        for (std::size_t o = b.find(y); o != std::string::npos; o = b.find(y, o + 1)) {
            std::string left_in = b.substr(0, o);
            std::string right_in = b.substr(o + y.size());
            std::vector<std::pair<std::string, Word>> pres, posts;
            if (sym == hash) pres.push_back({"", {}});
            pres.push_back({code.hash_block(), {hash}});
            pres.push_back({code.hash_block() + code.block(nb), {hash, nb}});
            if (sym == hash) posts.push_back({"", {}});
            posts.push_back({code.hash_block(), {hash}});
            posts.push_back({code.block(nb) + code.hash_block(), {nb, hash}});
            for (auto& [pre_bin, pre_syms] : pres)
                for (auto& [post_bin, post_syms] : posts) {
                    std::string w_p = pre_bin + left_in;
                    std::string w_s = right_in + post_bin;
                    if (static_cast<long long>(w_p.size()) > bound ||
                        static_cast<long long>(w_s.size()) > bound)
                        continue;
                    Word framed = pre_syms;
                    framed.push_back(sym);
                    framed.insert(framed.end(), post_syms.begin(), post_syms.end());
                    if (!detail::hash_framed_valid(rules, framed, to_rules)) continue;
                    found.push_back({w_p, w_s, framed});
                }
            if (y.empty()) break;
        }
    }

    if (found.empty())
        throw std::logic_error("bounded completion search failed; the input is not a flat language word");
    auto best = std::min_element(found.begin(), found.end(), [](const HashFrameCompletion& x, const HashFrameCompletion& y2) {
        auto kx = std::make_tuple(x.prefix.size() + x.suffix.size(), std::cref(x.prefix), std::cref(x.suffix));
        auto ky = std::make_tuple(y2.prefix.size() + y2.suffix.size(), std::cref(y2.prefix), std::cref(y2.suffix));
        return kx < ky;
    });
    return *best;
}

struct GapCertificate {
    long long k = 0;       // connector length, the code's gap constant
    long long i = 0;       // # block repetitions
    long long j = 0;       // half the number of non-# filler blocks
    std::string connector; // w_s + #^i + t + u_p
    std::string w_suffix;  // w_s
    std::string u_prefix;  // u_p
};

// Assembles the connector from precomputed completions: w_s + #^i + t + u_p
// with the Frobenius split of the remaining length.
inline GapCertificate assemble_gap_certificate(const Code& code, long long k, const std::string& w_suffix,
                                               const std::string& u_prefix) {
    const long long q = *code.uniform_q();
    const long long r = code.hash_len();
    long long d = k - static_cast<long long>(w_suffix.size()) - static_cast<long long>(u_prefix.size());
    auto [i, j] = frobenius_split(d, 2 * q, r);
    GapCertificate cert;
    cert.k = k;
    cert.i = i;
    cert.j = j;
    cert.w_suffix = w_suffix;
    cert.u_prefix = u_prefix;
    cert.connector.reserve(static_cast<std::size_t>(k));
    cert.connector = w_suffix;
    for (long long t = 0; t < i; ++t) cert.connector += code.hash_block();
    const std::string& filler = code.block(code.first_nonhash_block_symbol());
    for (long long t = 0; t < 2 * j; ++t) cert.connector += filler;
    cert.connector += u_prefix;
    return cert;
}

// Connector of length exactly gap_constant(code) joining two flat language
// words: close w into a #-framed word, bridge with #^i and 2j filler blocks
// chosen by the Frobenius split of the remaining length, then open u.
inline GapCertificate glue_flat(const Code& code, const RuleSet& rules, std::string_view w, std::string_view u) {
    if (!flat_lang_contains(code, rules, w) || !flat_lang_contains(code, rules, u))
        throw precondition_error("glue_flat arguments must lie in the flat language");
    const long long k = gap_constant(code);
    HashFrameCompletion cw = complete_to_hash_frame(code, rules, w);
    HashFrameCompletion cu = complete_to_hash_frame(code, rules, u);
    return assemble_gap_certificate(code, k, cw.suffix, cu.prefix);
}

// ---------------------------------------------------------------------------
// Flat action of symbol-level block maps
// ---------------------------------------------------------------------------

// Decomposes y starting at `offset` into blocks as far as possible (longest
// reachable cover, lexicographically first by symbol at each step), trims the
// map's radius from both sides and re-flattens the transformed interior.
template <typename BlockMap>
std::string flat_apply(const Code& code, const BlockMap& map, std::string_view y, std::size_t offset) {
    detail::check_binary(y);
    if (offset > y.size()) throw input_error("offset past the end");
    std::string_view rest = y.substr(offset);
    const std::size_t n = rest.size();
    std::vector<char> reach(n + 1, 0);
    reach[0] = 1;
    for (std::size_t pos = 0; pos <= n; ++pos) {
        if (!reach[pos]) continue;
        for (std::size_t i = 0; i < code.size(); ++i) {
            const std::string& b = code.block(static_cast<SymbolId>(i));
            if (pos + b.size() <= n && rest.compare(pos, b.size(), b) == 0) reach[pos + b.size()] = 1;
        }
    }
    std::size_t target = 0;
    for (std::size_t pos = 0; pos <= n; ++pos)
        if (reach[pos]) target = pos;
    std::vector<char> to_target(n + 1, 0);
    to_target[target] = 1;
    for (std::size_t pos = target; pos-- > 0;) {
        for (std::size_t i = 0; i < code.size(); ++i) {
            const std::string& b = code.block(static_cast<SymbolId>(i));
            if (pos + b.size() <= target && rest.compare(pos, b.size(), b) == 0 && to_target[pos + b.size()]) {
                to_target[pos] = 1;
                break;
            }
        }
    }
    Word body;
    std::size_t pos = 0;
    while (pos < target) {
        bool stepped = false;
        for (std::size_t i = 0; i < code.size() && !stepped; ++i) {
            const std::string& b = code.block(static_cast<SymbolId>(i));
            if (pos + b.size() <= target && rest.compare(pos, b.size(), b) == 0 && to_target[pos + b.size()]) {
                body.push_back(static_cast<SymbolId>(i));
                pos += b.size();
                stepped = true;
            }
        }
        if (!stepped) break;
    }
    if (body.empty()) throw precondition_error("no block parse at the given offset");
    const std::size_t span = 2 * static_cast<std::size_t>(map.radius()) + 1;
    if (body.size() < span) throw precondition_error("window too short for the map's radius");

    // translate between the code's symbol order and the map's alphabet
    const Alphabet& ma = map.alphabet();
    if (ma.size() != code.size()) throw input_error("block map is not over the code's symbols");
    std::vector<SymbolId> to_map(code.size()), from_map(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) {
        to_map[i] = ma.require(code.name(static_cast<SymbolId>(i)));
        from_map[to_map[i]] = static_cast<SymbolId>(i);
    }
    for (SymbolId& s : body) s = to_map[s];
    Word image = map.apply_window(body);
    for (SymbolId& s : image) s = from_map[s];
    return flatten_word(code, image);
}

} // namespace shiftspec
