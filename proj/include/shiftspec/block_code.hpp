#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "shiftspec/alphabet.hpp"
#include "shiftspec/errors.hpp"
#include "shiftspec/rules.hpp"

namespace shiftspec {

// Radius-r local rule f : A^(2r+1) -> A with a totally populated table. The
// induced sliding map sends position k of a sequence to f applied to the
// window centered at k.
class BlockCode {
public:
    template <typename Fn>
    static BlockCode from_rule(Alphabet alphabet, int radius, Fn&& fn, std::string name = "") {
        if (radius < 0) throw input_error("radius must be nonnegative");
        BlockCode bc(std::move(alphabet), radius, std::move(name));
        const std::size_t span = 2 * static_cast<std::size_t>(radius) + 1;
        const std::size_t a = bc.alpha_.size();
        std::size_t total = 1;
        for (std::size_t i = 0; i < span; ++i) {
            if (total > 300'000'000 / a) throw std::length_error("block code table too large to materialize");
            total *= a;
        }
        bc.table_.resize(total);
        Word window(span, 0);
        for (std::size_t idx = 0;; ++idx) {
            SymbolId out = fn(static_cast<const Word&>(window));
            if (out >= a) throw input_error("block code rule produced a symbol outside the alphabet");
            bc.table_[idx] = out;
            std::size_t pos = span;
            while (pos > 0 && window[pos - 1] + 1 == a) window[--pos] = 0;
            if (pos == 0) break;
            ++window[pos - 1];
        }
        return bc;
    }

    const Alphabet& alphabet() const { return alpha_; }
    int radius() const { return radius_; }
    const std::string& name() const { return name_; }
    const std::vector<SymbolId>& table() const { return table_; }

    std::size_t window_index(std::span<const SymbolId> window) const {
        std::size_t idx = 0;
        for (SymbolId s : window) idx = idx * alpha_.size() + s;
        return idx;
    }

    SymbolId eval(std::span<const SymbolId> window) const { return table_[window_index(window)]; }

    // Output position k corresponds to the window w[k .. k+2r]; the output is
    // shorter than the input by 2r.
    void apply_window_into(std::span<const SymbolId> w, Word& out) const {
        const std::size_t span = 2 * static_cast<std::size_t>(radius_) + 1;
        if (w.size() < span) throw precondition_error("window too short for the map's radius");
        const std::size_t a = alpha_.size();
        std::size_t roll = 1;
        for (std::size_t i = 0; i + 1 < span; ++i) roll *= a;
        out.resize(w.size() - span + 1);
        std::size_t idx = 0;
        for (std::size_t i = 0; i < span; ++i) idx = idx * a + w[i];
        out[0] = table_[idx];
        for (std::size_t k = 1; k < out.size(); ++k) {
            idx = (idx - w[k - 1] * roll) * a + w[k + span - 1];
            out[k] = table_[idx];
        }
    }

    Word apply_window(std::span<const SymbolId> w) const {
        Word out;
        apply_window_into(w, out);
        return out;
    }

private:
    BlockCode(Alphabet alphabet, int radius, std::string name)
        : alpha_(std::move(alphabet)), radius_(radius), name_(std::move(name)) {}

    Alphabet alpha_;
    int radius_;
    std::vector<SymbolId> table_;
    std::string name_;
};

inline BlockCode identity_block_code(Alphabet alphabet) {
    return BlockCode::from_rule(std::move(alphabet), 0, [](const Word& w) { return w[0]; }, "id");
}

// f after g; feeding g's outputs into f gives a radius r_f + r_g table with
// apply_window(compose(f,g), w) == apply_window(f, apply_window(g, w)).
inline BlockCode compose(const BlockCode& f, const BlockCode& g) {
    if (f.alphabet() != g.alphabet()) throw input_error("compose needs a common alphabet");
    int radius = f.radius() + g.radius();
    std::string name = f.name().empty() || g.name().empty() ? "" : f.name() + "*" + g.name();
    return BlockCode::from_rule(
        f.alphabet(), radius,
        [&, mid = Word{}](const Word& window) mutable {
            g.apply_window_into(window, mid);
            return f.eval(mid);
        },
        std::move(name));
}

namespace detail {

struct StarBuffers {
    Word padded, out;
};

// Applies f to the embedding of w in the all-# point (w at positions 1..|w|)
// and writes the image at positions 1..|w| into `image`. Verifies that every
// covered position outside 1..|w| maps to # and none inside does; the check
// spans `extra` more positions beyond the frame on each side.
inline void star_extract_into(const BlockCode& f, std::span<const SymbolId> w, int extra, StarBuffers& buf,
                              Word& image) {
    const Alphabet& a = f.alphabet();
    for (SymbolId s : w) {
        if (s >= a.size()) throw input_error("symbol outside alphabet");
        if (a.is_hash(s)) throw input_error("star maps act on #-free words");
    }
    const int r = f.radius();
    const int pad = r + 2 + extra;
    buf.padded.assign(w.size() + 2 * static_cast<std::size_t>(pad), a.hash());
    std::copy(w.begin(), w.end(), buf.padded.begin() + pad);
    f.apply_window_into(buf.padded, buf.out);
    // out[o] is the image at embedded position o - (pad - r - 1); w occupies 1..|w|
    const int base = pad - r - 1;
    const long long n = static_cast<long long>(w.size());
    for (long long p = -(extra + 1); p <= n + extra + 2; ++p) {
        long long o = base + p;
        if (o < 0 || o >= static_cast<long long>(buf.out.size())) continue;
        bool inside = p >= 1 && p <= n;
        bool is_hash = a.is_hash(buf.out[static_cast<std::size_t>(o)]);
        if (inside && is_hash)
            throw not_hash_preserving("image of a #-free word contains # at position " + std::to_string(p));
        if (!inside && !is_hash)
            throw not_hash_preserving("frame position " + std::to_string(p) + " does not map to #");
    }
    image.resize(w.size());
    for (long long p = 1; p <= n; ++p)
        image[static_cast<std::size_t>(p - 1)] = buf.out[static_cast<std::size_t>(base + p)];
}

inline Word star_extract(const BlockCode& f, std::span<const SymbolId> w, int extra) {
    StarBuffers buf;
    Word image;
    star_extract_into(f, w, extra, buf, image);
    return image;
}

} // namespace detail

// The word-level action of a #-preserving map: embed w between #'s, apply,
// and read back the positions of w. Length-preserving, with star(eps) = eps.
inline Word star_map(const BlockCode& f, std::span<const SymbolId> w) { return detail::star_extract(f, w, 0); }

inline Word star_chain(std::span<const BlockCode> chain, Word w) {
    for (const BlockCode& f : chain) w = star_map(f, w);
    return w;
}

// Allocation-free repeated evaluation of a composition's star map, applying
// the chain's star maps in order (first element first).
class ChainStar {
public:
    explicit ChainStar(std::span<const BlockCode> chain) : chain_(chain) {}

    const Word& operator()(std::span<const SymbolId> w) {
        cur_.assign(w.begin(), w.end());
        for (const BlockCode& f : chain_) {
            detail::star_extract_into(f, cur_, 0, buf_, next_);
            cur_.swap(next_);
        }
        return cur_;
    }

private:
    std::span<const BlockCode> chain_;
    detail::StarBuffers buf_;
    Word cur_, next_;
};

// Bounded certificate: every #-free word of length <= L embeds and extracts
// cleanly (frame #'s map to #, interior stays #-free) and the star map is
// injective on each length class. The all-# window must also map to #.
inline bool is_hash_preserving_upto(const BlockCode& f, std::size_t L) {
    const Alphabet& a = f.alphabet();
    Word allhash(2 * static_cast<std::size_t>(f.radius()) + 1, a.hash());
    if (!a.is_hash(f.eval(allhash))) return false;
    auto nonhash = a.nonhash_symbols();
    try {
        for (std::size_t len = 0; len <= L; ++len) {
            std::unordered_set<std::uint64_t> seen;
            bool ok = true;
            for_each_word(nonhash, len, [&](const Word& w) {
                if (w.size() != len) return true;
                Word img = detail::star_extract(f, w, f.radius() + 1);
                std::uint64_t key = 0;
                for (SymbolId s : img) key = key * a.size() + s + 1;
                if (!seen.insert(key).second) ok = false;
                return ok;
            });
            if (!ok) return false;
        }
    } catch (const not_hash_preserving&) {
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Generator families
// ---------------------------------------------------------------------------

enum class GeneratorFamily { boyle4, boyle8 };

inline Alphabet boyle4_alphabet() { return Alphabet({"#", "a", "b", "c", "d"}, "#"); }
inline Alphabet boyle8_alphabet() { return Alphabet({"#", "a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2"}, "#"); }
inline Alphabet condensed_alphabet() { return Alphabet({"#", "a", "b"}, "#"); }

// The involution swapping `s` and `partner` at every position whose left
// neighbor lies outside {s, partner}.
inline BlockCode swap_generator(Alphabet alphabet, SymbolId s, SymbolId partner, std::string name) {
    if (s == partner) throw input_error("swap generator needs two distinct symbols");
    return BlockCode::from_rule(
        std::move(alphabet), 1,
        [s, partner](const Word& w) -> SymbolId {
            SymbolId x = w[0], y = w[1];
            if (y == s && x != s && x != partner) return partner;
            if (y == partner && x != s && x != partner) return s;
            return y;
        },
        std::move(name));
}

inline std::vector<std::string> generator_names(GeneratorFamily family) {
    if (family == GeneratorFamily::boyle4) return {"b", "c", "d"};
    return {"b1", "c1", "d1", "b2", "c2", "d2"};
}

inline BlockCode generator(GeneratorFamily family, std::string_view name) {
    if (family == GeneratorFamily::boyle4) {
        Alphabet a = boyle4_alphabet();
        if (name != "b" && name != "c" && name != "d") throw input_error("unknown boyle4 generator: " + std::string(name));
        return swap_generator(a, a.require(name), a.require("a"), "boyle4:" + std::string(name));
    }
    Alphabet a = boyle8_alphabet();
    auto names = generator_names(GeneratorFamily::boyle8);
    if (std::find(names.begin(), names.end(), std::string(name)) == names.end())
        throw input_error("unknown boyle8 generator: " + std::string(name));
    std::string partner = name.back() == '1' ? "a1" : "a2";
    return swap_generator(a, a.require(name), a.require(partner), "boyle8:" + std::string(name));
}

// The radius-n map exchanging the framed words # a^(2n-1) # and
// # a^(n-1) b a^(n-1) # and fixing everything else.
inline BlockCode condensed_generator(int n) {
    if (n < 1) throw input_error("condensed generators need n >= 1");
    Alphabet alpha = condensed_alphabet();
    SymbolId hash = alpha.hash(), a = alpha.require("a"), b = alpha.require("b");
    Word run_pattern, swap_pattern;
    run_pattern.push_back(hash);
    swap_pattern.push_back(hash);
    for (int i = 0; i < 2 * n - 1; ++i) {
        run_pattern.push_back(a);
        swap_pattern.push_back(i == n - 1 ? b : a);
    }
    run_pattern.push_back(hash);
    swap_pattern.push_back(hash);
    return BlockCode::from_rule(
        alpha, n,
        [&, n](const Word& w) -> SymbolId {
            if (w == swap_pattern) return a;
            if (w == run_pattern) return b;
            return w[static_cast<std::size_t>(n)];
        },
        "condensed:" + std::to_string(n));
}

// Parses "boyle4:b", "boyle8:c1", "condensed:2", "id:<alphabet spec unused>".
inline BlockCode builtin_block_code(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw input_error("builtin block codes look like family:name");
    std::string_view family = spec.substr(0, colon), name = spec.substr(colon + 1);
    if (family == "boyle4") return generator(GeneratorFamily::boyle4, name);
    if (family == "boyle8") return generator(GeneratorFamily::boyle8, name);
    if (family == "condensed") return condensed_generator(std::stoi(std::string(name)));
    throw input_error("unknown block code family: " + std::string(family));
}

// ---------------------------------------------------------------------------
// Group words
// ---------------------------------------------------------------------------

struct GroupWord {
    GeneratorFamily family = GeneratorFamily::boyle4;
    std::vector<std::string> letters; // letter 1 applied first

    bool is_reduced() const {
        for (std::size_t i = 0; i + 1 < letters.size(); ++i)
            if (letters[i] == letters[i + 1]) return false;
        return true;
    }
};

inline std::vector<BlockCode> generator_chain(const GroupWord& gw) {
    std::vector<BlockCode> out;
    out.reserve(gw.letters.size());
    for (const std::string& l : gw.letters) out.push_back(generator(gw.family, l));
    return out;
}

// Right-to-left composition of the generators; the first letter acts first.
inline BlockCode eval_group_word(const GroupWord& gw) {
    Alphabet alpha = gw.family == GeneratorFamily::boyle4 ? boyle4_alphabet() : boyle8_alphabet();
    if (gw.letters.empty()) return identity_block_code(alpha);
    auto chain = generator_chain(gw);
    BlockCode result = chain[0];
    for (std::size_t i = 1; i < chain.size(); ++i) result = compose(chain[i], result);
    return result;
}

// All reduced words of exactly length k over the family's generators.
inline std::vector<std::vector<std::string>> reduced_words(GeneratorFamily family, std::size_t k) {
    auto names = generator_names(family);
    std::vector<std::vector<std::string>> out, frontier{{}};
    for (std::size_t step = 0; step < k; ++step) {
        std::vector<std::vector<std::string>> next;
        for (auto& w : frontier)
            for (auto& n : names) {
                if (!w.empty() && w.back() == n) continue;
                auto w2 = w;
                w2.push_back(n);
                next.push_back(std::move(w2));
            }
        frontier = std::move(next);
    }
    return frontier;
}

// ---------------------------------------------------------------------------
// Induced action on rule sets
// ---------------------------------------------------------------------------

// Materializes {star(w) : w in R, |w| <= L} as a finite rule set. The star
// map is length-preserving, so the truncation commutes with the action.
inline RuleSet induced_rules(const BlockCode& f, const RuleSet& rules, std::size_t L) {
    if (f.alphabet() != rules.alphabet()) throw input_error("induced_rules needs matching alphabets");
    if (!is_hash_preserving_upto(f, L))
        throw not_hash_preserving("map is not a #-preserving automorphism up to length " + std::to_string(L));
    std::set<Word> members;
    auto nonhash = f.alphabet().nonhash_symbols();
    for_each_word(nonhash, L, [&](const Word& w) {
        if (w.size() % 2 == 1 && rules.contains(w)) members.insert(star_map(f, w));
        return true;
    });
    BeyondPolicy beyond = rules.kind() == RuleKind::finite ? rules.beyond() : BeyondPolicy::exclude;
    return RuleSet::finite(f.alphabet(), std::move(members), static_cast<int>(L), beyond);
}

// First (length-then-lex) #-free word moved by the star map, if any.
inline std::optional<Word> almost_trivial_witness(const BlockCode& f, std::size_t L) {
    std::optional<Word> out;
    auto nonhash = f.alphabet().nonhash_symbols();
    for_each_word(nonhash, L, [&](const Word& w) {
        if (star_map(f, w) != w) {
            out = w;
            return false;
        }
        return true;
    });
    return out;
}

namespace detail {

template <typename StarFn>
bool star_bijection_on_length(const Alphabet& a, StarFn&& star, std::size_t len) {
    auto nonhash = a.nonhash_symbols();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) {
        if (total > (1ull << 40) / a.size()) throw input_error("length class too large to enumerate");
        total *= a.size();
    }
    std::vector<std::uint64_t> seen((total + 63) / 64, 0);
    bool ok = true;
    for_each_word(nonhash, len, [&](const Word& w) {
        if (w.size() != len) return true;
        const Word& img = star(w);
        if (img.size() != len) {
            ok = false;
            return false;
        }
        std::uint64_t key = 0;
        for (SymbolId s : img) key = key * a.size() + s;
        std::uint64_t mask = 1ull << (key & 63);
        if (seen[key >> 6] & mask) ok = false;
        seen[key >> 6] |= mask;
        return ok;
    });
    return ok;
}

} // namespace detail

// Finite stand-in for measure preservation: a length-preserving bijection of
// the #-free words of length len permutes the uniform measure on them.
inline bool star_bijection_check(const BlockCode& f, std::size_t len) {
    detail::StarBuffers buf;
    Word image;
    return detail::star_bijection_on_length(
        f.alphabet(),
        [&](const Word& w) -> const Word& {
            detail::star_extract_into(f, w, 0, buf, image);
            return image;
        },
        len);
}

inline bool star_bijection_check_chain(std::span<const BlockCode> chain, const Alphabet& a, std::size_t len) {
    ChainStar star(chain);
    return detail::star_bijection_on_length(a, [&](const Word& w) -> const Word& { return star(w); }, len);
}

inline std::size_t fixed_word_count_chain(std::span<const BlockCode> chain, const Alphabet& a, std::size_t len) {
    ChainStar star(chain);
    std::size_t fixed = 0;
    auto nonhash = a.nonhash_symbols();
    for_each_word(nonhash, len, [&](const Word& w) {
        if (w.size() == len && star(w) == w) ++fixed;
        return true;
    });
    return fixed;
}

} // namespace shiftspec
