#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>

#include "shiftspec/alphabet.hpp"
#include "shiftspec/errors.hpp"

namespace shiftspec {

enum class RuleKind { finite, all_a_odd, condensed };
enum class BeyondPolicy { exclude, include };

// A decidable predicate R on odd-length #-free words over an alphabet. It
// selects which odd words may appear between two consecutive #'s in a point
// of the shift space X(R); even-length words between #'s are always allowed.
//
// Three representations:
//   finite    : an explicit member set up to max_len, with a policy for odd
//                words longer than max_len (exclude or include them all);
//   all_a_odd : the exact infinite set {m, mmm, mmmmm, ...} of odd runs of a
//                single marker symbol, no truncation;
//   condensed : all_a_odd with one run exchanged: the run of length 2n-1 is
//                removed and the word a^(n-1) b a^(n-1) is added.
class RuleSet {
public:
    static RuleSet finite(Alphabet alphabet, std::set<Word> members, int max_len,
                          BeyondPolicy beyond = BeyondPolicy::exclude) {
        RuleSet r(std::move(alphabet), RuleKind::finite);
        for (const Word& w : members) {
            if (w.empty() || w.size() % 2 == 0)
                throw input_error("rule members must be nonempty odd-length words");
            if (static_cast<int>(w.size()) > max_len)
                throw input_error("rule member longer than max_len");
            for (SymbolId s : w) {
                if (s >= r.alphabet_.size()) throw input_error("rule member symbol outside alphabet");
                if (r.alphabet_.is_hash(s)) throw input_error("rule members must avoid the marker symbol");
            }
        }
        r.members_ = std::move(members);
        r.max_len_ = max_len;
        r.beyond_ = beyond;
        return r;
    }

    static RuleSet empty(Alphabet alphabet, int max_len = 0) {
        return finite(std::move(alphabet), {}, max_len, BeyondPolicy::exclude);
    }

    static RuleSet all_odd_runs(Alphabet alphabet, SymbolId marker) {
        RuleSet r(std::move(alphabet), RuleKind::all_a_odd);
        if (marker >= r.alphabet_.size() || r.alphabet_.is_hash(marker))
            throw input_error("marker must be a non-# alphabet symbol");
        r.marker_ = marker;
        return r;
    }

    static RuleSet condensed(Alphabet alphabet, int n, SymbolId run_symbol, SymbolId swap_symbol) {
        if (n < 1) throw input_error("condensed rule sets need n >= 1");
        RuleSet r(std::move(alphabet), RuleKind::condensed);
        if (run_symbol >= r.alphabet_.size() || r.alphabet_.is_hash(run_symbol) ||
            swap_symbol >= r.alphabet_.size() || r.alphabet_.is_hash(swap_symbol) || run_symbol == swap_symbol)
            throw input_error("condensed rule sets need two distinct non-# symbols");
        r.marker_ = run_symbol;
        r.swap_ = swap_symbol;
        r.n_ = n;
        return r;
    }

    const Alphabet& alphabet() const { return alphabet_; }
    RuleKind kind() const { return kind_; }
    const std::set<Word>& members() const { return members_; }
    int max_len() const { return max_len_; }
    BeyondPolicy beyond() const { return beyond_; }
    SymbolId marker() const { return marker_; }
    SymbolId swap_symbol() const { return swap_; }
    int n() const { return n_; }

    // Membership in R. Even-length, empty, and #-containing words are never
    // members; symbols outside the alphabet are an input error.
    bool contains(std::span<const SymbolId> w) const {
        for (SymbolId s : w)
            if (s >= alphabet_.size()) throw input_error("symbol outside alphabet");
        if (w.empty() || w.size() % 2 == 0) return false;
        for (SymbolId s : w)
            if (alphabet_.is_hash(s)) return false;
        switch (kind_) {
        case RuleKind::finite:
            if (static_cast<int>(w.size()) > max_len_) return beyond_ == BeyondPolicy::include;
            return members_.count(Word(w.begin(), w.end())) > 0;
        case RuleKind::all_a_odd:
            return std::all_of(w.begin(), w.end(), [&](SymbolId s) { return s == marker_; });
        case RuleKind::condensed: {
            bool run = std::all_of(w.begin(), w.end(), [&](SymbolId s) { return s == marker_; });
            if (run) return static_cast<int>(w.size()) != 2 * n_ - 1;
            if (static_cast<int>(w.size()) != 2 * n_ - 1) return false;
            for (int i = 0; i < 2 * n_ - 1; ++i) {
                SymbolId want = (i == n_ - 1) ? swap_ : marker_;
                if (w[i] != want) return false;
            }
            return true;
        }
        }
        return false;
    }

private:
    RuleSet(Alphabet alphabet, RuleKind kind) : alphabet_(std::move(alphabet)), kind_(kind) {}

    Alphabet alphabet_;
    RuleKind kind_;
    std::set<Word> members_;
    int max_len_ = 0;
    BeyondPolicy beyond_ = BeyondPolicy::exclude;
    SymbolId marker_ = 0;
    SymbolId swap_ = 0;
    int n_ = 0;
};

inline bool rule_contains(const RuleSet& r, std::span<const SymbolId> w) { return r.contains(w); }

// The segment of non-# symbols strictly between two consecutive #'s must be
// of even length or belong to R. The segments before the first # and after
// the last # are unconstrained: every word over the non-# symbols extends to
// an even-length word followed by #, so edge segments never block a
// biinfinite completion.
inline bool lang_contains(const RuleSet& r, std::span<const SymbolId> y) {
    const Alphabet& a = r.alphabet();
    for (SymbolId s : y)
        if (s >= a.size()) throw input_error("symbol outside alphabet");
    std::size_t i = 0;
    while (i < y.size() && !a.is_hash(y[i])) ++i;
    if (i == y.size()) return true; // no marker at all
    std::size_t seg_start = i + 1;
    for (std::size_t j = seg_start; j < y.size(); ++j) {
        if (!a.is_hash(y[j])) continue;
        std::size_t len = j - seg_start;
        if (len % 2 == 1 && !r.contains(y.subspan(seg_start, len))) return false;
        seg_start = j + 1;
    }
    return true;
}

// Length-2 connector joining two language words, built from the tail of w and
// the head of u alone: put the first non-# symbol next to a side whose
// pending #-delimited segment is odd, and # otherwise.
inline Word glue2(const RuleSet& r, const Word& w, const Word& u) {
    if (!lang_contains(r, w) || !lang_contains(r, u))
        throw precondition_error("glue2 arguments must lie in the language of X(R)");
    const Alphabet& a = r.alphabet();
    SymbolId filler = a.first_nonhash();

    auto tail_is_open_odd = [&](const Word& x) {
        std::size_t run = 0;
        std::size_t i = x.size();
        while (i > 0 && !a.is_hash(x[i - 1])) { --i; ++run; }
        return i > 0 && run % 2 == 1; // a # exists and the segment after it is odd
    };
    auto head_is_open_odd = [&](const Word& x) {
        std::size_t run = 0;
        std::size_t i = 0;
        while (i < x.size() && !a.is_hash(x[i])) { ++i; ++run; }
        return i < x.size() && run % 2 == 1;
    };

    Word v;
    v.push_back(tail_is_open_odd(w) ? filler : a.hash());
    v.push_back(head_is_open_odd(u) ? filler : a.hash());
    return v;
}

// R_0 for n = 0; for n >= 1 the rule set (R_0 \ {a^(2n-1)}) + {a^(n-1) b a^(n-1)}.
inline RuleSet condensed_rules(int n, const Alphabet& alphabet) {
    if (n < 0) throw input_error("condensed_rules needs n >= 0");
    auto a = alphabet.find("a");
    auto b = alphabet.find("b");
    if (!a || !b || alphabet.is_hash(*a) || alphabet.is_hash(*b))
        throw input_error("condensed_rules needs non-# symbols named a and b");
    if (n == 0) return RuleSet::all_odd_runs(alphabet, *a);
    return RuleSet::condensed(alphabet, n, *a, *b);
}

struct LangAgreement {
    bool agree = true;
    std::optional<Word> witness; // first disagreeing word in length-then-lex order
};

// Exhaustive comparison of the two languages on all words of length <= L.
inline LangAgreement lang_agree_upto(const RuleSet& r1, const RuleSet& r2, std::size_t L) {
    if (r1.alphabet() != r2.alphabet()) throw input_error("lang_agree_upto needs a common alphabet");
    LangAgreement out;
    auto syms = all_symbols(r1.alphabet());
    for_each_word(syms, L, [&](const Word& y) {
        if (lang_contains(r1, y) != lang_contains(r2, y)) {
            out.agree = false;
            out.witness = y;
            return false;
        }
        return true;
    });
    return out;
}

// All two-letter connectors v with w v u in the language; the tail/head recipe's
// output is always among them.
inline std::vector<Word> glue2_candidates(const RuleSet& r, const Word& w, const Word& u) {
    std::vector<Word> out;
    auto syms = all_symbols(r.alphabet());
    Word joined = w;
    joined.resize(w.size() + 2);
    joined.insert(joined.end(), u.begin(), u.end());
    for (SymbolId x : syms)
        for (SymbolId y : syms) {
            joined[w.size()] = x;
            joined[w.size() + 1] = y;
            if (lang_contains(r, joined)) out.push_back({x, y});
        }
    return out;
}

} // namespace shiftspec
