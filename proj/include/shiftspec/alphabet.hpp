#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "shiftspec/errors.hpp"

namespace shiftspec {

using SymbolId = std::uint8_t;

// A finite word over an alphabet, stored as symbol ids. The empty vector is
// the empty word.
using Word = std::vector<SymbolId>;

// Finite marked alphabet: an ordered list of distinct symbol names, one of
// which is the distinguished marker #. Symbol order (and hence all
// length-then-lex enumeration order) is the order in which the names were
// given.
class Alphabet {
public:
    Alphabet(std::vector<std::string> symbols, std::string_view hash_name) : names_(std::move(symbols)) {
        if (names_.size() < 2)
            throw input_error("alphabet needs the marker and at least one other symbol");
        if (names_.size() > 200)
            throw input_error("alphabet too large");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw input_error("empty symbol name");
            auto [it, fresh] = index_.emplace(names_[i], static_cast<SymbolId>(i));
            if (!fresh)
                throw input_error("duplicate symbol name: " + names_[i]);
        }
        auto it = index_.find(std::string(hash_name));
        if (it == index_.end())
            throw input_error("marker symbol not in alphabet: " + std::string(hash_name));
        hash_ = it->second;
        single_char_ = std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
    }

    std::size_t size() const { return names_.size(); }
    SymbolId hash() const { return hash_; }
    bool is_hash(SymbolId s) const { return s == hash_; }
    const std::string& name(SymbolId s) const { return names_.at(s); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<SymbolId> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    SymbolId require(std::string_view name) const {
        auto s = find(name);
        if (!s) throw input_error("symbol outside alphabet: " + std::string(name));
        return *s;
    }

    // Symbols other than #, in alphabet order.
    std::vector<SymbolId> nonhash_symbols() const {
        std::vector<SymbolId> out;
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (static_cast<SymbolId>(i) != hash_) out.push_back(static_cast<SymbolId>(i));
        return out;
    }

    SymbolId first_nonhash() const { return hash_ == 0 ? SymbolId{1} : SymbolId{0}; }

    // Text form of a word: single characters are concatenated; multi-character
    // symbol names are joined with commas.
    std::string format_word(std::span<const SymbolId> w) const {
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!single_char_ && i > 0) out += ',';
            out += name(w[i]);
        }
        return out;
    }

    // Inverse of format_word. Accepts the comma-separated form always; for
    // alphabets with multi-character names a comma-free string is parsed by
    // greedy longest match.
    Word parse_word(std::string_view text) const {
        Word out;
        if (text.empty()) return out;
        if (text.find(',') != std::string_view::npos) {
            std::size_t pos = 0;
            while (pos <= text.size()) {
                std::size_t comma = text.find(',', pos);
                std::size_t end = comma == std::string_view::npos ? text.size() : comma;
                out.push_back(require(text.substr(pos, end - pos)));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
            return out;
        }
        if (single_char_) {
            for (char c : text) out.push_back(require(std::string_view(&c, 1)));
            return out;
        }
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t best = 0;
            SymbolId sym = 0;
            for (std::size_t i = 0; i < names_.size(); ++i) {
                const std::string& n = names_[i];
                if (n.size() > best && text.substr(pos, n.size()) == n) {
                    best = n.size();
                    sym = static_cast<SymbolId>(i);
                }
            }
            if (best == 0) throw input_error("cannot parse word at position " + std::to_string(pos) + ": " + std::string(text));
            out.push_back(sym);
            pos += best;
        }
        return out;
    }

    bool operator==(const Alphabet& other) const { return names_ == other.names_ && hash_ == other.hash_; }
    bool operator!=(const Alphabet& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, SymbolId> index_;
    SymbolId hash_ = 0;
    bool single_char_ = true;
};

// Enumerates words over `symbols` in length-then-lex order (lex by the order
// of `symbols`), shortest first, starting with the empty word. Calls fn(word);
// fn returning false stops the enumeration early.
template <typename Fn>
void for_each_word(std::span<const SymbolId> symbols, std::size_t max_len, Fn&& fn) {
    Word w;
    for (std::size_t len = 0; len <= max_len; ++len) {
        w.assign(len, symbols.empty() ? SymbolId{0} : symbols[0]);
        if (symbols.empty() && len > 0) return;
        std::vector<std::size_t> digits(len, 0);
        while (true) {
            for (std::size_t i = 0; i < len; ++i) w[i] = symbols[digits[i]];
            if (!fn(static_cast<const Word&>(w))) return;
            std::size_t pos = len;
            while (pos > 0 && digits[pos - 1] + 1 == symbols.size()) digits[--pos] = 0;
            if (pos == 0) break;
            ++digits[pos - 1];
        }
        if (len == 0 && symbols.empty()) return;
    }
}

inline std::vector<SymbolId> all_symbols(const Alphabet& a) {
    std::vector<SymbolId> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<SymbolId>(i);
    return out;
}

} // namespace shiftspec
