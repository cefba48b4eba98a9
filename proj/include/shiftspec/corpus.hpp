#pragma once

#include <string>
#include <vector>

#include "shiftspec/alphabet.hpp"
#include "shiftspec/oxtoby.hpp"
#include "shiftspec/rng.hpp"
#include "shiftspec/rules.hpp"

namespace shiftspec {

// Finite rule set sampled by tossing a coin for every odd #-free word of
// length <= max_len, in enumeration order. Deterministic in the rng stream.
inline RuleSet random_finite_rules(const Alphabet& alphabet, int max_len, SplitMix64& rng) {
    std::set<Word> members;
    auto nonhash = alphabet.nonhash_symbols();
    for_each_word(nonhash, static_cast<std::size_t>(max_len), [&](const Word& w) {
        if (w.size() % 2 == 1 && rng.flip()) members.insert(w);
        return true;
    });
    return RuleSet::finite(alphabet, std::move(members), max_len, BeyondPolicy::exclude);
}

struct AperiodicDigitPrefix {
    DigitSequence digits;
    long long k = 0; // the stable aperiodic position: r_i = (3^i - 1)/2 - k from i0 on
    int i0 = 2;
};

// Coherent digit prefix whose margins min(r_i, 3^i - r_i) grow strictly from
// i0 on: from i0 upward the digits track the block midpoints shifted by a
// fixed small k, and below i0 they are the forced residues.
inline AperiodicDigitPrefix random_aperiodic_digit_prefix(int length, SplitMix64& rng) {
    AperiodicDigitPrefix out;
    out.i0 = 2;
    out.k = static_cast<long long>(rng.below(9)) - 4; // k in [-4, 4]
    out.digits.digits.resize(static_cast<std::size_t>(length));
    for (int i = out.i0; i <= length; ++i)
        out.digits.digits[static_cast<std::size_t>(i - 1)] = (detail::pow3(i) - 1) / 2 - out.k;
    for (int i = out.i0 - 1; i >= 1; --i)
        out.digits.digits[static_cast<std::size_t>(i - 1)] =
            detail::math_mod(out.digits.digits[static_cast<std::size_t>(i)], detail::pow3(i));
    return out;
}

inline std::vector<std::string> oxtoby_points(int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

} // namespace shiftspec
