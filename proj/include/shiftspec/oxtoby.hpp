#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shiftspec/errors.hpp"

namespace shiftspec {

namespace detail {

inline long long pow3(int i) {
    long long p = 1;
    while (i-- > 0) p *= 3;
    return p;
}

inline long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline long long math_mod(long long a, long long b) { return a - floor_div(a, b) * b; }

} // namespace detail

// A finite window of the ternary sequence built over distinct points
// x_1, ..., x_m: position j carries x_i when j is congruent to
// (+3^(i-1) - 1)/2 or (-3^(i-1) - 1)/2 modulo 3^i. Positions whose stage
// exceeds `depth` stay undefined (-1).
struct OxtobyWindow {
    std::vector<std::string> points;
    long long lo = 0, hi = 0;
    int depth = 0;
    std::vector<int> entries; // index into points, or -1 for undefined

    int entry(long long j) const {
        if (j < lo || j > hi) throw input_error("position outside the window");
        return entries[static_cast<std::size_t>(j - lo)];
    }
    bool defined(long long j) const { return entry(j) >= 0; }
};

enum class OxtobyMethod { stagewise, closed_form };

// Stage at which position j is filled: the unique i >= 1 with
// j == (+-3^(i-1) - 1)/2 (mod 3^i), or nullopt if that stage exceeds `upto`.
inline std::optional<int> oxtoby_stage(long long j, int upto) {
    for (int i = 1; i <= upto; ++i) {
        long long m = detail::pow3(i);
        long long third = detail::pow3(i - 1);
        long long plus = (third - 1) / 2;
        long long minus = detail::math_mod(-(third + 1) / 2, m);
        long long res = detail::math_mod(j, m);
        if (res == plus || res == minus) return i;
    }
    return std::nullopt;
}

inline OxtobyWindow oxtoby_window(std::vector<std::string> points, long long lo, long long hi, int depth,
                                  OxtobyMethod method = OxtobyMethod::closed_form) {
    if (lo > hi) throw input_error("window bounds out of order");
    if (depth < 0 || depth > 35) throw input_error("depth out of range");
    if (static_cast<std::size_t>(depth) > points.size())
        throw input_error("insufficient points: depth exceeds the number of distinct points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw input_error("points must be distinct");

    OxtobyWindow w;
    w.points = std::move(points);
    w.lo = lo;
    w.hi = hi;
    w.depth = depth;
    w.entries.assign(static_cast<std::size_t>(hi - lo + 1), -1);

    if (method == OxtobyMethod::closed_form) {
        for (long long j = lo; j <= hi; ++j) {
            auto stage = oxtoby_stage(j, depth);
            if (stage) w.entries[static_cast<std::size_t>(j - lo)] = *stage - 1;
        }
        return w;
    }

    // Stagewise filling on a block-aligned extension of the window: stage s
    // writes x_s into every still-undefined position of each 3^(s-1)-block
    // whose index k is 0 or 2 mod 3.
    if (depth == 0) return w;
    long long big = detail::pow3(depth - 1);
    long long ext_lo = detail::floor_div(lo, big) * big;
    long long ext_hi = (detail::floor_div(hi, big) + 1) * big - 1;
    std::vector<int> ext(static_cast<std::size_t>(ext_hi - ext_lo + 1), -1);
    for (int s = 1; s <= depth; ++s) {
        long long block = detail::pow3(s - 1);
        for (long long start = ext_lo; start + block - 1 <= ext_hi; start += block) {
            long long k = detail::floor_div(start, block);
            if (detail::math_mod(k, 3) == 1) continue;
            for (long long j = start; j < start + block; ++j) {
                auto& e = ext[static_cast<std::size_t>(j - ext_lo)];
                if (e < 0) e = s - 1;
            }
        }
    }
    for (long long j = lo; j <= hi; ++j) w.entries[static_cast<std::size_t>(j - lo)] = ext[static_cast<std::size_t>(j - ext_lo)];
    return w;
}

// Positions in [lo, hi] that are 3^i-periodic in the full sequence: all of
// them except the residue class of the block midpoint (3^i - 1)/2.
inline std::vector<long long> per_power_positions(int i, long long lo, long long hi) {
    if (i < 1 || i > 35) throw input_error("power out of range");
    long long m = detail::pow3(i);
    long long mid = (m - 1) / 2;
    std::vector<long long> out;
    for (long long j = lo; j <= hi; ++j)
        if (detail::math_mod(j, m) != mid) out.push_back(j);
    return out;
}

// Window-local periodicity filter: all defined positions congruent to n mod p
// carry the same point as position n. Necessary for membership in Per_p; it
// is exact once the window is wide enough to contain a differing witness.
inline bool per_p_window_check(const OxtobyWindow& w, long long p, long long n) {
    if (p < 1) throw input_error("period must be positive");
    if (n < w.lo || n > w.hi) throw input_error("position outside the window");
    if (!w.defined(n)) throw precondition_error("position " + std::to_string(n) + " is undefined at this depth");
    int want = w.entry(n);
    for (long long m = n - detail::floor_div(n - w.lo, p) * p; m <= w.hi; m += p) {
        int e = w.entry(m);
        if (e >= 0 && e != want) return false;
    }
    return true;
}

// Coherent residues (s mod 3, s mod 9, ..., s mod 3^m) locating a shift of
// the sequence in the inverse limit of the cyclic groups Z_(3^i).
struct DigitSequence {
    std::vector<long long> digits; // digits[i-1] = r_i in [0, 3^i)
};

inline bool digits_coherent(const DigitSequence& d) {
    for (std::size_t i = 0; i < d.digits.size(); ++i) {
        long long m = detail::pow3(static_cast<int>(i) + 1);
        if (d.digits[i] < 0 || d.digits[i] >= m) return false;
        if (i > 0 && detail::math_mod(d.digits[i] - d.digits[i - 1], m / 3) != 0) return false;
    }
    return true;
}

inline DigitSequence shift_digits(long long s, int m) {
    if (m < 0 || m > 35) throw input_error("digit count out of range");
    DigitSequence d;
    for (int i = 1; i <= m; ++i) d.digits.push_back(detail::math_mod(s, detail::pow3(i)));
    return d;
}

// The only residue class mod 3^i that can be aperiodic at scale 3^i for a
// point with digits d: the block midpoint shifted by -r_i.
inline long long aperiodic_candidate(const DigitSequence& d, int i) {
    if (i < 1 || static_cast<std::size_t>(i) > d.digits.size()) throw input_error("digit index out of range");
    long long m = detail::pow3(i);
    return detail::math_mod((m - 1) / 2 - d.digits[static_cast<std::size_t>(i - 1)], m);
}

enum class LemmaOxtStatus { passed, failed, precondition_violated };

struct LemmaOxtResult {
    LemmaOxtStatus status = LemmaOxtStatus::passed;
    std::string detail;
    bool ok() const { return status == LemmaOxtStatus::passed; }
};

// Verifies z(r_i + k) = x_(i+1) for i0 <= i <= imax, the window form of the
// statement that an aperiodic position k of a non-Toeplitz orbit point reads
// the fresh symbol at every scale. Digit prefixes that stabilize (the finite
// trace of a Toeplitz shift) are flagged, not evaluated.
inline LemmaOxtResult lemma_oxt_check(const std::vector<std::string>& points, const DigitSequence& d, long long k,
                                      int i0, int imax) {
    if (!digits_coherent(d)) throw input_error("incoherent digit sequence");
    if (i0 < 1 || i0 > imax || static_cast<std::size_t>(imax) > d.digits.size())
        throw input_error("digit range out of order");
    if (points.size() <= static_cast<std::size_t>(imax))
        throw input_error("insufficient points: need more than imax");
    auto r = [&](int i) { return d.digits[static_cast<std::size_t>(i - 1)]; };
    for (int i = i0; i <= imax; ++i) {
        if (!(-r(i) < k && k < detail::pow3(i) - r(i)))
            return {LemmaOxtStatus::precondition_violated,
                    "position " + std::to_string(k) + " outside (-r_i, 3^i - r_i) at i = " + std::to_string(i)};
    }
    auto margin = [&](int i) { return std::min(r(i), detail::pow3(i) - r(i)); };
    for (int i = i0; i < imax; ++i)
        if (margin(i + 1) <= margin(i))
            return {LemmaOxtStatus::precondition_violated,
                    "digits stabilize at i = " + std::to_string(i + 1) + "; the orbit point would be Toeplitz"};
    long long lo = r(i0) + k, hi = r(i0) + k;
    for (int i = i0; i <= imax; ++i) {
        lo = std::min(lo, r(i) + k);
        hi = std::max(hi, r(i) + k);
    }
    OxtobyWindow w = oxtoby_window(std::vector<std::string>(points.begin(), points.end()), lo, hi, imax + 1);
    for (int i = i0; i <= imax; ++i) {
        long long pos = r(i) + k;
        int e = w.entry(pos);
        if (e != i)
            return {LemmaOxtStatus::failed, "z(" + std::to_string(pos) + ") is not x_" + std::to_string(i + 1)};
    }
    return {LemmaOxtStatus::passed, ""};
}

} // namespace shiftspec
