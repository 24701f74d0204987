#pragma once

// The four bracket words alpha_1..alpha_4 and machine checks for every
// property the construction relies on: square-freeness, the palindrome
// census of their ends, uniqueness of the triple-letter length-5 factors,
// the border property, shift isolation, and the concatenation lemmas.

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "cycsf/morphism.hpp"
#include "cycsf/squarefree.hpp"
#include "cycsf/word.hpp"

namespace cycsf {

namespace detail {
inline const std::array<Word, 4> kAlphaWords = {
    Word("21020102101201021201210212010210120102012"),
    Word("2102010210120102120121020120210201210212010210120102012"),
    Word("21020102101201021201210201202101201021201210212010210120102012"),
    Word("210201021012010212012102012021012010210120210201210212010210120102012"),
};
}  // namespace detail

// alpha_q, q in {1,2,3,4}. Lengths 41, 55, 62, 69.
inline const Word& alpha(int q) {
    if (q < 1 || q > 4) throw std::invalid_argument("alpha: q must be in {1,2,3,4}");
    return detail::kAlphaWords[static_cast<std::size_t>(q - 1)];
}

// Common prefix of every alpha_q; each also ends with its reversal.
inline const Word kAlphaPrefix = Word("210201021012010");

struct PropertyCheck {
    std::string name;
    bool pass;
    std::string detail;  // witness or diagnostic, empty when uninteresting
};

struct AlphaReport {
    int q = 0;
    std::vector<PropertyCheck> items;

    bool all_pass() const {
        for (const auto& c : items)
            if (!c.pass) return false;
        return true;
    }
    const PropertyCheck* find(std::string_view name) const {
        for (const auto& c : items)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

inline std::string letterset_str(LetterSet s) {
    std::string out = "{";
    for (char c : {'0', '1', '2'})
        if (s.contains(c)) {
            if (out.size() > 1) out += ',';
            out += c;
        }
    return out + "}";
}

// The five asserted properties, run against one word (alpha_q or its
// reversal). `tag` suffixes the item names.
inline void check_alpha_items(const Word& a, const std::string& tag,
                              std::vector<PropertyCheck>& out) {
    // (1) square-free
    {
        auto sq = find_square(a);
        std::string d;
        if (sq) d = "square at " + std::to_string(sq->start) + " half " + std::to_string(sq->half);
        out.push_back({"squarefree" + tag, !sq, d});
    }
    // (2) the common length-15 prefix contains 010 at indices 4 and 12
    {
        Word pi = a.prefix(15);
        auto idx = occurrence_indices(pi, Word("010"));
        bool ok = idx == std::vector<std::size_t>{4, 12};
        out.push_back({"prefix_010_indices" + tag, ok, ok ? "" : "unexpected occurrence set"});
    }
    // (3) every letter is the center of a length-3 palindromic factor of the
    // length-10 prefix and suffix. This fails as stated: the length-10 ends
    // carry centers {1,2} only; length 11 is the least that carries all three.
    {
        LetterSet pc = palindrome3_centers(a.prefix(10));
        LetterSet sc = palindrome3_centers(a.suffix(10));
        bool ok = pc == LetterSet::all() && sc == LetterSet::all();
        std::string d = "prefix10 centers " + letterset_str(pc) + ", suffix10 centers " +
                        letterset_str(sc);
        std::size_t least = 0;
        for (std::size_t len = 3; len <= a.size(); ++len)
            if (palindrome3_centers(a.prefix(len)) == LetterSet::all() &&
                palindrome3_centers(a.suffix(len)) == LetterSet::all()) {
                least = len;
                break;
            }
        d += "; least length with all centers: " + std::to_string(least);
        out.push_back({"palindrome_centers_10" + tag, ok, d});
    }
    // (4) triple-letter length-5 factors: exactly 02010 once in the length-7
    // prefix and 01020 once in the length-7 suffix
    {
        auto hits = triple_letter_5_factors(a);
        bool ok = hits.size() == 2 && hits[0].first == Word("02010") && hits[0].second + 5 <= 7 &&
                  hits[1].first == Word("01020") && hits[1].second + 7 >= a.size();
        std::ostringstream d;
        for (const auto& [f, i] : hits) d << f.str() << "@" << i << " ";
        out.push_back({"triple_letter_factors" + tag, ok, d.str()});
    }
}

}  // namespace detail

// Border check across a pair: the only nonempty proper prefix of `a` that is
// a suffix of `b` is the single letter 2, and symmetrically.
inline bool border_is_single_letter(const Word& a, const Word& b) {
    for (std::size_t len = 1; len < a.size() && len <= b.size(); ++len) {
        bool prefix_is_suffix = a.prefix(len) == b.suffix(len);
        bool suffix_is_prefix = len < b.size() && a.suffix(len) == b.prefix(len);
        if (len == 1) {
            if (!prefix_is_suffix || !suffix_is_prefix) return false;
        } else if (prefix_is_suffix || suffix_is_prefix) {
            return false;
        }
    }
    return true;
}

// Items 1-5 for alpha_q and its reversal. Item 5 is run against all four
// alpha words, both orders.
inline AlphaReport verify_alpha_census(int q) {
    const Word& a = alpha(q);
    AlphaReport rep;
    rep.q = q;
    detail::check_alpha_items(a, "", rep.items);
    detail::check_alpha_items(reversed(a), "_rev", rep.items);
    bool borders = true;
    std::string bad;
    for (int r = 1; r <= 4; ++r) {
        if (!border_is_single_letter(a, alpha(r)) ||
            !border_is_single_letter(reversed(a), reversed(alpha(r)))) {
            borders = false;
            bad += " r=" + std::to_string(r);
        }
    }
    rep.items.push_back({"border_single_letter", borders, bad});
    return rep;
}

// No cyclic shift of the length-7 prefix (suffix) of alpha_q occurs anywhere
// in any alpha_r except as the literal prefix (suffix) itself.
inline bool verify_shift_isolation(int q) {
    const Word p7 = alpha(q).prefix(7);
    const Word s7 = alpha(q).suffix(7);
    for (unsigned i = 0; i < 3; ++i) {
        Word sp = cyclic_shift(p7, i);
        Word ss = cyclic_shift(s7, i);
        for (int r = 1; r <= 4; ++r) {
            const Word& host = alpha(r);
            for (std::size_t idx : occurrence_indices(host, sp))
                if (!(i == 0 && idx == 0)) return false;
            for (std::size_t idx : occurrence_indices(host, ss))
                if (!(i == 0 && idx == host.size() - 7)) return false;
        }
    }
    return true;
}

// sigma^i(alpha_r) sigma^j(alpha_q) is square-free for all q != r, i != j.
// 72 concatenations.
inline bool verify_lemma_aa() {
    for (int q = 1; q <= 4; ++q)
        for (int r = 1; r <= 4; ++r) {
            if (q == r) continue;
            for (unsigned i = 0; i < 3; ++i)
                for (unsigned j = 0; j < 3; ++j) {
                    if (i == j) continue;
                    if (!is_squarefree(cyclic_shift(alpha(r), i) + cyclic_shift(alpha(q), j)))
                        return false;
                }
        }
    return true;
}

// x alpha_r and alpha_q x are square-free, and no cyclic shift of alpha_q is
// an internal factor of either. x is the core of a bracketed word: the
// rebracketed word must be square-free and avoid 010 and 212.
inline bool verify_lemmas_with_x(const Word& x, int q, int r) {
    if (q == r) throw std::invalid_argument("verify_lemmas_with_x: q and r must differ");
    const Word bracket("2102012");
    Word rb = bracket + x + bracket;
    if (!is_squarefree(rb) || !avoids(rb, {Word("010"), Word("212")}))
        throw std::invalid_argument("verify_lemmas_with_x: x fails the bracket precondition");
    Word xa = x + alpha(r);
    Word ax = alpha(q) + x;
    if (!is_squarefree(xa) || !is_squarefree(ax)) return false;
    for (unsigned i = 0; i < 3; ++i) {
        Word beta = cyclic_shift(alpha(q), i);
        if (has_internal_occurrence(ax, beta) || has_internal_occurrence(xa, beta)) return false;
    }
    return true;
}

// No cyclic shift of alpha_q is an internal factor of (shift of alpha_r)
// (shift of alpha_q), and no shift of alpha_r is an internal factor of
// (shift of alpha_r)(shift of alpha_q).
inline bool verify_lemma_qr(int q, int r) {
    if (q == r) throw std::invalid_argument("verify_lemma_qr: q and r must differ");
    for (unsigned ia = 0; ia < 3; ++ia)
        for (unsigned ig = 0; ig < 3; ++ig)
            for (unsigned ib = 0; ib < 3; ++ib) {
                Word host = cyclic_shift(alpha(r), ig) + cyclic_shift(alpha(q), ib);
                if (has_internal_occurrence(host, cyclic_shift(alpha(q), ia))) return false;
                Word host2 = cyclic_shift(alpha(r), ig) + cyclic_shift(alpha(q), ib);
                if (has_internal_occurrence(host2, cyclic_shift(alpha(r), ia))) return false;
            }
    return true;
}

}  // namespace cycsf
