#pragma once

// Square detection (batch and incremental), length-3 palindrome census and
// the small factor scans used by the alpha-word checks.

#include <array>
#include <cstring>
#include <optional>
#include <span>
#include <vector>

#include "cycsf/word.hpp"

namespace cycsf {

struct SquareWitness {
    std::size_t start;
    std::size_t half;  // |v| where vv occurs at start
    bool operator==(const SquareWitness&) const = default;
};

// Leftmost, then shortest, square in w. none iff w is square-free.
inline std::optional<SquareWitness> find_square(std::string_view w) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t h = 1; i + 2 * h <= n; ++h) {
            if (w[i] != w[i + h]) continue;
            if (std::memcmp(w.data() + i, w.data() + i + h, h) == 0)
                return SquareWitness{i, h};
        }
    }
    return std::nullopt;
}

inline std::optional<SquareWitness> find_square(const Word& w) { return find_square(w.view()); }

inline bool is_squarefree(std::string_view w) { return !find_square(w); }
inline bool is_squarefree(const Word& w) { return !find_square(w.view()); }

// Maintains a square-free word under push/pop of single letters. A push that
// would create a square is rejected and leaves the state unchanged.
class IncrementalChecker {
public:
    bool push(char letter) {
        w_.push_back(letter);
        const std::size_t m = w_.size();
        const auto& occ = occ_[static_cast<std::size_t>(letter - '0')];
        // A suffix square with half-length h needs w[m-1-h] == letter, so only
        // prior occurrences of `letter` yield candidates; most recent first.
        for (auto it = occ.rbegin(); it != occ.rend(); ++it) {
            const std::size_t h = m - 1 - *it;
            if (2 * h > m) break;
            const char* left = w_.data() + m - 2 * h;
            if (left[0] != left[h]) continue;
            if (std::memcmp(left, left + h, h) == 0) {
                w_.pop_back();
                return false;
            }
        }
        occ_[static_cast<std::size_t>(letter - '0')].push_back(m - 1);
        return true;
    }

    void pop() {
        occ_[static_cast<std::size_t>(w_.back() - '0')].pop_back();
        w_.pop_back();
    }

    std::size_t size() const { return w_.size(); }
    std::string_view committed() const { return w_; }

private:
    std::string w_;
    std::array<std::vector<std::size_t>, 3> occ_;
};

// Tiny set of letters, used for the palindrome census.
class LetterSet {
public:
    void insert(char c) { mask_ |= 1u << (c - '0'); }
    bool contains(char c) const { return mask_ >> (c - '0') & 1u; }
    std::size_t count() const { return std::size_t(mask_ & 1) + (mask_ >> 1 & 1) + (mask_ >> 2 & 1); }
    static LetterSet all() { return LetterSet{7}; }
    LetterSet shifted(unsigned i) const {
        LetterSet out;
        for (char c : {'0', '1', '2'})
            if (contains(c)) out.insert(shift_letter(c, i));
        return out;
    }
    bool operator==(const LetterSet&) const = default;

    LetterSet() = default;

private:
    explicit LetterSet(unsigned m) : mask_(m) {}
    unsigned mask_ = 0;
};

// Letters b such that some factor aba with a != b occurs in w.
inline LetterSet palindrome3_centers(const Word& w) {
    LetterSet centers;
    for (std::size_t i = 0; i + 3 <= w.size(); ++i)
        if (w[i] == w[i + 2] && w[i] != w[i + 1]) centers.insert(w[i + 1]);
    return centers;
}

// Length-5 factors of w in which some letter appears three or more times.
inline std::vector<std::pair<Word, std::size_t>> triple_letter_5_factors(const Word& w) {
    std::vector<std::pair<Word, std::size_t>> hits;
    for (std::size_t i = 0; i + 5 <= w.size(); ++i) {
        int cnt[3] = {0, 0, 0};
        for (std::size_t j = 0; j < 5; ++j) ++cnt[w[i + j] - '0'];
        if (cnt[0] >= 3 || cnt[1] >= 3 || cnt[2] >= 3)
            hits.emplace_back(w.substr(i, 5), i);
    }
    return hits;
}

// True iff no element of `forbidden` occurs as a factor of w.
inline bool avoids(const Word& w, std::span<const Word> forbidden) {
    for (const Word& f : forbidden) {
        if (f.empty()) throw std::invalid_argument("avoids: empty forbidden factor");
        if (w.view().find(f.view()) != std::string_view::npos) return false;
    }
    return true;
}

inline bool avoids(const Word& w, std::initializer_list<Word> forbidden) {
    return avoids(w, std::span<const Word>(forbidden.begin(), forbidden.size()));
}

}  // namespace cycsf
