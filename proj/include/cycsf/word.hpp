#pragma once

// Finite words over the ternary alphabet {0,1,2}, stored as ASCII digit
// strings, plus the cyclic shift operator and basic factor machinery.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cycsf {

inline bool is_ternary_digit(char c) { return c == '0' || c == '1' || c == '2'; }

// Immutable ternary word. Letters are the chars '0', '1', '2'.
class Word {
public:
    Word() = default;

    explicit Word(std::string digits) : s_(std::move(digits)) {
        for (char c : s_)
            if (!is_ternary_digit(c))
                throw std::invalid_argument("Word: letter outside {0,1,2}");
    }

    // Ingestion for transcribed strings: whitespace, hyphens and line breaks
    // are stripped; anything else non-ternary is an error.
    static Word parse(std::string_view text) {
        std::string s;
        s.reserve(text.size());
        for (char c : text) {
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '-') continue;
            s.push_back(c);
        }
        return Word(std::move(s));
    }

    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    char operator[](std::size_t i) const { return s_[i]; }
    const std::string& str() const { return s_; }
    std::string_view view() const { return s_; }

    Word prefix(std::size_t n) const { return Word(s_.substr(0, n)); }
    Word suffix(std::size_t n) const { return Word(s_.substr(s_.size() - n)); }
    Word substr(std::size_t pos, std::size_t len) const { return Word(s_.substr(pos, len)); }

    friend Word operator+(const Word& a, const Word& b) { return Word(a.s_ + b.s_); }
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

    auto begin() const { return s_.begin(); }
    auto end() const { return s_.end(); }

private:
    std::string s_;
};

inline char shift_letter(char c, unsigned i) {
    return static_cast<char>('0' + (static_cast<unsigned>(c - '0') + i) % 3);
}

// sigma^i applied letterwise: a -> (a + i) mod 3.
inline Word cyclic_shift(const Word& w, unsigned i) {
    std::string out = w.str();
    for (char& c : out) c = shift_letter(c, i);
    return Word(std::move(out));
}

inline Word reversed(const Word& w) {
    return Word(std::string(w.str().rbegin(), w.str().rend()));
}

struct FactorHit {
    std::size_t index;
    bool internal;  // neither prefix nor suffix occurrence
    bool operator==(const FactorHit&) const = default;
};

// All (possibly overlapping) occurrences of v in w, ascending.
inline std::vector<FactorHit> factor_indices(const Word& w, const Word& v) {
    if (v.empty()) throw std::invalid_argument("factor_indices: empty factor");
    std::vector<FactorHit> hits;
    std::string_view hay = w.view();
    for (std::size_t pos = hay.find(v.view()); pos != std::string_view::npos;
         pos = hay.find(v.view(), pos + 1)) {
        hits.push_back({pos, pos > 0 && pos + v.size() < w.size()});
    }
    return hits;
}

inline std::vector<std::size_t> occurrence_indices(const Word& w, const Word& v) {
    std::vector<std::size_t> out;
    for (const auto& h : factor_indices(w, v)) out.push_back(h.index);
    return out;
}

inline bool has_internal_occurrence(const Word& host, const Word& v) {
    for (const auto& h : factor_indices(host, v))
        if (h.internal) return true;
    return false;
}

}  // namespace cycsf
