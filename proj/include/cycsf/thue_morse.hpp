#pragma once

// Thue-Morse machinery: prefix generation, the bracketed factors 01v01 and
// 01v10, the 1-count map, and assembly of the bracketed square-free word
// r = 2102012 x 2102012 of length 4k-1.

#include <bit>
#include <cstdint>
#include <string>

#include "cycsf/squarefree.hpp"
#include "cycsf/word.hpp"

namespace cycsf {

// t[i] = parity of the population count of i.
inline char tm_letter(std::uint64_t i) {
    return static_cast<char>('0' + (std::popcount(i) & 1));
}

inline std::string tm_prefix(std::size_t n) {
    std::string t;
    t.reserve(n);
    for (std::size_t i = 0; i < n; ++i) t.push_back(tm_letter(i));
    return t;
}

// h(0) = 01, h(1) = 10, applied letterwise.
inline std::string h_image(std::string_view w) {
    std::string out;
    out.reserve(2 * w.size());
    for (char c : w) out += (c == '0') ? "01" : "10";
    return out;
}

enum class FactorShape { suffix01, suffix10 };  // 01v01 vs 01v10

// First factor of t of length k starting with 01 and ending with the
// requested pair. The scan window doubles until a hit is found; existence is
// guaranteed for k >= 6.
inline std::string find_bracketed_factor(std::size_t k, FactorShape shape) {
    if (k < 6) throw std::invalid_argument("find_bracketed_factor: k must be >= 6");
    const std::string_view tail = (shape == FactorShape::suffix01) ? "01" : "10";
    std::size_t window = std::max<std::size_t>(4 * k + 64, 1024);
    for (;;) {
        std::string t = tm_prefix(window);
        for (std::size_t i = 0; i + k <= t.size(); ++i) {
            std::string_view f = std::string_view(t).substr(i, k);
            if (f.substr(0, 2) == "01" && f.substr(k - 2) == tail) return std::string(f);
        }
        window *= 2;
    }
}

// 1-run lengths between consecutive 0s of a 0-bracketed binary word. Runs
// longer than 2 (impossible in Thue-Morse factors) are rejected.
inline Word one_count(std::string_view u) {
    if (u.size() < 2 || u.front() != '0' || u.back() != '0')
        throw std::invalid_argument("one_count: word must begin and end with 0");
    std::string out;
    std::size_t run = 0;
    for (std::size_t i = 1; i < u.size(); ++i) {
        if (u[i] == '1') {
            if (++run > 2) throw std::invalid_argument("one_count: 1-run longer than 2");
        } else {
            out.push_back(static_cast<char>('0' + run));
            run = 0;
        }
    }
    return Word(std::move(out));
}

struct BracketedX {
    Word r;         // 2102012 x 2102012, length 4k-1
    Word x;         // core with the brackets removed
    std::size_t k;  // source factor length
};

// r = 1-count of h^3(01v01) for the first length-k factor 01v01 of t.
// All invariants are verified before return.
inline BracketedX make_x(std::size_t k) {
    std::string factor = find_bracketed_factor(k, FactorShape::suffix01);
    std::string u = h_image(h_image(h_image(factor)));
    Word r = one_count(u);
    const Word bracket("2102012");
    bool ok = r.size() == 4 * k - 1 && r.prefix(7) == bracket && r.suffix(7) == bracket &&
              is_squarefree(r) && avoids(r, {Word("010"), Word("212")});
    if (!ok) throw std::logic_error("make_x: assembled word failed verification");
    return BracketedX{r, r.substr(7, r.size() - 14), k};
}

// Streaming source of Thue-Morse letters.
class ThueMorseStream {
public:
    char next() { return tm_letter(pos_++); }
    std::uint64_t emitted() const { return pos_; }

private:
    std::uint64_t pos_ = 0;
};

// Online 1-count of t: emits the ternary run-length word 2102012... one
// letter per pair of consecutive 0s of t.
class OneCountStream {
public:
    OneCountStream() { bits_.next(); }  // t starts with 0

    char next() {
        std::size_t run = 0;
        for (;;) {
            char b = bits_.next();
            if (b == '0') return static_cast<char>('0' + run);
            ++run;
        }
    }

private:
    ThueMorseStream bits_;
};

}  // namespace cycsf
