#pragma once

// Ternary morphisms and the two square-freeness certificates: the length-3
// test for uniform morphisms and the length-5 test for general ternary
// morphisms.

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "cycsf/squarefree.hpp"
#include "cycsf/word.hpp"

namespace cycsf {

class Morphism {
public:
    Morphism(Word im0, Word im1, Word im2) : images_{std::move(im0), std::move(im1), std::move(im2)} {
        for (const Word& im : images_)
            if (im.empty()) throw std::invalid_argument("Morphism: empty image");
    }

    // f(0) = seed, f(1) = sigma(seed), f(2) = sigma^2(seed).
    static Morphism from_seed(const Word& seed) {
        if (seed.empty()) throw std::invalid_argument("Morphism::from_seed: empty seed");
        return Morphism(seed, cyclic_shift(seed, 1), cyclic_shift(seed, 2));
    }

    const Word& image(char letter) const { return images_[static_cast<std::size_t>(letter - '0')]; }
    const std::array<Word, 3>& images() const { return images_; }

    bool uniform() const {
        return images_[0].size() == images_[1].size() && images_[1].size() == images_[2].size();
    }

    bool cyclic_shift_form() const {
        return images_[1] == cyclic_shift(images_[0], 1) && images_[2] == cyclic_shift(images_[1], 1);
    }

    Word apply(const Word& w) const {
        std::string out;
        std::size_t total = 0;
        for (char c : w) total += image(c).size();
        out.reserve(total);
        for (char c : w) out += image(c).str();
        return Word(std::move(out));
    }

    bool operator==(const Morphism&) const = default;

private:
    std::array<Word, 3> images_;
};

enum class CertMethod { berstel3, crochemore5 };

inline std::string_view to_string(CertMethod m) {
    return m == CertMethod::berstel3 ? "berstel-3" : "crochemore-5";
}

struct Counterexample {
    Word input;  // square-free test word whose image has a square
    SquareWitness witness;
    bool operator==(const Counterexample&) const = default;
};

struct SquarefreeCertificate {
    CertMethod method;
    std::size_t tested_words = 0;
    bool verdict = false;
    std::optional<Counterexample> counterexample;
};

// All square-free ternary words of length 1..max_len, lexicographic within
// each length, lengths ascending.
inline std::vector<Word> squarefree_words(std::size_t max_len) {
    std::vector<Word> out;
    std::vector<std::string> layer{""};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : layer)
            for (char c : {'0', '1', '2'})
                if (is_squarefree(w + c)) next.push_back(w + c);
        for (const std::string& w : next) out.emplace_back(Word(w));
        layer = std::move(next);
    }
    return out;
}

namespace detail {
inline SquarefreeCertificate image_sweep(const Morphism& m, CertMethod method,
                                         const std::vector<Word>& words) {
    SquarefreeCertificate cert{method};
    for (const Word& w : words) {
        ++cert.tested_words;
        if (auto sq = find_square(m.apply(w))) {
            cert.counterexample = Counterexample{w, *sq};
            return cert;
        }
    }
    cert.verdict = true;
    return cert;
}

inline std::vector<Word> words_of_length(std::size_t len) {
    std::vector<Word> out;
    for (const Word& w : squarefree_words(len))
        if (w.size() == len) out.push_back(w);
    return out;
}
}  // namespace detail

// Uniform morphisms: square-free iff the images of the 12 square-free
// length-3 words are square-free.
inline SquarefreeCertificate berstel_test(const Morphism& m) {
    if (!m.uniform())
        throw std::invalid_argument("berstel_test: morphism not uniform (use crochemore_test)");
    static const std::vector<Word> kWords3 = detail::words_of_length(3);
    return detail::image_sweep(m, CertMethod::berstel3, kWords3);
}

// General ternary morphisms: square-free iff the images of all square-free
// words of length <= 5 are square-free.
inline SquarefreeCertificate crochemore_test(const Morphism& m) {
    static const std::vector<Word> kWords5 = squarefree_words(5);
    return detail::image_sweep(m, CertMethod::crochemore5, kWords5);
}

}  // namespace cycsf
