#pragma once

// Stem factorizations: a word w = p w1 w2 ... where each wi is the image of
// the stem p under a letter permutation. Decoding, streaming generation of
// certified square-free words, and verification of the bundled Muller
// morphisms.

#include <array>
#include <functional>
#include <numeric>
#include <optional>

#include "cycsf/constructor.hpp"
#include "cycsf/fixtures.hpp"
#include "cycsf/squarefree.hpp"
#include "cycsf/thue_morse.hpp"

namespace cycsf {

// Permutation of the three letters.
class Perm3 {
public:
    Perm3() : img_{'0', '1', '2'} {}
    Perm3(char i0, char i1, char i2) : img_{i0, i1, i2} {
        bool seen[3] = {};
        for (char c : img_) {
            if (!is_ternary_digit(c) || seen[c - '0'])
                throw std::invalid_argument("Perm3: not a permutation");
            seen[c - '0'] = true;
        }
    }

    static Perm3 shift(unsigned i) {
        return Perm3(shift_letter('0', i), shift_letter('1', i), shift_letter('2', i));
    }

    char operator()(char c) const { return img_[static_cast<std::size_t>(c - '0')]; }

    Word apply(const Word& w) const {
        std::string out = w.str();
        for (char& c : out) c = (*this)(c);
        return Word(std::move(out));
    }

    Perm3 compose(const Perm3& inner) const {  // (*this) after inner
        return Perm3((*this)(inner('0')), (*this)(inner('1')), (*this)(inner('2')));
    }

    Perm3 inverse() const {
        std::array<char, 3> inv{};
        for (char c : {'0', '1', '2'}) inv[static_cast<std::size_t>(img_[c - '0'] - '0')] = c;
        return Perm3(inv[0], inv[1], inv[2]);
    }

    bool is_cyclic_shift() const {
        for (unsigned i = 0; i < 3; ++i)
            if (*this == shift(i)) return true;
        return false;
    }

    std::string str() const { return std::string(img_.begin(), img_.end()); }
    bool operator==(const Perm3&) const = default;

private:
    std::array<char, 3> img_;
};

struct StemFactorization {
    Word stem;
    std::vector<Perm3> block_perms;  // one per block after the stem
    std::size_t covered_length = 0;

    Word reconstruct() const {
        std::string out = stem.str();
        out.reserve(covered_length);
        for (const Perm3& p : block_perms) out += p.apply(stem).str();
        return Word(std::move(out));
    }
};

// Split w into |w|/n blocks; the stem is the first. Each later block must be
// the image of the stem under a letter permutation. When the stem omits a
// letter the block map is extended deterministically (smallest unused image
// first). none if some block admits no consistent injective letter map.
inline std::optional<StemFactorization> decode_stem(const Word& w, std::size_t n) {
    if (n == 0 || w.size() % n != 0 || w.size() < 2 * n)
        throw std::invalid_argument("decode_stem: length must be a multiple of n, at least 2n");
    StemFactorization f;
    f.stem = w.prefix(n);
    f.covered_length = w.size();
    for (std::size_t b = 1; b < w.size() / n; ++b) {
        std::array<char, 3> map{0, 0, 0};
        bool used[3] = {};
        for (std::size_t i = 0; i < n; ++i) {
            char s = f.stem[i], t = w[b * n + i];
            char& slot = map[static_cast<std::size_t>(s - '0')];
            if (slot == 0) {
                if (used[t - '0']) return std::nullopt;  // not injective
                slot = t;
                used[t - '0'] = true;
            } else if (slot != t) {
                return std::nullopt;  // inconsistent
            }
        }
        for (char s : {'0', '1', '2'}) {
            char& slot = map[static_cast<std::size_t>(s - '0')];
            if (slot != 0) continue;
            for (char t : {'0', '1', '2'})
                if (!used[t - '0']) {
                    slot = t;
                    used[t - '0'] = true;
                    break;
                }
        }
        f.block_perms.emplace_back(map[0], map[1], map[2]);
    }
    return f;
}

struct StreamResult {
    StemFactorization factorization;
    Word emitted;  // first `length` letters
};

// Raised if the incremental checker ever rejects a streamed letter; this
// would falsify the certificate chain, so it carries the offending window.
struct StreamIntegrityError : std::runtime_error {
    StreamIntegrityError(std::string msg, std::string win)
        : std::runtime_error(std::move(msg)), window(std::move(win)) {}
    std::string window;
};

// Applies the certified n-uniform morphism block by block to the 1-count of
// the Thue-Morse word (itself square-free and {010,212}-free), feeding every
// output letter through an incremental square checker.
inline StreamResult stream_stem_word(std::size_t n, std::size_t length,
                                     const std::function<void(std::string_view)>& sink = {}) {
    CertifiedMorphism cm = construct(n);
    OneCountStream source;
    IncrementalChecker checker;
    StemFactorization fact;
    unsigned first_letter = 0;
    std::size_t blocks = 0;
    while (checker.size() < length) {
        char a = source.next();
        const Word& block = cm.morphism.image(a);
        for (char c : block.str()) {
            if (!checker.push(c)) {
                std::size_t lo = checker.size() > 4 * n ? checker.size() - 4 * n : 0;
                throw StreamIntegrityError(
                    "stream_stem_word: square created at position " + std::to_string(checker.size()),
                    std::string(checker.committed().substr(lo)) + c);
            }
        }
        if (blocks == 0) {
            first_letter = static_cast<unsigned>(a - '0');
            fact.stem = block;
        } else {
            fact.block_perms.push_back(Perm3::shift((static_cast<unsigned>(a - '0') + 3 - first_letter) % 3));
        }
        ++blocks;
    }
    fact.covered_length = blocks * n;
    std::string_view emitted = checker.committed().substr(0, length);
    if (sink) sink(emitted);
    return {std::move(fact), Word(std::string(emitted))};
}

struct MullerReport {
    int n = 0;
    SquarefreeCertificate certificate;
    Word stem;
    std::array<std::size_t, 3> block_counts{};
    bool images_decode = false;
    bool ok() const { return certificate.verdict && images_decode; }
};

// The bundled morphism for n in {20,21,22} must certify square-free and each
// image must decode into stem blocks. For n = 20 the stem is the one quoted
// with the morphism; for 21 and 22 the candidate is the length-n prefix of
// the image of 0.
inline MullerReport verify_muller(int n, const Morphism* morphism = nullptr) {
    if (n < 20 || n > 22) throw std::invalid_argument("verify_muller: n must be 20, 21 or 22");
    const Morphism& m = morphism ? *morphism : builtin_muller(n);
    MullerReport rep;
    rep.n = n;
    rep.certificate = crochemore_test(m);
    rep.stem = (n == 20) ? Word::parse(detail::kMullerStem20)
                         : m.image('0').prefix(static_cast<std::size_t>(n));
    rep.images_decode = true;
    for (char letter : {'0', '1', '2'}) {
        const Word& img = m.image(letter);
        if (img.size() % static_cast<std::size_t>(n) != 0) {
            rep.images_decode = false;
            continue;
        }
        // decode against the fixed stem: prepend it so the first block is
        // the stem itself, then drop the identity
        auto f = decode_stem(rep.stem + img, static_cast<std::size_t>(n));
        if (!f) {
            rep.images_decode = false;
            continue;
        }
        rep.block_counts[static_cast<std::size_t>(letter - '0')] = f->block_perms.size();
    }
    return rep;
}

}  // namespace cycsf
