#pragma once

// Produces a certified n-uniform square-free cyclic shift morphism for every
// admissible n: table lookup for 13 <= n <= 122, assembly alpha_q x alpha_r
// from Thue-Morse material for n >= 123. Every result is gated by the
// length-3 certificate.

#include <optional>
#include <set>

#include "cycsf/alpha.hpp"
#include "cycsf/fixtures.hpp"
#include "cycsf/morphism.hpp"
#include "cycsf/thue_morse.hpp"

namespace cycsf {

// Lengths with no n-uniform square-free cyclic shift morphism.
inline const std::set<int> kExceptionalLengths = {14, 15, 16, 20, 21, 22};

// Raised when asked to construct a morphism for an exceptional length.
struct NonexistenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstructionRecipe {
    std::size_t n = 0;
    enum class Source { appendix, assembled } source = Source::appendix;
    int q = 0, r = 0;           // assembled only
    std::size_t x_length = 0;   // assembled only
    std::size_t k = 0;          // Thue-Morse parameter, assembled only
};

struct CertifiedMorphism {
    Morphism morphism;
    ConstructionRecipe recipe;
    SquarefreeCertificate certificate;
};

struct PairChoice {
    int q, r;
    std::size_t x_length;
    std::size_t k;
};

// Pick the unique pair sum s in {96,117,110,103} with n - s = 1 (mod 4),
// n - s >= 9. The sums cover all residues mod 4.
inline PairChoice select_pair(std::size_t n) {
    if (n < 123) throw std::invalid_argument("select_pair: n must be >= 123");
    struct Entry { std::size_t sum; int q, r; };
    static constexpr Entry kPairs[] = {{96, 1, 2}, {117, 2, 3}, {110, 1, 4}, {103, 1, 3}};
    for (const auto& e : kPairs) {
        if (n < e.sum + 9) continue;
        std::size_t xl = n - e.sum;
        if (xl % 4 == 1) return {e.q, e.r, xl, (xl + 15) / 4};
    }
    throw std::logic_error("select_pair: no residue matched");  // unreachable
}

// Raised if an assembled seed ever fails certification. The x length is
// pinned by n (x_length = n - |alpha_q| - |alpha_r|), so there is no longer
// x to fall back to at the same n; the error carries the recipe instead.
struct CertificationError : std::runtime_error {
    CertificationError(std::string msg, ConstructionRecipe rec)
        : std::runtime_error(std::move(msg)), recipe(rec) {}
    ConstructionRecipe recipe;
};

// Certified construction for any n >= 13 outside the exceptional set.
inline CertifiedMorphism construct(std::size_t n, const AppendixTable& appendix = builtin_appendix()) {
    if (n < 13) throw std::invalid_argument("construct: n must be >= 13");
    if (kExceptionalLengths.count(static_cast<int>(n)))
        throw NonexistenceError("no " + std::to_string(n) +
                                "-uniform square-free cyclic shift morphism exists "
                                "(exceptional lengths: 14, 15, 16, 20, 21, 22)");
    if (n <= 122) {
        auto it = appendix.find(static_cast<int>(n));
        if (it == appendix.end())
            throw std::runtime_error("construct: missing appendix entry for n=" + std::to_string(n));
        Morphism m = Morphism::from_seed(it->second);
        auto cert = berstel_test(m);
        if (!cert.verdict)
            throw std::runtime_error("construct: appendix seed failed certification at n=" +
                                     std::to_string(n));
        return {m, {n, ConstructionRecipe::Source::appendix}, cert};
    }
    PairChoice pc = select_pair(n);
    ConstructionRecipe recipe{n, ConstructionRecipe::Source::assembled, pc.q, pc.r, pc.x_length, pc.k};
    BracketedX bx = make_x(recipe.k);
    Word seed = alpha(pc.q) + bx.x + alpha(pc.r);
    if (seed.size() != n) throw std::logic_error("construct: assembled length mismatch");
    Morphism m = Morphism::from_seed(seed);
    auto cert = berstel_test(m);
    if (!cert.verdict)
        throw CertificationError("construct: assembled seed failed certification at n=" +
                                     std::to_string(n),
                                 recipe);
    return {m, recipe, cert};
}

struct StemExistence {
    bool exists = false;
    enum class Basis { uniform_morphism, muller_morphism, cited_only, none } basis = Basis::none;
};

// An infinite square-free ternary word with an n-stem factorization exists
// for every n >= 13; for 14..16 the witnesses are cited constructions not
// bundled here, for 20..22 the bundled Muller morphisms.
inline StemExistence stem_word_exists(std::size_t n) {
    if (n < 13) return {false, StemExistence::Basis::none};
    if (n == 14 || n == 15 || n == 16) return {true, StemExistence::Basis::cited_only};
    if (n == 20 || n == 21 || n == 22) return {true, StemExistence::Basis::muller_morphism};
    return {true, StemExistence::Basis::uniform_morphism};
}

}  // namespace cycsf
