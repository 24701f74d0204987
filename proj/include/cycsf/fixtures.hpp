#pragma once

// Fixture access: the embedded appendix seed table and Muller morphisms,
// plus loaders for their on-disk text form and a checksum for audit output.

#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "cycsf/appendix_data.hpp"
#include "cycsf/morphism.hpp"
#include "cycsf/muller_data.hpp"
#include "cycsf/word.hpp"

namespace cycsf {

using AppendixTable = std::map<int, Word>;

inline const AppendixTable& builtin_appendix() {
    static const AppendixTable table = [] {
        AppendixTable t;
        for (const auto& [n, seed] : detail::kAppendixSeeds) t.emplace(n, Word::parse(seed));
        return t;
    }();
    return table;
}

inline const Morphism& builtin_muller(int n) {
    auto make = [](const std::string_view (&imgs)[3]) {
        return Morphism(Word::parse(imgs[0]), Word::parse(imgs[1]), Word::parse(imgs[2]));
    };
    static const Morphism m20 = make(detail::kMuller20);
    static const Morphism m21 = make(detail::kMuller21);
    static const Morphism m22 = make(detail::kMuller22);
    switch (n) {
        case 20: return m20;
        case 21: return m21;
        case 22: return m22;
        default: throw std::invalid_argument("builtin_muller: n must be 20, 21 or 22");
    }
}

// One entry per line: "N seed". '#' starts a comment.
inline AppendixTable load_appendix(std::istream& in) {
    AppendixTable t;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        int n;
        std::string seed;
        if (!(ls >> n >> seed)) continue;
        Word w = Word::parse(seed);
        if (w.size() != static_cast<std::size_t>(n))
            throw std::runtime_error("load_appendix: seed length mismatch at n=" + std::to_string(n));
        if (!t.emplace(n, std::move(w)).second)
            throw std::runtime_error("load_appendix: duplicate entry n=" + std::to_string(n));
    }
    return t;
}

// Lines "n letter image" for n in {20,21,22}, letter in {0,1,2}.
inline std::map<int, Morphism> load_muller(std::istream& in) {
    std::map<int, std::array<Word, 3>> imgs;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        int n, letter;
        std::string img;
        if (!(ls >> n >> letter >> img)) continue;
        imgs[n][static_cast<std::size_t>(letter)] = Word::parse(img);
    }
    std::map<int, Morphism> out;
    for (auto& [n, a] : imgs) out.emplace(n, Morphism(a[0], a[1], a[2]));
    return out;
}

inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ull) {
    for (char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t appendix_checksum(const AppendixTable& t) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& [n, seed] : t) {
        h = fnv1a(std::to_string(n) + ":", h);
        h = fnv1a(seed.view(), h);
    }
    return h;
}

}  // namespace cycsf
