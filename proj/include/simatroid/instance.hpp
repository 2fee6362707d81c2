#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "simatroid/complex.hpp"
#include "simatroid/field.hpp"

namespace simatroid {

/// A k-set family on [n] as read from or written to an instance file.
struct Instance {
    int n = 0;
    int k = 0;
    FaceSet faces;                   ///< lexicographic, no repeats
    std::optional<FieldSpec> field;  ///< from a "field" directive, if any
    std::string id;

    HypercliqueComplex complex() const { return HypercliqueComplex(n, k, faces); }
    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Parses "n k", an optional "field p|q" line, then one face per line.
/// Blank lines and lines starting with '#' are skipped. Vertices within a
/// line may come in any order but must be distinct. Throws ParseError.
Instance parse_instance(std::string_view text, std::string id = {});

/// Canonical text: header, field directive when set, sorted faces.
std::string write_instance(const Instance& inst);

Instance from_complex(const HypercliqueComplex& c, std::string id = {});

/// A rational in (0, 1] given as "a/b", a decimal, or an integer.
struct Density {
    std::uint64_t num = 1;
    std::uint64_t den = 1;

    static Density parse(std::string_view text);
    std::string to_string() const;
};

/// Random k-set family: each k-subset of [n], in lexicographic order, is
/// kept iff the high 32 bits of the next state of the LCG
///   x <- x * 6364136223846793005 + 1442695040888963407  (mod 2^64),
/// started from x = seed, are below density * 2^32.
Instance gen_random(int n, int k, Density density, std::uint64_t seed);

/// Thirteen triples on [9] whose (k+1)-faces are 1245, 1367 and 2389.
Instance gen_example3();

}  // namespace simatroid
