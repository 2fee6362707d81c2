#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "simatroid/certificate.hpp"

namespace simatroid {

struct CommandOptions {
    std::optional<FieldSpec> field;  ///< overrides the instance directive; GF(2) if neither
    Strategy strategy = Strategy::backtracking;
    Guards guards;
    std::string generator;  ///< gen: projective-plane, prop54, random, example3
    int n = 0;              ///< gen, dual-check
    int k = 0;
    std::uint64_t seed = 0;
    Density density{1, 2};
};

struct CommandResult {
    std::string text;
    int exit_code = 0;  ///< 0 decided, 2 inconclusive, 1 error
};

/// analyze, perfect, superdense, supersolvable, triangulate, decompose,
/// dual-check, gen, verify. Commands other than gen and dual-check need an
/// instance; verify takes the certificate text in `input` instead.
/// Errors are reported in the text with exit code 1, never thrown.
CommandResult run_command(std::string_view cmd, const std::optional<Instance>& instance,
                          const CommandOptions& options, std::string_view input = {});

}  // namespace simatroid
