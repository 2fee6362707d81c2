#pragma once

#include <string>

namespace simatroid {

/// Outcome of re-checking a certificate: ok, or the first failed condition.
struct Verdict {
    bool ok = true;
    std::string reason;

    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const noexcept { return ok; }
};

/// Three-valued answer for computations that may hit a guard.
enum class Decision { no, yes, inconclusive };

inline const char* to_string(Decision d) {
    switch (d) {
        case Decision::yes: return "true";
        case Decision::no: return "false";
        default: return "inconclusive";
    }
}

inline Decision decided(bool b) { return b ? Decision::yes : Decision::no; }

}  // namespace simatroid
