#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "simatroid/instance.hpp"
#include "simatroid/triangulation.hpp"

namespace simatroid {

/// A certificate bundled with the instance and field it speaks about, so
/// that it can be checked from its text alone.
struct Certificate {
    Instance instance;  ///< field is always set
    std::variant<DPerfectCertificate, SuperdenseCertificate, TriangulationCertificate> body;

    std::string kind() const;  ///< "dperfect", "superdense" or "decomposition"
};

/// Plain-text block:
///   certificate <kind>
///   n <n>
///   k <k>
///   field <p|q>
///   face <vertices>            one per generator
///   step <v> | <f> , <f> ...   dperfect and superdense
///   coef <scalar> <vertices>   decomposition target
///   term <scalar> <vertices>   decomposition terms
///   end
std::string serialize(const Certificate& cert);

/// Every certificate block in `text`; other lines are ignored. Throws
/// ParseError on a malformed block.
std::vector<Certificate> parse_certificates(std::string_view text);

/// Rebuilds the complex and matroid and re-runs the matching verifier.
Verdict verify_certificate(const Certificate& cert);

}  // namespace simatroid
