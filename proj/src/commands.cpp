#include "simatroid/commands.hpp"

#include <sstream>

#include "simatroid/error.hpp"

namespace simatroid {

namespace {

class Report {
public:
    void line(std::string_view key, const std::string& value) { out_ << key << ' ' << value << '\n'; }
    void flag(std::string_view key, Decision d) {
        line(key, to_string(d));
        if (d == Decision::inconclusive) inconclusive_ = true;
    }
    void flag(std::string_view key, bool b) { flag(key, decided(b)); }
    void certificate(const Certificate& cert) {
        // re-check from the serialized text alone
        auto text = serialize(cert);
        auto parsed = parse_certificates(text);
        if (parsed.size() != 1) throw Error("internal: certificate did not round-trip");
        if (auto v = verify_certificate(parsed.front()); !v)
            throw Error("internal: emitted " + cert.kind() + " certificate fails verification: " + v.reason);
        out_ << text;
    }
    CommandResult result() const { return {out_.str(), inconclusive_ ? 2 : 0}; }

private:
    std::ostringstream out_;
    bool inconclusive_ = false;
};

void header(Report& r, const Instance& inst, const SimplicialMatroid& m) {
    r.line("instance", inst.id.empty() ? "-" : inst.id);
    r.line("field", m.field().name());
    r.line("n", std::to_string(inst.n));
    r.line("k", std::to_string(inst.k));
    r.line("ground", std::to_string(m.size()));
    r.line("rank", std::to_string(m.rank()));
    r.line("facets", std::to_string(m.complex().facets().size()));
}

Instance bound(const Instance& inst, FieldSpec field) {
    Instance out = inst;
    out.field = field;
    return out;
}

Decision dperfect(Report& r, const Instance& inst, const SimplicialMatroid& m, Strategy strategy) {
    auto cert = find_dperfect_sequence(m.complex(), m.field(), strategy);
    Decision d = Decision::yes;
    // A stuck greedy run proves nothing for k > 2; for graphs every
    // simplicial vertex may be eliminated first.
    if (!cert) d = strategy == Strategy::backtracking || inst.k == 2 ? Decision::no : Decision::inconclusive;
    r.flag("d_perfect", d);
    if (cert) r.certificate({bound(inst, m.field()), *cert});
    return d;
}

void superdense(Report& r, const Instance& inst, const SimplicialMatroid& m) {
    auto cert = check_superdense(m);
    r.flag("superdense", cert.has_value());
    if (cert) r.certificate({bound(inst, m.field()), *cert});
}

CommandResult generate(const CommandOptions& o) {
    Instance inst;
    if (o.generator == "projective-plane")
        inst = from_complex(gen_projective_plane(), "projective-plane");
    else if (o.generator == "prop54")
        inst = from_complex(gen_prop54(o.n, o.k), "prop54-n" + std::to_string(o.n) + "-k" + std::to_string(o.k));
    else if (o.generator == "random")
        inst = gen_random(o.n, o.k, o.density, o.seed);
    else if (o.generator == "example3")
        inst = gen_example3();
    else
        throw Error("unknown generator '" + o.generator + "'");
    inst.field = o.field;
    return {"# " + inst.id + "\n" + write_instance(inst), 0};
}

CommandResult verify(std::string_view input) {
    auto certs = parse_certificates(input);
    if (certs.empty()) throw Error("no certificate blocks found");
    std::ostringstream out;
    bool all = true;
    for (std::size_t i = 0; i < certs.size(); ++i) {
        auto v = verify_certificate(certs[i]);
        all = all && v.ok;
        out << "certificate " << i + 1 << ' ' << certs[i].kind() << ' ' << (v ? "valid" : "invalid: " + v.reason)
            << '\n';
    }
    return {out.str(), all ? 0 : 1};
}

CommandResult dispatch(std::string_view cmd, const std::optional<Instance>& instance, const CommandOptions& o,
                       std::string_view input) {
    if (cmd == "gen") return generate(o);
    if (cmd == "verify") return verify(input);
    if (cmd == "dual-check") {
        FieldSpec field = o.field.value_or(FieldSpec{});
        Report r;
        r.line("field", field.name());
        r.line("n", std::to_string(o.n));
        r.line("k", std::to_string(o.k));
        r.flag("duality", verify_full_duality(o.n, o.k, field, o.guards));
        return r.result();
    }
    if (!instance) throw Error("command '" + std::string(cmd) + "' needs an instance");
    const Instance& inst = *instance;
    FieldSpec field = o.field ? *o.field : inst.field.value_or(FieldSpec{});
    SimplicialMatroid m(inst.complex(), field);
    Report r;
    header(r, inst, m);

    if (cmd == "analyze") {
        dperfect(r, inst, m, o.strategy);
        superdense(r, inst, m);
        r.flag("supersolvable", check_supersolvable(m, o.guards));
        r.flag("triangulable", is_triangulable(m));
        r.flag("strongly_triangulable", is_strongly_triangulable_brute(m, o.guards));
    } else if (cmd == "perfect") {
        dperfect(r, inst, m, o.strategy);
    } else if (cmd == "superdense") {
        superdense(r, inst, m);
    } else if (cmd == "supersolvable") {
        r.flag("supersolvable", check_supersolvable(m, o.guards));
    } else if (cmd == "triangulate") {
        r.flag("triangulable", is_triangulable(m));
        r.flag("strongly_triangulable", is_strongly_triangulable_brute(m, o.guards));
    } else if (cmd == "decompose") {
        auto cert = find_dperfect_sequence(m.complex(), field, Strategy::backtracking);
        r.flag("d_perfect", cert.has_value());
        if (!cert) return r.result();
        std::vector<ChainVector> targets;
        try {
            for (const auto& c : circuits_brute(m, m.size(), o.guards)) targets.push_back(circuit_vector(m, c));
            r.line("targets", "circuits " + std::to_string(targets.size()));
        } catch (const GuardExceeded&) {
            targets = circuit_space_basis(m);
            r.line("targets", "basis " + std::to_string(targets.size()));
        }
        for (const auto& t : targets) r.certificate({bound(inst, field), strong_decompose(m, t, *cert)});
    } else {
        throw Error("unknown command '" + std::string(cmd) + "'");
    }
    return r.result();
}

}  // namespace

CommandResult run_command(std::string_view cmd, const std::optional<Instance>& instance,
                          const CommandOptions& options, std::string_view input) {
    try {
        return dispatch(cmd, instance, options, input);
    } catch (const std::exception& e) {
        return {std::string("error: ") + e.what() + "\n", 1};
    }
}

}  // namespace simatroid
