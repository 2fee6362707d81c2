#include "simatroid/certificate.hpp"

#include <sstream>

#include "simatroid/error.hpp"

namespace simatroid {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

Face face_of(const std::vector<std::string>& toks, std::size_t from, std::size_t to, std::size_t line) {
    std::vector<int> vs;
    for (std::size_t i = from; i < to; ++i) {
        try {
            std::size_t used = 0;
            int v = std::stoi(toks[i], &used);
            if (used != toks[i].size()) throw std::invalid_argument(toks[i]);
            vs.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(line, "malformed vertex '" + toks[i] + "'");
        }
    }
    try {
        return Face::of(vs);
    } catch (const Error& e) {
        throw ParseError(line, e.what());
    }
}

void write_steps(std::ostream& out, const std::vector<PeelStep>& steps) {
    for (const auto& s : steps) {
        out << "step " << s.v.to_string() << " |";
        for (std::size_t i = 0; i < s.peeled.size(); ++i) out << (i ? " , " : " ") << s.peeled[i].to_string();
        out << '\n';
    }
}

PeelStep read_step(const std::vector<std::string>& toks, std::size_t line) {
    std::size_t bar = 1;
    while (bar < toks.size() && toks[bar] != "|") ++bar;
    if (bar == toks.size()) throw ParseError(line, "step line needs '|'");
    PeelStep step{face_of(toks, 1, bar, line), {}};
    std::size_t start = bar + 1;
    for (std::size_t i = start; i <= toks.size(); ++i) {
        if (i == toks.size() || toks[i] == ",") {
            if (i == start) throw ParseError(line, "empty face in step");
            step.peeled.push_back(face_of(toks, start, i, line));
            start = i + 1;
        }
    }
    return step;
}

}  // namespace

std::string Certificate::kind() const {
    switch (body.index()) {
        case 0: return "dperfect";
        case 1: return "superdense";
        default: return "decomposition";
    }
}

std::string serialize(const Certificate& cert) {
    if (!cert.instance.field) throw Error("certificate instance has no field");
    std::ostringstream out;
    out << "certificate " << cert.kind() << '\n';
    out << "n " << cert.instance.n << '\n' << "k " << cert.instance.k << '\n';
    out << "field " << cert.instance.field->directive() << '\n';
    for (Face f : cert.instance.faces) out << "face " << f.to_string() << '\n';
    if (auto d = std::get_if<DPerfectCertificate>(&cert.body)) write_steps(out, d->steps);
    if (auto s = std::get_if<SuperdenseCertificate>(&cert.body)) write_steps(out, s->steps);
    if (auto t = std::get_if<TriangulationCertificate>(&cert.body)) {
        for (const auto& [f, c] : t->target.coefficients()) out << "coef " << c.to_string() << ' ' << f.to_string() << '\n';
        for (const auto& term : t->terms) out << "term " << term.scale.to_string() << ' ' << term.apex.to_string() << '\n';
    }
    out << "end\n";
    return out.str();
}

std::vector<Certificate> parse_certificates(std::string_view text) {
    std::vector<Certificate> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    std::optional<Certificate> cur;
    std::string kind;
    std::size_t started = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = split(raw);
        if (toks.empty()) continue;
        if (!cur) {
            if (toks[0] != "certificate") continue;
            if (toks.size() != 2) throw ParseError(lineno, "expected \"certificate <kind>\"");
            kind = toks[1];
            cur.emplace();
            if (kind == "dperfect")
                cur->body = DPerfectCertificate{};
            else if (kind == "superdense")
                cur->body = SuperdenseCertificate{};
            else if (kind == "decomposition")
                cur->body = TriangulationCertificate{ChainVector(), {}, 0};
            else
                throw ParseError(lineno, "unknown certificate kind '" + kind + "'");
            started = lineno;
            continue;
        }
        const auto& key = toks[0];
        auto& inst = cur->instance;
        if (key == "end") {
            if (!inst.field || inst.n == 0 || inst.k == 0) throw ParseError(lineno, "certificate missing n, k or field");
            normalize(inst.faces);
            if (auto t = std::get_if<TriangulationCertificate>(&cur->body)) {
                // rebuild the target with the right field
                ChainVector target(*inst.field);
                for (const auto& [f, c] : t->target.coefficients()) target.set(f, c);
                t->target = target;
            }
            out.push_back(std::move(*cur));
            cur.reset();
            continue;
        }
        try {
            if ((key == "n" || key == "k") && toks.size() == 2) {
                (key == "n" ? inst.n : inst.k) = std::stoi(toks[1]);
            } else if (key == "field" && toks.size() == 2) {
                inst.field = FieldSpec::parse(toks[1]);
            } else if (key == "face") {
                inst.faces.push_back(face_of(toks, 1, toks.size(), lineno));
            } else if (key == "step") {
                auto step = read_step(toks, lineno);
                if (auto d = std::get_if<DPerfectCertificate>(&cur->body))
                    d->steps.push_back(std::move(step));
                else if (auto s = std::get_if<SuperdenseCertificate>(&cur->body))
                    s->steps.push_back(std::move(step));
                else
                    throw ParseError(lineno, "step line in a decomposition certificate");
            } else if ((key == "coef" || key == "term") && toks.size() >= 3) {
                auto t = std::get_if<TriangulationCertificate>(&cur->body);
                if (!t) throw ParseError(lineno, key + " line outside a decomposition certificate");
                if (!inst.field) throw ParseError(lineno, "field must precede scalars");
                auto scalar = ExactScalar::parse(*inst.field, toks[1]);
                Face f = face_of(toks, 2, toks.size(), lineno);
                if (key == "coef") {
                    if (t->target.field() != *inst.field) t->target = ChainVector(*inst.field);
                    if (scalar.is_zero() || !t->target[f].is_zero())
                        throw ParseError(lineno, "zero or repeated coefficient");
                    t->target.set(f, scalar);
                } else {
                    t->terms.push_back({scalar, f});
                }
            } else {
                throw ParseError(lineno, "unexpected line in certificate");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (cur) throw ParseError(started, "unterminated certificate block");
    return out;
}

Verdict verify_certificate(const Certificate& cert) {
    const auto& inst = cert.instance;
    if (!inst.field) return Verdict::fail("certificate has no field");
    std::optional<HypercliqueComplex> c;
    try {
        c.emplace(inst.complex());
    } catch (const Error& e) {
        return Verdict::fail(std::string("invalid instance: ") + e.what());
    }
    if (auto d = std::get_if<DPerfectCertificate>(&cert.body)) return verify_dperfect(*c, *inst.field, *d);
    if (auto s = std::get_if<SuperdenseCertificate>(&cert.body))
        return verify_superdense(SimplicialMatroid(*c, *inst.field), *s);
    const auto& t = std::get<TriangulationCertificate>(cert.body);
    SimplicialMatroid m(*c, *inst.field);
    try {
        if (!in_circuit_space(m, t.target)) return Verdict::fail("target is not in the circuit space");
    } catch (const Error& e) {
        return Verdict::fail(e.what());
    }
    return verify_decomposition(*c, *inst.field, t);
}

}  // namespace simatroid
