// One line per acceptance criterion: "criterion N PASS|FAIL: what (details)".
// Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "simatroid/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0) out.require(secs < limit_seconds, "took longer than the time limit");
    if (!out.ok) ++failures;
    std::printf("criterion %2d %s: %s (%s%.2fs", id, out.ok ? "PASS" : "FAIL", title.c_str(), out.detail.str().c_str(),
                secs);
    if (limit_seconds > 0) std::printf(" of %.0fs", limit_seconds);
    std::printf(")\n");
    std::fflush(stdout);
}

const char* kExample3Text =
    "9 3\n1 2 3\n1 2 4\n1 2 5\n1 4 5\n2 4 5\n1 3 6\n1 3 7\n1 6 7\n3 6 7\n2 3 8\n2 3 9\n2 8 9\n3 8 9\n";
const char* kProjectivePlaneText =
    "6 3\n1 2 4\n1 2 6\n1 3 4\n1 3 5\n1 5 6\n2 3 5\n2 3 6\n2 4 5\n3 4 6\n4 5 6\n";

// 500 graphs on 4..8 vertices and 200 3-uniform families on 5..7 vertices.
const std::vector<Instance>& graphs() {
    static const auto c = corpus(2, 4, 8, 500, 1);
    return c;
}
const std::vector<Instance>& triples() {
    static const auto c = corpus(3, 5, 7, 200, 100001);
    return c;
}

// exhaustive runs here, so allow far more enumeration work than the defaults
Guards roomy() {
    Guards g;
    g.max_brute = 64;
    g.max_enumeration = 5e7;
    return g;
}

// Fundamental circuits of greedy bases over a few shuffled orders of the
// ground set; a sample for instances too large to enumerate.
std::vector<FaceSet> fundamental_circuits(const SimplicialMatroid& m, int orders) {
    std::set<FaceSet> out;
    std::vector<Face> order(m.ground().begin(), m.ground().end());
    std::mt19937_64 rng(7);
    for (int round = 0; round < orders; ++round) {
        if (round > 0) std::shuffle(order.begin(), order.end(), rng);
        std::vector<Face> basis;
        for (Face f : order) {
            basis.push_back(f);
            if (!is_independent(m, basis)) basis.pop_back();
        }
        for (Face e : order) {
            if (std::find(basis.begin(), basis.end(), e) != basis.end()) continue;
            FaceSet circ{e};
            for (std::size_t i = 0; i < basis.size(); ++i) {
                std::vector<Face> swapped = basis;
                swapped[i] = e;
                if (is_independent(m, swapped)) circ.push_back(basis[i]);
            }
            std::sort(circ.begin(), circ.end());
            out.insert(circ);
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace

int main() {
    criterion(1, "13-triple example reproduced", 1.0, [](Outcome& o) {
        auto inst = parse_instance(kExample3Text);
        auto c = inst.complex();
        o.require(inst.faces.size() == 13, "13 faces");
        o.require(c.skeleton(4) == Fs({"1245", "1367", "2389"}), "4-faces");
        o.require(c.skeleton(5).empty(), "no 5-faces");
        o.require(c.facets() == Fs({"18", "19", "26", "27", "34", "35", "46", "47", "48", "49", "56", "57", "58", "59",
                                    "68", "69", "78", "79", "123", "1245", "1367", "2389"}),
                  "22 facets");
        FaceSet seq = {F("45"), F("67"), F("89"), F("15"), F("14"), F("16"), F("17"), F("28"), F("29"), F("12")};
        for (FieldSpec field : {GF2, QQ}) {
            o.require(SimplicialMatroid(c, field).rank() == 10, "rank 10 over " + field.name());
            o.require(check_basic_linear_sequence(c, field, seq), "basic linear over " + field.name());
            auto v = verify_dperfect(c, field, certificate_from_sequence(c, seq));
            o.require(v.ok, "D-perfect over " + field.name() + ": " + v.reason);
        }
        o.detail << "facets " << c.facets().size() << ", rank 10 over GF(2) and Q; ";
    });

    criterion(2, "projective plane reproduced", 1.0, [](Outcome& o) {
        auto inst = parse_instance(kProjectivePlaneText);
        auto c = inst.complex();
        o.require(inst.faces.size() == 10, "10 faces");
        o.require(simplicial_faces(c).empty(), "no simplicial 2-faces");
        for (Face v : all_subsets(6, 2)) o.require(!is_simplicial_face_by_facets(c, v), "facet-count simpliciality");
        o.require(!find_dperfect_sequence(c, QQ, Strategy::backtracking), "no D-perfect sequence");
        SimplicialMatroid q(c, QQ);
        o.require(q.rank() == 10, "rank 10 over Q");
        o.require(circuits_brute(q, q.size()).empty(), "circuit-free over Q");
        o.require(check_supersolvable(q) == Decision::yes, "supersolvable over Q");
        SimplicialMatroid b(c, GF2);
        auto circuits = circuits_brute(b, b.size());
        o.require(b.rank() == 9, "rank 9 over GF(2)");
        o.require(circuits.size() == 1 && circuits[0].size() == 10, "single 10-circuit over GF(2)");
        o.require(!is_triangulable(b), "not triangulable over GF(2)");
        o.detail << "ranks Q " << q.rank() << " / GF(2) " << b.rank() << ", GF(2) circuits " << circuits.size()
                 << "; ";
    });

    criterion(3, "graphs: chordal iff D-perfect", 60.0, [](Outcome& o) {
        std::size_t chordal = 0;
        for (const auto& g : graphs()) {
            bool a = check_chordal_graph(g.n, g.faces);
            bool b = find_dperfect_sequence(g.complex(), GF2, Strategy::backtracking).has_value();
            o.require(a == b, g.id);
            chordal += a;
        }
        o.detail << graphs().size() << " graphs, " << chordal << " chordal; ";
    });

    criterion(4, "D-perfect iff superdense", 300.0, [](Outcome& o) {
        std::size_t checked = 0, perfect = 0;
        auto run = [&](const Instance& inst) {
            auto c = inst.complex();
            for (FieldSpec field : {GF2, QQ}) {
                bool a = find_dperfect_sequence(c, field).has_value();
                bool b = check_superdense(SimplicialMatroid(c, field)).has_value();
                o.require(a == b, inst.id + " over " + field.name());
                ++checked;
                perfect += a;
            }
        };
        for (const auto& g : graphs()) run(g);
        for (const auto& t : triples()) run(t);
        o.detail << checked << " instance/field pairs, " << perfect << " D-perfect, 0 allowed disagreements; ";
    });

    criterion(5, "strong decomposition of every circuit when D-perfect", 0, [](Outcome& o) {
        std::size_t instances = 0, circuits = 0, guarded = 0, sampled = 0;
        auto run = [&](const Instance& inst) {
            auto c = inst.complex();
            for (FieldSpec field : {GF2, QQ}) {
                auto cert = find_dperfect_sequence(c, field);
                if (!cert) continue;
                SimplicialMatroid m(c, field);
                std::vector<FaceSet> all;
                try {
                    all = circuits_brute(m, m.size(), roomy());
                } catch (const GuardExceeded&) {
                    ++guarded;
                    for (const auto& circ : fundamental_circuits(m, 20)) {
                        auto v = verify_decomposition(c, field, strong_decompose(m, circuit_vector(m, circ), *cert));
                        o.require(v.ok, inst.id + ": " + v.reason);
                        ++sampled;
                    }
                    continue;
                }
                ++instances;
                for (const auto& circ : all) {
                    auto t = strong_decompose(m, circuit_vector(m, circ), *cert);
                    auto v = verify_decomposition(c, field, t);
                    o.require(v.ok, inst.id + ": " + v.reason);
                    ++circuits;
                }
            }
        };
        for (const auto& g : graphs()) run(g);
        for (const auto& t : triples()) run(t);
        o.detail << circuits << " circuits on " << instances << " D-perfect instance/field pairs";
        if (guarded)
            o.detail << "; " << guarded << " pairs too large to enumerate, " << sampled
                     << " fundamental circuits tested there instead";
        o.detail << "; ";
    });

    criterion(6, "circuits have >= k+1 elements; (k+1)-circuits are the small circuits", 0, [](Outcome& o) {
        std::size_t instances = 0, circuits = 0;
        auto run = [&](const Instance& inst) {
            if (inst.faces.size() > 18) return;
            for (FieldSpec field : {GF2, QQ}) {
                SimplicialMatroid m(inst.complex(), field);
                auto all = circuits_brute(m, m.size(), roomy());
                std::set<FaceSet> small, minimal;
                for (const auto& sc : small_circuits(m)) small.insert(sc.members);
                for (const auto& circ : all) {
                    o.require(circ.size() >= static_cast<std::size_t>(inst.k + 1), inst.id + " short circuit");
                    if (circ.size() == static_cast<std::size_t>(inst.k + 1)) minimal.insert(circ);
                }
                o.require(minimal == small, inst.id + " (k+1)-circuits differ from small circuits");
                ++instances;
                circuits += all.size();
            }
        };
        for (const auto& g : graphs()) run(g);
        for (const auto& t : triples()) run(t);
        o.detail << circuits << " circuits on " << instances << " instance/field pairs; ";
    });

    criterion(7, "full duality for n <= 6", 120.0, [](Outcome& o) {
        std::size_t cases = 0;
        for (FieldSpec field : {GF2, GF3})
            for (int n = 4; n <= 6; ++n)
                for (int k = 2; k <= n - 2; ++k) {
                    o.require(verify_full_duality(n, k, field),
                              "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + field.name());
                    ++cases;
                }
        o.detail << cases << " (n, k, field) cases; ";
    });

    criterion(8, "glued-simplex family is triangulable but not strongly", 0, [](Outcome& o) {
        for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 3}, {7, 2}, {7, 3}, {7, 4}}) {
            std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
            auto c = gen_prop54(n, k);
            SimplicialMatroid m(c, GF2);
            o.require(is_triangulable(m), at + " triangulable");
            auto st = is_strongly_triangulable_brute(m);
            o.require(st == Decision::no, at + " strongly triangulable = " + to_string(st));
            o.require(simplicial_faces(c).empty(), at + " has a simplicial face");
            for (Face v : all_subsets(n, k - 1))
                o.require(!is_simplicial_face_by_facets(c, v), at + " facet-count simpliciality");
        }
        o.detail << "5 instances over GF(2); ";
    });

    criterion(9, "graph ranks are field-independent; projective plane is not", 0, [](Outcome& o) {
        auto sample = corpus(2, 4, 8, 100, 700001);
        for (const auto& g : sample) {
            auto c = g.complex();
            std::size_t r = SimplicialMatroid(c, GF2).rank();
            for (FieldSpec field : {GF3, GF5, QQ})
                o.require(SimplicialMatroid(c, field).rank() == r, g.id + " over " + field.name());
        }
        auto pp = gen_projective_plane();
        std::size_t r2 = SimplicialMatroid(pp, GF2).rank(), rq = SimplicialMatroid(pp, QQ).rank();
        o.require(r2 == 9 && rq == 10, "projective plane ranks");
        o.detail << sample.size() << " graphs agree; projective plane GF(2) " << r2 << " vs Q " << rq << "; ";
    });

    criterion(10, "emitted certificates re-verify from text", 0, [](Outcome& o) {
        std::size_t emitted = 0;
        auto run = [&](const Instance& inst, FieldSpec field) {
            CommandOptions opts;
            opts.field = field;
            for (const char* cmd : {"perfect", "superdense", "decompose"}) {
                auto report = run_command(cmd, inst, opts);
                o.require(report.exit_code != 1, inst.id + " " + cmd + ": " + report.text);
                // parse from the report text alone, in a fresh scope
                for (const auto& cert : parse_certificates(report.text)) {
                    auto v = verify_certificate(cert);
                    o.require(v.ok, inst.id + " " + cert.kind() + ": " + v.reason);
                    ++emitted;
                }
            }
        };
        for (FieldSpec field : {GF2, GF3, QQ}) run(gen_example3(), field);
        for (std::size_t i = 0; i < graphs().size(); i += 5) run(graphs()[i], GF2);
        for (std::size_t i = 0; i < triples().size(); i += 2) run(triples()[i], i % 4 ? GF2 : QQ);
        o.require(emitted > 0, "no certificates emitted");
        o.detail << emitted << " certificates; ";
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures;
}
