#include "simatroid/instance.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "simatroid/error.hpp"

namespace simatroid {

namespace {

std::string_view trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

__extension__ typedef unsigned __int128 u128;

std::optional<long long> to_int(std::string_view tok) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return v;
}

}  // namespace

Instance parse_instance(std::string_view text, std::string id) {
    Instance inst;
    inst.id = std::move(id);
    bool have_header = false;
    std::size_t lineno = 0;
    std::vector<std::pair<Face, std::size_t>> seen;  // face, line

    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        auto toks = tokens(line);

        if (!have_header) {
            auto n = toks.size() == 2 ? to_int(toks[0]) : std::nullopt;
            auto k = toks.size() == 2 ? to_int(toks[1]) : std::nullopt;
            if (!n || !k) throw ParseError(lineno, "expected header \"n k\"");
            if (*n < 2 || *n > kMaxVertices) throw ParseError(lineno, "n must lie in [2, 64]");
            if (*k < 2 || *k > *n) throw ParseError(lineno, "k must lie in [2, n]");
            inst.n = static_cast<int>(*n);
            inst.k = static_cast<int>(*k);
            have_header = true;
            continue;
        }
        if (toks.front() == "field") {
            if (toks.size() != 2) throw ParseError(lineno, "expected \"field p\" or \"field q\"");
            if (inst.field) throw ParseError(lineno, "repeated field directive");
            if (!seen.empty()) throw ParseError(lineno, "field directive after the first face");
            try {
                inst.field = FieldSpec::parse(toks[1]);
            } catch (const Error& e) {
                throw ParseError(lineno, e.what());
            }
            continue;
        }
        if (static_cast<int>(toks.size()) != inst.k)
            throw ParseError(lineno, "expected " + std::to_string(inst.k) + " vertices, got " +
                                         std::to_string(toks.size()));
        Face f;
        for (auto tok : toks) {
            auto v = to_int(tok);
            if (!v) throw ParseError(lineno, "malformed vertex '" + std::string(tok) + "'");
            if (*v < 1 || *v > inst.n)
                throw ParseError(lineno, "vertex " + std::to_string(*v) + " out of range [1, " +
                                             std::to_string(inst.n) + "]");
            int vi = static_cast<int>(*v);
            if (f.contains(vi)) throw ParseError(lineno, "duplicate vertex " + std::to_string(vi));
            f = f.with(vi);
        }
        seen.emplace_back(f, lineno);
    }
    if (!have_header) throw ParseError(lineno, "missing header \"n k\"");

    std::stable_sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < seen.size(); ++i)
        if (seen[i].first == seen[i - 1].first)
            throw ParseError(std::max(seen[i].second, seen[i - 1].second),
                             "duplicate face {" + seen[i].first.to_string() + "}");
    for (const auto& [f, line] : seen) inst.faces.push_back(f);
    return inst;
}

std::string write_instance(const Instance& inst) {
    std::ostringstream out;
    out << inst.n << ' ' << inst.k << '\n';
    if (inst.field) out << "field " << inst.field->directive() << '\n';
    FaceSet faces = inst.faces;
    normalize(faces);
    for (Face f : faces) out << f.to_string() << '\n';
    return out.str();
}

Instance from_complex(const HypercliqueComplex& c, std::string id) {
    return Instance{c.n(), c.k(), c.generators(), std::nullopt, std::move(id)};
}

Density Density::parse(std::string_view text) {
    text = trim(text);
    mpq_class q;
    auto bad = [&] { return Error("invalid density '" + std::string(text) + "'"); };
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        auto whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18) throw bad();
        std::string digits = std::string(whole) + std::string(frac);
        if (digits.find_first_not_of("0123456789") != std::string::npos) throw bad();
        q = mpq_class(mpz_class(digits, 10), mpz_class("1" + std::string(frac.size(), '0'), 10));
    } else {
        if (text.empty() || text.find_first_not_of("0123456789/") != std::string_view::npos) throw bad();
        try {
            q = mpq_class(std::string(text), 10);
        } catch (const std::invalid_argument&) {
            throw bad();
        }
        if (q.get_den() == 0) throw bad();
    }
    q.canonicalize();
    if (sgn(q) <= 0 || q > 1) throw Error("density must lie in (0, 1], got " + std::string(text));
    if (!q.get_den().fits_ulong_p()) throw bad();
    return Density{q.get_num().get_ui(), q.get_den().get_ui()};
}

std::string Density::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Instance gen_random(int n, int k, Density density, std::uint64_t seed) {
    if (k < 2 || k > n || n > kMaxVertices) throw Error("gen_random requires 2 <= k <= n <= 64");
    if (density.num == 0 || density.den == 0 || density.num > density.den)
        throw Error("density must lie in (0, 1]");
    Instance inst;
    inst.n = n;
    inst.k = k;
    inst.id = "random-n" + std::to_string(n) + "-k" + std::to_string(k) + "-d" + density.to_string() + "-s" +
              std::to_string(seed);
    std::uint64_t x = seed;
    for_each_subset(Face::range(n), k, [&](Face f) {
        x = x * 6364136223846793005ULL + 1442695040888963407ULL;
        u128 draw = x >> 32;
        if (draw * density.den < static_cast<u128>(density.num) << 32) inst.faces.push_back(f);
    });
    return inst;
}

Instance gen_example3() {
    Instance inst;
    inst.n = 9;
    inst.k = 3;
    inst.id = "example3";
    for (auto t : std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 4, 5}, {2, 4, 5},
                                               {1, 3, 6}, {1, 3, 7}, {1, 6, 7}, {3, 6, 7}, {2, 3, 8},
                                               {2, 3, 9}, {2, 8, 9}, {3, 8, 9}})
        inst.faces.push_back(Face::of(t));
    normalize(inst.faces);
    return inst;
}

}  // namespace simatroid
