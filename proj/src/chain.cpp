#include "simatroid/chain.hpp"

#include <unordered_map>

#include "simatroid/error.hpp"

namespace simatroid {

ExactScalar ChainVector::operator[](Face f) const {
    auto it = coords_.find(f);
    return it == coords_.end() ? ExactScalar::zero(field_) : it->second;
}

void ChainVector::set(Face f, const ExactScalar& value) {
    if (value.field() != field_) throw FieldMismatch("chain over " + field_.name() + " given " + value.field().name());
    if (value.is_zero())
        coords_.erase(f);
    else
        coords_.insert_or_assign(f, value);
}

void ChainVector::add_scaled(const ExactScalar& scale, const ChainVector& other) {
    if (other.field_ != field_ || scale.field() != field_)
        throw FieldMismatch("chain arithmetic across fields");
    if (scale.is_zero()) return;
    for (const auto& [face, coef] : other.coords_) {
        auto it = coords_.find(face);
        if (it == coords_.end()) {
            coords_.emplace(face, scale * coef);
            continue;
        }
        it->second += scale * coef;
        if (it->second.is_zero()) coords_.erase(it);
    }
}

ChainVector& ChainVector::operator*=(const ExactScalar& s) {
    if (s.field() != field_) throw FieldMismatch("chain scaling across fields");
    if (s.is_zero()) {
        coords_.clear();
        return *this;
    }
    for (auto& [face, coef] : coords_) coef *= s;
    return *this;
}

FaceSet ChainVector::support() const {
    FaceSet out;
    out.reserve(coords_.size());
    for (const auto& [face, coef] : coords_) out.push_back(face);
    return out;
}

Vector ChainVector::to_dense(std::span<const Face> basis) const {
    Vector out(basis.size(), ExactScalar::zero(field_));
    std::size_t hit = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = coords_.find(basis[i]);
        if (it != coords_.end()) {
            out[i] = it->second;
            ++hit;
        }
    }
    if (hit != coords_.size()) throw Error("chain has support outside the requested basis");
    return out;
}

ChainVector ChainVector::from_dense(FieldSpec field, std::span<const Face> basis, const Vector& values) {
    if (values.size() != basis.size()) throw Error("coordinate count does not match basis");
    ChainVector v(field);
    for (std::size_t i = 0; i < basis.size(); ++i) v.set(basis[i], values[i]);
    return v;
}

std::string ChainVector::to_string() const {
    std::string out;
    for (const auto& [face, coef] : coords_) out += coef.to_string() + " : " + face.to_string() + "\n";
    return out;
}

ChainVector boundary(const HypercliqueComplex& c, Face f, FieldSpec field) {
    if (f.size() < 2) throw Error("boundary needs a face with at least two vertices");
    if (!c.is_face(f)) throw Error("{" + f.to_string() + "} is not a face of the complex");
    ChainVector out(field);
    for (int v : f.vertices()) {
        Face sub = f.without(v);
        out.set(sub, ExactScalar(field, static_cast<long>(incidence(sub, f))));
    }
    return out;
}

ChainVector coboundary(const HypercliqueComplex& c, Face v, FieldSpec field) {
    if (v.size() != c.k() - 1) throw Error("coboundary expects a (k-1)-set, got {" + v.to_string() + "}");
    ChainVector out(field);
    for (Face f : c.star(v)) out.set(f, ExactScalar(field, static_cast<long>(incidence(v, f))));
    return out;
}

ChainVector boundary_of_chain(const HypercliqueComplex& c, const ChainVector& chain) {
    ChainVector out(chain.field());
    for (const auto& [face, coef] : chain.coefficients()) out.add_scaled(coef, boundary(c, face, chain.field()));
    return out;
}

BoundaryMatrix boundary_matrix(const HypercliqueComplex& c, FieldSpec field) {
    BoundaryMatrix bm{all_subsets(c.n(), c.k() - 1), c.generators(), {}};
    bm.matrix = ExactMatrix(field, bm.rows.size(), bm.cols.size());
    std::unordered_map<Face, std::size_t> row_of;
    for (std::size_t i = 0; i < bm.rows.size(); ++i) row_of.emplace(bm.rows[i], i);
    for (std::size_t j = 0; j < bm.cols.size(); ++j) {
        Face f = bm.cols[j];
        for (int v : f.vertices()) {
            Face sub = f.without(v);
            bm.matrix.set(row_of.at(sub), j, static_cast<long>(incidence(sub, f)));
        }
    }
    return bm;
}

}  // namespace simatroid
