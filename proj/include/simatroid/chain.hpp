#pragma once

#include <map>

#include "simatroid/complex.hpp"
#include "simatroid/matrix.hpp"

namespace simatroid {

/// A finitely supported map from faces to field elements. Zero
/// coefficients are never stored.
class ChainVector {
public:
    explicit ChainVector(FieldSpec field = {}) : field_(field) {}

    FieldSpec field() const noexcept { return field_; }
    const std::map<Face, ExactScalar>& coefficients() const noexcept { return coords_; }

    ExactScalar operator[](Face f) const;
    void set(Face f, const ExactScalar& value);
    /// this += scale * other
    void add_scaled(const ExactScalar& scale, const ChainVector& other);

    bool is_zero() const noexcept { return coords_.empty(); }
    FaceSet support() const;
    std::size_t support_size() const noexcept { return coords_.size(); }

    /// Coordinates in the order of `basis`; faces outside the basis must
    /// have zero coefficient.
    Vector to_dense(std::span<const Face> basis) const;
    static ChainVector from_dense(FieldSpec field, std::span<const Face> basis, const Vector& values);

    ChainVector& operator+=(const ChainVector& o) { add_scaled(ExactScalar::one(field_), o); return *this; }
    ChainVector& operator-=(const ChainVector& o) { add_scaled(-ExactScalar::one(field_), o); return *this; }
    ChainVector& operator*=(const ExactScalar& s);

    friend bool operator==(const ChainVector&, const ChainVector&) = default;

    /// One "scalar : vertices" term per line.
    std::string to_string() const;

private:
    FieldSpec field_;
    std::map<Face, ExactScalar> coords_;
};

/// The boundary of an l-face as a chain over the (l-1)-sets of [n].
/// Throws Error when f is not a face of c or has fewer than two vertices.
ChainVector boundary(const HypercliqueComplex& c, Face f, FieldSpec field);

/// The coboundary of a (k-1)-set as a chain over the k-skeleton. May be zero.
ChainVector coboundary(const HypercliqueComplex& c, Face v, FieldSpec field);

/// Applies the boundary map linearly to a chain of l-faces.
ChainVector boundary_of_chain(const HypercliqueComplex& c, const ChainVector& chain);

struct BoundaryMatrix {
    FaceSet rows;  ///< every (k-1)-subset of [n], lexicographic
    FaceSet cols;  ///< the k-skeleton, lexicographic
    ExactMatrix matrix;
};

BoundaryMatrix boundary_matrix(const HypercliqueComplex& c, FieldSpec field);

}  // namespace simatroid
