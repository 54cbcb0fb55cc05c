#pragma once

#include "fwps/intlat.hpp"
#include "fwps/toric.hpp"

namespace fwps {

/// Fundamental group in codimension 1 of the toric variety of a fan: the
/// ambient lattice modulo the sublattice generated by the rays. Only the
/// 1-skeleton matters, so max_cones are ignored.
inline AbelianGroupInvariants pi11_of_fan(const Fan& fan) {
    if (fan.rays().empty()) return AbelianGroupInvariants{{}, fan.dim()};
    return quotient_invariants(ray_matrix(fan.rays()));
}

inline AbelianGroupInvariants pi11_of_fan(const FwpsFan& fan) {
    return quotient_invariants(ray_matrix(fan.rays()));
}

/// A fake weighted projective space is a genuine one exactly when it is
/// 1-connected in codimension 1, i.e. the rays generate the full lattice.
inline bool is_wps(const FwpsFan& fan) { return pi11_of_fan(fan).is_trivial(); }

/// Universal cover in codimension 1 of a fwps: the weighted projective space
/// with the same ray vectors read in the finer lattice they generate. The
/// covering map is the identity on ray lists; only the lattice changes.
struct CoverDescription {
    WeightVector cover_weights;
    AbelianGroupInvariants deck_group;
    IntMatrix sublattice_basis; // HNF basis of the ray-generated sublattice
    Int index;
};

inline CoverDescription universal_cover(const FwpsFan& fan) {
    IntMatrix m = ray_matrix(fan.rays());
    AbelianGroupInvariants deck = quotient_invariants(m);
    std::optional<Int> index = deck.order(); // rays span, so always finite
    return CoverDescription{fan.weights(), std::move(deck), hnf_column_basis(m), *index};
}

} // namespace fwps
