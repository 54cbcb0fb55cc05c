#pragma once

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "fwps/pi11.hpp"
#include "fwps/toric.hpp"

namespace fwps {

namespace detail {

inline bool is_unit_mod(Int x, Int r) { return std::gcd(checked::mod_floor(x, r), r) == 1; }

/// Inverse of x modulo r (requires gcd(x, r) = 1), least nonnegative.
inline Int mod_inverse(Int x, Int r) {
    Int a, b;
    Int g = exgcd(checked::mod_floor(x, r), r, a, b);
    if (g != 1) throw std::invalid_argument("mod_inverse of a non-unit");
    return checked::mod_floor(a, r);
}

} // namespace detail

/// Z_r acting on C^{n+1} coordinate-wise: a chosen primitive r-th root of
/// unity multiplies coordinate i by its exponents[i]-th power.
struct DiagonalAction {
    Int r;
    IntVec exponents; // least nonnegative residues mod r

    DiagonalAction(Int modulus, IntVec exps) : r(modulus), exponents(std::move(exps)) {
        if (r < 1) throw std::invalid_argument("modulus must be >= 1");
        for (Int& e : exponents) e = checked::mod_floor(e, r);
    }

    friend bool operator==(const DiagonalAction&, const DiagonalAction&) = default;
};

/// The rank-(n+1) lattice extension Z*v + Z^{n+1}, v = (1/r)(numerators).
struct LatticeExtension {
    Int r;
    IntVec numerators; // reduced mod r

    friend bool operator==(const LatticeExtension&, const LatticeExtension&) = default;
};

/// Canonical form of a Z_r action on P^2 that is free outside finitely many
/// points: (z0 : e^{a+1} z1 : e^a z2) with a and a+1 units mod r. For r = 1
/// the canonical representative is a = 1.
struct P2ActionNormalForm {
    Int r;
    Int a;

    P2ActionNormalForm(Int modulus, Int value) : r(modulus), a(value) {
        if (r < 1) throw std::invalid_argument("modulus must be >= 1");
        if (r == 1) {
            a = 1;
            return;
        }
        a = checked::mod_floor(a, r);
        if (std::gcd(a, r) != 1 || std::gcd(a + 1, r) != 1)
            throw Error(Errc::NotFreeInCodim1,
                        "a = " + std::to_string(a) + " and a+1 must both be units mod " +
                            std::to_string(r));
    }

    friend bool operator==(const P2ActionNormalForm&, const P2ActionNormalForm&) = default;
};

/// P(a_0,...,a_n) presented as P^n / (Z_{a_0} + ... + Z_{a_n}) where the i-th
/// generator multiplies coordinate i by a primitive a_i-th root of unity.
struct ProductQuotientPresentation {
    IntVec group_orders;

    friend bool operator==(const ProductQuotientPresentation&,
                           const ProductQuotientPresentation&) = default;
};

inline ProductQuotientPresentation wps_as_pn_quotient(const WeightVector& a) {
    return ProductQuotientPresentation{a.values()};
}

/// Dictionary direction lattice -> action: the extension Z*v + Z^{n+1} with
/// v = (1/r)(numerators) corresponds to the diagonal Z_r action with those
/// exponents. The extension has full index r only when gcd(numerators, r) = 1.
inline DiagonalAction action_from_extension(Int r, const IntVec& numerators) {
    if (r < 1) throw std::invalid_argument("modulus must be >= 1");
    if (numerators.empty()) throw std::invalid_argument("empty numerator list");
    Int g = r;
    for (Int x : numerators) g = std::gcd(g, checked::abs(x));
    if (g != 1)
        throw Error(Errc::DegenerateExtension,
                    "gcd of numerators and modulus is " + std::to_string(g) +
                        "; the extension has index " + std::to_string(r / g) + " < " +
                        std::to_string(r));
    return DiagonalAction(r, numerators);
}

/// Dictionary direction action -> lattice, reduced to the canonical
/// representative with numerators in [0, r). Vectors differing by an integral
/// vector give the same extension.
inline LatticeExtension extension_from_action(const DiagonalAction& action) {
    Int g = action.r;
    for (Int x : action.exponents) g = std::gcd(g, x);
    if (g != 1)
        throw Error(Errc::DegenerateExtension,
                    "gcd of exponents and modulus is " + std::to_string(g) +
                        "; the extension has index " + std::to_string(action.r / g) + " < " +
                        std::to_string(action.r));
    return LatticeExtension{action.r, action.exponents};
}

/// Valid parameters a for a Z_r quotient of P^2, in canonical order. For
/// r = 1 this is {1}; r = 2 is empty (a and a+1 cannot both be odd).
inline IntVec valid_p2_parameters(Int r) {
    if (r < 1) throw std::invalid_argument("modulus must be >= 1");
    if (r == 1) return {1};
    IntVec out;
    for (Int a = 1; a < r; ++a)
        if (std::gcd(a, r) == 1 && std::gcd(a + 1, r) == 1) out.push_back(a);
    return out;
}

/// Carries an exponent triple to the canonical (0, a+1, a) shape by a unit
/// multiple and a global shift. Requires every pairwise exponent difference
/// to be a unit mod r (freeness outside finitely many points); the canonical
/// pair is then unique.
inline P2ActionNormalForm normalize_p2_action(Int r, const std::array<Int, 3>& exponents) {
    if (r < 1) throw std::invalid_argument("modulus must be >= 1");
    if (r == 1) return P2ActionNormalForm(1, 1);
    std::array<Int, 3> e{};
    for (int i = 0; i < 3; ++i) e[i] = checked::mod_floor(exponents[i], r);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!detail::is_unit_mod(e[i] - e[j], r))
                throw Error(Errc::NotFreeInCodim1,
                            "exponent difference " + std::to_string(e[i]) + " - " +
                                std::to_string(e[j]) + " is not a unit mod " + std::to_string(r));
    // With the first coordinate pinned to 0, the multiplier is forced:
    // m*(e1 - e2) = (a+1) - a = 1.
    Int m = detail::mod_inverse(e[1] - e[2], r);
    Int a = checked::mod_floor(checked::mul(m, checked::sub(e[2], e[0])), r);
    return P2ActionNormalForm(r, a);
}

/// The fan realizing P^2 / Z_r for the normal form (r, a): rays (1,0), (a,r),
/// (-1-a,-r). Its cover has weights (1,1,1) and deck group Z/r.
inline FwpsFan fwps_from_p2_action(const P2ActionNormalForm& nf) {
    IntVec v0{1, 0};
    IntVec v1{nf.a, nf.r};
    IntVec v2{checked::sub(-1, nf.a), checked::neg(nf.r)};
    for (const IntVec& v : {v0, v1, v2})
        if (gcd_vector(v) != 1)
            throw Error(Errc::NotPrimitiveRay, "ray is not primitive; invalid normal form");
    return FwpsFan::validate({v0, v1, v2});
}

/// Recognizes a 2-dimensional fwps covered by P^2 as an explicit Z_r
/// quotient: a unimodular transform carries ray 0 to (1,0) and the sign of
/// the second row normalizes ray 1 to (a, r) with r = covering index.
inline P2ActionNormalForm classify_p2_quotient(const FwpsFan& fan) {
    if (fan.dim() != 2)
        throw Error(Errc::CoverNotP2,
                    "classification applies to 2-dimensional fans, got dim " +
                        std::to_string(fan.dim()));
    IntVec ones(fan.rays().size(), 1);
    if (fan.weights().values() != ones) {
        std::ostringstream msg;
        msg << "cover is P" << fan.weights() << ", not P^2";
        throw Error(Errc::CoverNotP2, msg.str());
    }
    const IntVec& w0 = fan.rays()[0];
    const IntVec& w1 = fan.rays()[1];
    Int x, y;
    detail::exgcd(w0[0], w0[1], x, y); // x*w0[0] + y*w0[1] = 1
    // S = [[x, y], [-w0[1], w0[0]]] sends w0 to (1, 0)
    Int A = checked::add(checked::mul(x, w1[0]), checked::mul(y, w1[1]));
    Int R = checked::sub(checked::mul(w0[0], w1[1]), checked::mul(w0[1], w1[0]));
    if (R < 0) R = checked::neg(R); // flip the second row of S
    if (R == 1) return P2ActionNormalForm(1, 1);
    return P2ActionNormalForm(R, checked::mod_floor(A, R));
}

} // namespace fwps
