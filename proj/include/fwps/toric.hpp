#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fwps/intlat.hpp"

namespace fwps {

/// Positive integer weights a_0,...,a_n with gcd 1, paired positionally with
/// the rays of a fan (a_i belongs to ray i).
class WeightVector {
public:
    explicit WeightVector(IntVec a) : a_(std::move(a)) {
        if (a_.size() < 2)
            throw std::invalid_argument("weight vector needs at least two entries");
        for (size_t i = 0; i < a_.size(); ++i)
            if (a_[i] < 1)
                throw Error(Errc::NonpositiveWeight,
                            "weight " + std::to_string(i) + " is not positive",
                            static_cast<int>(i));
        if (gcd_vector(a_) != 1)
            throw std::invalid_argument("weight vector entries must have gcd 1");
    }

    /// Divides out the global gcd of a raw positive list.
    static WeightVector normalized(IntVec a) {
        if (a.size() < 2)
            throw std::invalid_argument("weight vector needs at least two entries");
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] < 1)
                throw Error(Errc::NonpositiveWeight,
                            "weight " + std::to_string(i) + " is not positive",
                            static_cast<int>(i));
        return WeightVector(primitivize(std::move(a)));
    }

    const IntVec& values() const { return a_; }
    size_t size() const { return a_.size(); }
    Int operator[](size_t i) const { return a_[i]; }

    friend bool operator==(const WeightVector& x, const WeightVector& y) = default;

    friend std::ostream& operator<<(std::ostream& os, const WeightVector& w) {
        os << "(";
        for (size_t i = 0; i < w.a_.size(); ++i) os << (i ? "," : "") << w.a_[i];
        return os << ")";
    }

private:
    IntVec a_;
};

/// General fan skeleton: primitive, pairwise distinct rays plus optional
/// maximal-cone index sets. Only the data consumed here; no geometric
/// consistency checks beyond index validity.
class Fan {
public:
    Fan(int dim, std::vector<IntVec> rays,
        std::optional<std::vector<std::vector<int>>> max_cones = std::nullopt)
        : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
        if (dim_ < 1) throw std::invalid_argument("fan dimension must be positive");
        for (size_t i = 0; i < rays_.size(); ++i) {
            if (static_cast<int>(rays_[i].size()) != dim_)
                throw std::invalid_argument("ray " + std::to_string(i) + " has wrong length");
            if (gcd_vector(rays_[i]) != 1)
                throw Error(Errc::NotPrimitive, "ray " + std::to_string(i) + " is not primitive",
                            static_cast<int>(i));
            for (size_t j = 0; j < i; ++j)
                if (rays_[i] == rays_[j])
                    throw std::invalid_argument("rays " + std::to_string(j) + " and " +
                                                std::to_string(i) + " coincide");
        }
        if (max_cones_)
            for (const auto& cone : *max_cones_)
                for (int idx : cone)
                    if (idx < 0 || idx >= static_cast<int>(rays_.size()))
                        throw std::invalid_argument("max cone references ray " +
                                                    std::to_string(idx));
    }

    int dim() const { return dim_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const std::optional<std::vector<std::vector<int>>>& max_cones() const { return max_cones_; }

private:
    int dim_;
    std::vector<IntVec> rays_;
    std::optional<std::vector<std::vector<int>>> max_cones_;
};

/// Rays as matrix columns, in ray order.
inline IntMatrix ray_matrix(const std::vector<IntVec>& rays) {
    return IntMatrix::from_columns(rays);
}

/// Fan of a fake weighted projective space: n+1 primitive rays spanning R^n
/// with a strictly positive integer relation sum(a_i * v_i) = 0. The relation
/// (gcd-normalized) is cached as the weight vector.
class FwpsFan {
public:
    /// Checks the fwps fan shape and computes the weights. Error cases, in
    /// the order tested: NotPrimitive(i), WrongCount, NotSpanning,
    /// NoPositiveRelation.
    static FwpsFan validate(std::vector<IntVec> rays) {
        if (rays.empty()) throw std::invalid_argument("empty ray list");
        const int n = static_cast<int>(rays.front().size());
        if (n < 1) throw std::invalid_argument("rays must have positive length");
        for (size_t i = 0; i < rays.size(); ++i)
            if (static_cast<int>(rays[i].size()) != n)
                throw std::invalid_argument("ray " + std::to_string(i) + " has wrong length");
        for (size_t i = 0; i < rays.size(); ++i)
            if (gcd_vector(rays[i]) != 1)
                throw Error(Errc::NotPrimitive, "ray " + std::to_string(i) + " is not primitive",
                            static_cast<int>(i));
        if (static_cast<int>(rays.size()) != n + 1)
            throw Error(Errc::WrongCount, "expected " + std::to_string(n + 1) + " rays, got " +
                                              std::to_string(rays.size()));
        IntMatrix m = ray_matrix(rays);
        std::vector<IntVec> kernel = integer_kernel(m);
        if (kernel.size() != 1)
            throw Error(Errc::NotSpanning, "rays span a sublattice of rank " +
                                               std::to_string(n + 1 - (int)kernel.size()) +
                                               " < " + std::to_string(n));
        const IntVec& rel = kernel.front(); // primitive, first nonzero entry positive
        for (Int c : rel)
            if (c <= 0)
                throw Error(Errc::NoPositiveRelation,
                            "no strictly positive relation among the rays: 0 is not interior "
                            "to their convex hull");
        return FwpsFan(n, std::move(rays), WeightVector(rel));
    }

    int dim() const { return dim_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const WeightVector& weights() const { return weights_; }

    /// The implied maximal cones: sigma_i spans all rays but the i-th.
    Fan as_fan(bool with_max_cones = true) const {
        if (!with_max_cones) return Fan(dim_, rays_);
        std::vector<std::vector<int>> cones;
        for (int skip = 0; skip <= dim_; ++skip) {
            std::vector<int> cone;
            for (int i = 0; i <= dim_; ++i)
                if (i != skip) cone.push_back(i);
            cones.push_back(std::move(cone));
        }
        return Fan(dim_, rays_, cones);
    }

    friend bool operator==(const FwpsFan& a, const FwpsFan& b) {
        return a.rays_ == b.rays_;
    }

private:
    FwpsFan(int dim, std::vector<IntVec> rays, WeightVector w)
        : dim_(dim), rays_(std::move(rays)), weights_(std::move(w)) {}

    int dim_;
    std::vector<IntVec> rays_;
    WeightVector weights_;
};

inline FwpsFan validate_fwps(std::vector<IntVec> rays) {
    return FwpsFan::validate(std::move(rays));
}

/// The unique primitive strictly positive relation, in ray order.
inline WeightVector weights_from_rays(const FwpsFan& fan) { return fan.weights(); }

/// Builds the fan of P(a_0,...,a_n): carry a to the first basis vector by a
/// unimodular transform, drop the first coordinate of the transformed basis
/// images, primitivize. The rays generate the full lattice, so the result is
/// a genuine weighted projective space; its recomputed weights are the
/// well-formed normalization of a.
inline FwpsFan fan_from_weights(const WeightVector& a) {
    const int n1 = static_cast<int>(a.size()); // n+1
    IntMatrix col(n1, 1);
    for (int i = 0; i < n1; ++i) col.at(i, 0) = a[i];
    SnfDecomposition s = smith_normal_form(col);
    // gcd(a) = 1, so D = e_0 and (V00 * U) a = e_0
    const BigInt& v = s.V.at(0, 0);
    std::vector<IntVec> rays;
    for (int i = 0; i < n1; ++i) {
        BigVec r(n1 - 1);
        for (int k = 1; k < n1; ++k) r[k - 1] = v * s.U.at(k, i);
        rays.push_back(narrow_vec(primitivize_big(std::move(r))));
    }
    return FwpsFan::validate(std::move(rays));
}

/// Well-formed weights of P(a): gcd of every n-element subset is 1. Realized
/// by rebuilding the fan and reading the weights back off.
inline WeightVector wellform_weights(IntVec raw) {
    return fan_from_weights(WeightVector::normalized(std::move(raw))).weights();
}

/// rk Pic = #rays - dim for a complete simplicial fan (caller asserts
/// completeness and simplicialness).
inline int picard_rank(const Fan& fan) {
    if (static_cast<int>(fan.rays().size()) < fan.dim())
        throw Error(Errc::Underflow, "fewer rays than the fan dimension");
    return static_cast<int>(fan.rays().size()) - fan.dim();
}

inline int picard_rank(const FwpsFan& fan) {
    return static_cast<int>(fan.rays().size()) - fan.dim(); // always 1
}

} // namespace fwps
