#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fwps/pi11.hpp"
#include "fwps/quotients.hpp"
#include "fwps/toric.hpp"

namespace fwps {

using Json = nlohmann::ordered_json;

/// "trivial", "Z/3", "Z x Z/2 x Z/4", ...
inline std::string group_name(const AbelianGroupInvariants& g) {
    if (g.is_trivial()) return "trivial";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " x ";
        first = false;
    };
    if (g.free_rank == 1) {
        sep();
        os << "Z";
    } else if (g.free_rank > 1) {
        sep();
        os << "Z^" << g.free_rank;
    }
    for (Int d : g.torsion) {
        sep();
        os << "Z/" << d;
    }
    return os.str();
}

/// Largest magnitude serialized as a plain JSON number; everything beyond is
/// written as a decimal string (2^53, the double-exact integer bound).
inline constexpr Int kJsonSafeInt = (Int(1) << 53);

inline Json json_int(Int v) {
    if (v <= kJsonSafeInt && v >= -kJsonSafeInt) return Json(v);
    return Json(std::to_string(v));
}

/// Object field following the big-value convention: "key" holds a number,
/// or "key_big" holds a decimal string when the value leaves the safe range.
inline void json_put_int(Json& obj, const std::string& key, Int v) {
    if (v <= kJsonSafeInt && v >= -kJsonSafeInt)
        obj[key] = v;
    else
        obj[key + "_big"] = std::to_string(v);
}

inline Json json_int_vec(const IntVec& v) {
    Json arr = Json::array();
    for (Int x : v) arr.push_back(json_int(x));
    return arr;
}

inline Json json_group(const AbelianGroupInvariants& g) {
    Json o = Json::object();
    o["group"] = group_name(g);
    o["torsion"] = json_int_vec(g.torsion);
    o["free_rank"] = g.free_rank;
    return o;
}

/// Complete analysis of one fwps fan.
struct AnalysisReport {
    int dim;
    std::vector<IntVec> rays;
    IntVec weights;
    AbelianGroupInvariants pi11;
    bool wps;
    IntVec cover_weights;
    AbelianGroupInvariants deck_group;
    Int cover_index;
    int picard;
    std::optional<P2ActionNormalForm> p2;
    std::string p2_reason; // set when p2 is empty
};

inline AnalysisReport analyze_rays(const std::vector<IntVec>& rays) {
    FwpsFan fan = validate_fwps(rays);
    CoverDescription cover = universal_cover(fan);
    AnalysisReport rep{fan.dim(),
                       fan.rays(),
                       fan.weights().values(),
                       pi11_of_fan(fan),
                       is_wps(fan),
                       cover.cover_weights.values(),
                       cover.deck_group,
                       cover.index,
                       picard_rank(fan),
                       std::nullopt,
                       ""};
    IntVec ones(rep.cover_weights.size(), 1);
    if (rep.dim != 2) {
        rep.p2_reason = "classification applies to 2-dimensional fans only";
    } else if (rep.cover_weights != ones) {
        std::ostringstream msg;
        msg << "cover is P" << fan.weights() << ", not P^2";
        rep.p2_reason = msg.str();
    } else {
        rep.p2 = classify_p2_quotient(fan);
    }
    return rep;
}

inline Json report_json(const AnalysisReport& r) {
    Json o = Json::object();
    o["valid"] = true;
    o["dim"] = r.dim;
    Json rays = Json::array();
    for (const IntVec& v : r.rays) rays.push_back(json_int_vec(v));
    o["rays"] = rays;
    o["weights"] = json_int_vec(r.weights);
    o["pi11"] = json_group(r.pi11);
    o["is_wps"] = r.wps;
    Json cover = Json::object();
    cover["weights"] = json_int_vec(r.cover_weights);
    cover["deck_group"] = json_group(r.deck_group);
    json_put_int(cover, "index", r.cover_index);
    o["cover"] = cover;
    o["picard_rank"] = r.picard;
    if (r.p2) {
        Json p2 = Json::object();
        json_put_int(p2, "r", r.p2->r);
        json_put_int(p2, "a", r.p2->a);
        o["p2_classification"] = p2;
    } else {
        o["p2_classification"] = r.p2_reason;
    }
    return o;
}

inline std::string format_vec(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

inline std::string report_table(const AnalysisReport& r) {
    std::ostringstream os;
    os << "valid:        yes\n";
    os << "dim:          " << r.dim << "\n";
    os << "rays:        ";
    for (const IntVec& v : r.rays) os << " " << format_vec(v);
    os << "\n";
    os << "weights:      " << format_vec(r.weights) << "\n";
    os << "pi11:         " << group_name(r.pi11) << "\n";
    os << "is_wps:       " << (r.wps ? "yes" : "no") << "\n";
    os << "cover:        weights " << format_vec(r.cover_weights) << ", deck "
       << group_name(r.deck_group) << ", index " << r.cover_index << "\n";
    os << "picard_rank:  " << r.picard << "\n";
    if (r.p2)
        os << "p2_class:     r=" << r.p2->r << " a=" << r.p2->a << "\n";
    else
        os << "p2_class:     " << r.p2_reason << "\n";
    return os.str();
}

/// One row of the (r, a) sweep: every cyclic quotient of P^2 with modulus r.
struct P2EnumRecord {
    Int r;
    Int a;
    std::vector<IntVec> rays;
    Int index;
};

/// All Z_r quotients of P^2 for r <= max_r, sorted by (r, a). Each record is
/// round-trip checked through the classifier before being emitted.
inline std::vector<P2EnumRecord> enumerate_p2_quotients(Int max_r) {
    if (max_r < 1) throw std::invalid_argument("max_r must be >= 1");
    std::vector<P2EnumRecord> out;
    for (Int r = 1; r <= max_r; ++r)
        for (Int a : valid_p2_parameters(r)) {
            P2ActionNormalForm nf(r, a);
            FwpsFan fan = fwps_from_p2_action(nf);
            if (!(classify_p2_quotient(fan) == nf))
                throw std::logic_error("classification round-trip failed");
            Int index = universal_cover(fan).index;
            out.push_back(P2EnumRecord{r, a, fan.rays(), index});
        }
    return out;
}

inline Json enumerate_json(const std::vector<P2EnumRecord>& records) {
    Json arr = Json::array();
    for (const P2EnumRecord& rec : records) {
        Json o = Json::object();
        json_put_int(o, "r", rec.r);
        json_put_int(o, "a", rec.a);
        Json rays = Json::array();
        for (const IntVec& v : rec.rays) rays.push_back(json_int_vec(v));
        o["rays"] = rays;
        json_put_int(o, "index", rec.index);
        arr.push_back(o);
    }
    return arr;
}

inline std::string enumerate_table(const std::vector<P2EnumRecord>& records) {
    std::ostringstream os;
    for (const P2EnumRecord& rec : records) {
        os << "r=" << rec.r << " a=" << rec.a << " rays=";
        for (size_t i = 0; i < rec.rays.size(); ++i)
            os << (i ? " " : "") << format_vec(rec.rays[i]);
        os << " index=" << rec.index << "\n";
    }
    return os.str();
}

} // namespace fwps
