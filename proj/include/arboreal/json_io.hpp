#ifndef ARBOREAL_JSON_IO_HPP
#define ARBOREAL_JSON_IO_HPP

// JSON rendering.  Integers that fit in 64 bits are numbers, larger ones are
// decimal strings; rationals are strings "p/q".

#include "arboreal/analyze.hpp"
#include "arboreal/cyclo.hpp"
#include "arboreal/io.hpp"
#include "arboreal/startree.hpp"

#include <json.hpp>

#include <cmath>

namespace arboreal {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

inline Json to_json(const Rational& q) { return Json(q.get_str()); }

inline Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        Integer z;
        if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: \"" + s + "\"");
        return z;
    }
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline Json to_json(const CoefficientMap& a) {
    Json o = Json::object();
    for (const auto& [k, ak] : a) o[std::to_string(k)] = to_json(ak);
    return o;
}

inline CoefficientMap coefficient_map_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("branch map must be a JSON object");
    CoefficientMap out;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        long long k = 0;
        try {
            k = std::stoll(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || k < 0) throw std::invalid_argument("bad key \"" + key + "\"");
        out[k] = integer_from_json(value);
    }
    drop_zeros(out);
    return out;
}

inline Json to_json(const IntPolynomial& p) { return Json(format_polynomial(p)); }

inline Json to_json(const InterlacingSet& s) {
    return Json{{"side", to_string(s.side)}, {"ks", s.ks}};
}

inline Json to_json(const RationalInterval& iv) {
    const double mid = Rational((iv.lo + iv.hi) / 2).get_d();
    return Json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}, {"approx", std::round(mid * 1e6) / 1e6}};
}

inline Json to_json(const Certificate& c) {
    return Json{{"F", to_json(c.F)},
                {"a", to_json(c.a)},
                {"verified", c.verified},
                {"vertex_count", to_json(c.vertex_count())}};
}

inline Json to_json(const WeightVector& w) {
    Json v = Json::array();
    for (const auto& x : w.v) v.push_back(to_json(x));
    return Json{{"set", to_json(w.set)}, {"v", v}, {"delta", to_json(w.delta)}, {"sign", w.sign}};
}

inline Json to_json(const GammaElement& g) {
    Json prov = Json::array();
    for (const auto& [s, m] : g.provenance) prov.push_back(Json{{"set", to_json(s)}, {"multiplier", to_json(m)}});
    return Json{{"value", to_json(g.value)}, {"coeffs", to_json(g.coeffs)}, {"provenance", prov}};
}

inline Json to_json(const Zeta48Report& r) {
    Json bk = Json::object();
    for (const auto& [k, b] : r.bk0_values) bk[std::to_string(k)] = to_json(b);
    return Json{{"k_max", r.k_max},
                {"y0", to_json(r.y0)},
                {"detM", to_json(r.detM)},
                {"all_three_integral", r.all_three_integral},
                {"fk_one_mod_three", r.fk_one_mod_three},
                {"refutes", refutes(r)},
                {"bk0_values", bk}};
}

inline Json to_json(const Obstruction& o) {
    Json j;
    if (const auto* ni = std::get_if<NoInterlacing>(&o.kind)) {
        j = Json{{"kind", "no_interlacing"}, {"gap", ni->gap}};
    } else if (const auto* mp = std::get_if<ModP>(&o.kind)) {
        j = Json{{"kind", "mod_p"}, {"p", mp->p}, {"degree", mp->degree}};
    } else {
        const auto& r = std::get<ThreeAdicZeta48>(o.kind).report;
        j = Json{{"kind", "zeta48_three_adic"}, {"y0", to_json(r.y0)}, {"detM", to_json(r.detM)},
                 {"k_max", r.k_max}, {"all_three_integral", r.all_three_integral}};
    }
    j["detail"] = o.detail;
    return j;
}

inline Json to_json(const AnalysisReport& r, bool timing = false) {
    Json j;
    j["verdict"] = verdict_tag(r.verdict);
    j["F"] = to_json(r.F);
    j["n"] = r.F.degree();
    Json roots = Json::array();
    for (const auto& iv : r.roots) roots.push_back(to_json(iv));
    j["roots"] = roots;
    j["left_set"] = r.left ? to_json(*r.left) : Json();
    j["right_set"] = r.right ? to_json(*r.right) : Json();
    if (const auto* c = r.certificate()) j["certificate"] = to_json(*c);
    if (const auto* obs = r.obstructions()) {
        Json arr = Json::array();
        for (const auto& o : *obs) arr.push_back(to_json(o));
        j["obstructions"] = arr;
    }
    if (const auto* u = std::get_if<Unknown>(&r.verdict)) j["summary"] = u->summary;
    const auto& d = r.diagnostics;
    Json diag{{"path", d.path}, {"irreducibility", d.irreducibility}, {"sets_tried", d.sets_tried}};
    Json traj = Json::array();
    for (const auto& g : d.gcd_trajectory) traj.push_back(to_json(g));
    diag["gcd_trajectory"] = traj;
    diag["delta_phase_gcd"] = d.delta_phase_gcd ? to_json(*d.delta_phase_gcd) : Json();
    diag["combinations_added"] = d.combinations_added;
    diag["timed_out"] = d.timed_out;
    if (timing) diag["elapsed"] = d.elapsed_seconds;
    j["diagnostics"] = diag;
    return j;
}

inline Json to_json(const RootedStarTree& t) {
    return Json{{"branches", to_json(t.branches())},
                {"name", format_tree_name(t.branches())},
                {"vertex_count", to_json(t.vertex_count())},
                {"root_degree", to_json(t.root_degree())},
                {"height", t.height()}};
}

inline Json to_json(const CycloReport& r, bool timing = false) {
    return Json{{"m", r.m}, {"psi", to_json(r.psi)}, {"n", r.n}, {"analysis", to_json(r.analysis, timing)}};
}

}  // namespace arboreal

#endif
