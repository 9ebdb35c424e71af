#include "oriftl/params.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace oriftl {

using nlohmann::json;

const char* marker_name(Marker m) {
    switch (m) {
        case Marker::alpha1: return "alpha1";
        case Marker::alpha2: return "alpha2";
        case Marker::alpha1_inv: return "alpha1_inv";
        case Marker::alpha2_inv: return "alpha2_inv";
        case Marker::theta: return "theta";
        case Marker::theta_inv: return "theta_inv";
    }
    return "?";
}

std::optional<Marker> parse_marker(const std::string& s) {
    for (int i = 0; i < 6; ++i) {
        auto m = static_cast<Marker>(i);
        if (s == marker_name(m)) return m;
    }
    return std::nullopt;
}

Marker marker_inverse(Marker m) {
    switch (m) {
        case Marker::alpha1: return Marker::alpha1_inv;
        case Marker::alpha2: return Marker::alpha2_inv;
        case Marker::alpha1_inv: return Marker::alpha1;
        case Marker::alpha2_inv: return Marker::alpha2;
        case Marker::theta: return Marker::theta_inv;
        case Marker::theta_inv: return Marker::theta;
    }
    return m;
}

bool is_alpha_type(Marker m) { return m != Marker::theta && m != Marker::theta_inv; }

long ParamConfig::reduce(long x) const {
    if (e_ == 0) return x;
    const long m = 2 * e_;
    long r = ((x % m) + m) % m;
    if (r > e_) r -= m;
    return r;
}

std::optional<int> ParamConfig::orbit_id(const std::string& name) const {
    for (int i = 0; i < num_orbits(); ++i)
        if (orbit_names_[i] == name) return i;
    return std::nullopt;
}

int ParamConfig::intern(const std::string& name) {
    if (auto id = orbit_id(name)) return *id;
    orbit_names_.push_back(name);
    inverse_.push_back(-1);
    self_.push_back(false);
    center_.push_back(0);
    return num_orbits() - 1;
}

ParamConfig ParamConfig::make(long e, const std::array<PointSpec, 3>& points,
                              const std::map<std::string, InversionSpec>& inversions) {
    ParamConfig c;
    if (e < 0) throw ConfigError("e must be a positive integer or infinity");
    c.e_ = e;
    c.points_ = points;
    c.inversions_ = inversions;
    c.orbit_names_ = {"Z"};
    c.inverse_ = {0};
    c.self_ = {false};
    c.center_ = {0};
    static const char* names[3] = {"alpha1", "alpha2", "theta"};
    for (int i = 0; i < 3; ++i) {
        auto& p = c.points_[i];
        if (p.integral) {
            p.exponent = c.reduce(p.exponent);
        } else {
            if (p.orbit.empty()) throw ConfigError(std::string(names[i]) + ": empty orbit label");
            if (p.orbit == "Z") c.build_notes_.push_back("orbit label Z is reserved for q^Z");
            p.offset = c.reduce(p.offset);
            c.intern(p.orbit);
        }
    }
    for (const auto& [name, inv] : inversions) {
        if (name == "Z") {
            c.build_notes_.push_back("orbit label Z is reserved for q^Z");
            continue;
        }
        const int id = c.intern(name);
        if (inv.self_inverse) {
            c.self_[id] = true;
            c.center_[id] = c.reduce(inv.center);
            c.inverse_[id] = id;
        } else {
            if (inv.partner == "Z") {
                c.build_notes_.push_back("orbit " + name + " cannot be paired with q^Z");
                continue;
            }
            c.inverse_[id] = c.intern(inv.partner);
        }
    }
    // undeclared partners invert back
    for (const auto& [name, inv] : inversions) {
        if (name == "Z" || inv.self_inverse || inv.partner == "Z") continue;
        const int id = *c.orbit_id(name);
        const int pid = c.inverse_[id];
        if (c.inverse_[pid] < 0) {
            c.inverse_[pid] = id;
        } else if (c.inverse_[pid] != id) {
            c.build_notes_.push_back("orbit " + name + " is paired with " + inv.partner +
                                     " but " + inv.partner + " is not paired back");
        }
    }
    const Residue a1 = c.points_[0].integral
                           ? Residue{kIntegralOrbit, c.points_[0].exponent}
                           : Residue{*c.orbit_id(c.points_[0].orbit), c.points_[0].offset};
    const Residue a2 = c.points_[1].integral
                           ? Residue{kIntegralOrbit, c.points_[1].exponent}
                           : Residue{*c.orbit_id(c.points_[1].orbit), c.points_[1].offset};
    const Residue th = c.points_[2].integral
                           ? Residue{kIntegralOrbit, c.points_[2].exponent}
                           : Residue{*c.orbit_id(c.points_[2].orbit), c.points_[2].offset};
    auto inv_or_invalid = [&](const Residue& r) {
        if (!c.has_inversion(r.orbit)) return Residue{-1, 0};
        return res_invert(r, c);
    };
    c.markers_ = {a1, a2, inv_or_invalid(a1), inv_or_invalid(a2), th, inv_or_invalid(th)};
    return c;
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k)) throw ConfigError("unknown key '" + k + "' in " + where);
}

long get_integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ConfigError(where + " must be an integer");
    return v.get<long>();
}

}  // namespace

ParamConfig ParamConfig::from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown(j, {"e", "points", "inversions"}, "config");
    if (!j.contains("e")) throw ConfigError("missing key 'e'");
    long e = 0;
    const auto& je = j["e"];
    if (je.is_string()) {
        if (je.get<std::string>() != "infinity") throw ConfigError("e must be an integer or \"infinity\"");
        e = 0;
    } else {
        e = get_integer(je, "e");
        if (e <= 0) throw ConfigError("e must be positive");
    }
    if (!j.contains("points") || !j["points"].is_object()) throw ConfigError("missing object 'points'");
    const auto& jp = j["points"];
    reject_unknown(jp, {"alpha1", "alpha2", "theta"}, "points");
    std::array<PointSpec, 3> pts;
    static const char* names[3] = {"alpha1", "alpha2", "theta"};
    for (int i = 0; i < 3; ++i) {
        if (!jp.contains(names[i])) throw ConfigError(std::string("missing point '") + names[i] + "'");
        const auto& o = jp[names[i]];
        const std::string where = std::string("points.") + names[i];
        if (!o.is_object()) throw ConfigError(where + " must be an object");
        if (o.contains("integral")) {
            reject_unknown(o, {"integral"}, where);
            pts[i].integral = true;
            pts[i].exponent = get_integer(o["integral"], where + ".integral");
        } else if (o.contains("orbit")) {
            reject_unknown(o, {"orbit", "offset"}, where);
            if (!o["orbit"].is_string()) throw ConfigError(where + ".orbit must be a string");
            pts[i].integral = false;
            pts[i].orbit = o["orbit"].get<std::string>();
            pts[i].offset = o.contains("offset") ? get_integer(o["offset"], where + ".offset") : 0;
        } else {
            throw ConfigError(where + " needs 'integral' or 'orbit'");
        }
    }
    std::map<std::string, InversionSpec> invs;
    if (j.contains("inversions")) {
        const auto& ji = j["inversions"];
        if (!ji.is_object()) throw ConfigError("inversions must be an object");
        for (const auto& [name, o] : ji.items()) {
            const std::string where = "inversions." + name;
            if (!o.is_object()) throw ConfigError(where + " must be an object");
            InversionSpec s;
            if (o.contains("paired")) {
                reject_unknown(o, {"paired"}, where);
                if (!o["paired"].is_string()) throw ConfigError(where + ".paired must be a string");
                s.partner = o["paired"].get<std::string>();
            } else if (o.contains("self_center")) {
                reject_unknown(o, {"self_center"}, where);
                s.self_inverse = true;
                s.center = get_integer(o["self_center"], where + ".self_center");
            } else {
                throw ConfigError(where + " needs 'paired' or 'self_center'");
            }
            invs[name] = s;
        }
    }
    return make(e, pts, invs);
}

ParamConfig ParamConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw ConfigError("malformed JSON in " + path + ": " + ex.what());
    }
    return from_json(j);
}

json ParamConfig::to_json() const {
    json j;
    if (e_ == 0)
        j["e"] = "infinity";
    else
        j["e"] = e_;
    static const char* names[3] = {"alpha1", "alpha2", "theta"};
    for (int i = 0; i < 3; ++i) {
        const auto& p = points_[i];
        if (p.integral)
            j["points"][names[i]] = {{"integral", p.exponent}};
        else
            j["points"][names[i]] = {{"orbit", p.orbit}, {"offset", p.offset}};
    }
    j["inversions"] = json::object();
    for (const auto& [name, inv] : inversions_) {
        if (inv.self_inverse)
            j["inversions"][name] = {{"self_center", inv.center}};
        else
            j["inversions"][name] = {{"paired", inv.partner}};
    }
    return j;
}

Residue ParamConfig::marker_residue(Marker m) const {
    const Residue& r = markers_[static_cast<int>(m)];
    if (r.orbit < 0) throw ConfigError(std::string("no inversion rule for ") + marker_name(m));
    return r;
}

std::string ParamConfig::residue_str(const Residue& r) const {
    if (r.orbit == kIntegralOrbit) return "q^" + std::to_string(r.exp);
    return "(" + orbit_name(r.orbit) + "," + std::to_string(r.exp) + ")";
}

Residue res_shift(const Residue& r, long k, const ParamConfig& cfg) {
    return {r.orbit, cfg.reduce(r.exp + 2 * k)};
}

Residue res_invert(const Residue& r, const ParamConfig& cfg) {
    if (r.orbit < 0 || r.orbit >= cfg.num_orbits() || !cfg.has_inversion(r.orbit))
        throw ConfigError("no inversion rule for orbit id " + std::to_string(r.orbit));
    if (cfg.self_inverse_orbit(r.orbit)) return {r.orbit, cfg.reduce(cfg.orbit_center(r.orbit) - r.exp)};
    return {cfg.inverse_orbit(r.orbit), cfg.reduce(-r.exp)};
}

std::optional<Marker> marker_label_at(const ParamConfig& cfg, const Residue& lattice_base, long x) {
    const Residue r{lattice_base.orbit, cfg.reduce(x)};
    for (int i = 0; i < 6; ++i) {
        const auto m = static_cast<Marker>(i);
        const Residue& mr = cfg.marker_residue(m);
        if (mr == r) return m;
    }
    return std::nullopt;
}

bool on_hyperplane(const ParamConfig& cfg, const Residue& lattice_base, long x) {
    const int o = lattice_base.orbit;
    if (!cfg.has_inversion(o) || cfg.inverse_orbit(o) != o) return false;
    const Residue r{o, cfg.reduce(x)};
    return res_invert(r, cfg) == r;
}

std::vector<std::string> validate_config(const ParamConfig& cfg, bool allow_self_inverse) {
    std::vector<std::string> v;
    if (cfg.finite() && cfg.e() <= 2) v.push_back("e must be greater than 2");
    for (const auto& note : cfg.build_notes_) v.push_back(note);
    static const char* names[3] = {"alpha1", "alpha2", "theta"};
    for (int i = 0; i < 3; ++i) {
        const auto& p = cfg.point(i);
        if (!p.integral && p.offset % 2 != 0) v.push_back(std::string(names[i]) + " offset must be even");
    }
    bool inversions_ok = true;
    for (int id = 1; id < cfg.num_orbits(); ++id) {
        const std::string& name = cfg.orbit_name(id);
        if (!cfg.has_inversion(id)) {
            v.push_back("orbit " + name + " has no inversion rule");
            inversions_ok = false;
            continue;
        }
        if (cfg.self_inverse_orbit(id)) {
            if (!allow_self_inverse)
                v.push_back("orbit " + name + " is self-inverse (not covered by the standing assumption)");
            if (cfg.orbit_center(id) % 2 != 0) v.push_back("orbit " + name + " center parity inconsistent");
        }
    }
    if (!inversions_ok) return v;

    const Residue one{ParamConfig::kIntegralOrbit, 0};
    auto is_one = [&](const Residue& r) { return r == one; };
    auto is_minus_one = [&](const Residue& r) {
        return cfg.finite() && r == Residue{ParamConfig::kIntegralOrbit, cfg.reduce(cfg.e())};
    };

    // per i: alpha_i^{+-1} q^{2d}, d in {-1,0,1}
    for (int i = 0; i < 2; ++i) {
        const Marker base = i == 0 ? Marker::alpha1 : Marker::alpha2;
        std::vector<std::pair<std::string, Residue>> vals;
        for (int s : {1, -1}) {
            const Residue r = cfg.marker_residue(s == 1 ? base : marker_inverse(base));
            for (int d : {0, -1, 1}) {
                std::string nm = std::string(names[i]) + (s == 1 ? "" : "^-1");
                if (d != 0) nm += std::string("*q^") + (d > 0 ? "2" : "-2");
                vals.emplace_back(nm, res_shift(r, d, cfg));
            }
        }
        for (std::size_t a = 0; a < vals.size(); ++a) {
            if (is_one(vals[a].second)) v.push_back(vals[a].first + " equals 1");
            if (is_minus_one(vals[a].second)) v.push_back(vals[a].first + " equals -1");
            for (std::size_t b = a + 1; b < vals.size(); ++b)
                if (vals[a].second == vals[b].second)
                    v.push_back(vals[a].first + " equals " + vals[b].first);
        }
    }
    const Marker alphas[4] = {Marker::alpha1, Marker::alpha2, Marker::alpha1_inv, Marker::alpha2_inv};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            if ((a % 2) == (b % 2)) continue;  // same i handled above
            if (cfg.marker_residue(alphas[a]) == cfg.marker_residue(alphas[b]))
                v.push_back(std::string(marker_name(alphas[a])) + " equals " + marker_name(alphas[b]));
        }
    const Residue th = cfg.marker_residue(Marker::theta);
    if (is_one(th)) v.push_back("theta equals 1");
    if (is_minus_one(th)) v.push_back("theta equals -1");
    for (const Marker m : alphas)
        if (th == cfg.marker_residue(m)) v.push_back(std::string("theta equals ") + marker_name(m));
    for (long k : {1L, 2L}) {
        if (th == Residue{ParamConfig::kIntegralOrbit, cfg.reduce(k)})
            v.push_back("theta equals q^" + std::to_string(k));
        if (cfg.finite() && th == Residue{ParamConfig::kIntegralOrbit, cfg.reduce(cfg.e() + k)})
            v.push_back("theta equals -q^" + std::to_string(k));
    }
    return v;
}

void check_seed(const ParamConfig& cfg, const NumericSeed& seed) {
    const double eps = 1e-9;
    if (std::abs(seed.q) < eps) throw ConfigError("seed: q is zero");
    if (cfg.finite()) {
        if (std::abs(std::pow(seed.q, 2 * cfg.e()) - 1.0) > eps)
            throw ConfigError("seed: q^(2e) != 1");
        for (long j = 1; j < cfg.e(); ++j)
            if (std::abs(std::pow(seed.q, 2 * j) - 1.0) < eps)
                throw ConfigError("seed: q^2 has order smaller than e");
    }
    if (static_cast<int>(seed.orbit_base.size()) != cfg.num_orbits())
        throw ConfigError("seed: wrong number of orbit bases");
    if (std::abs(seed.orbit_base[0] - 1.0) > eps) throw ConfigError("seed: integral base must be 1");
    for (int id = 1; id < cfg.num_orbits(); ++id) {
        if (!cfg.has_inversion(id)) throw ConfigError("seed: orbit without inversion rule");
        const auto b = seed.orbit_base[id];
        if (cfg.self_inverse_orbit(id)) {
            if (std::abs(b * b * std::pow(seed.q, cfg.orbit_center(id)) - 1.0) > eps)
                throw ConfigError("seed: self-inverse orbit base inconsistent with its center");
        } else if (std::abs(b * seed.orbit_base[cfg.inverse_orbit(id)] - 1.0) > eps) {
            throw ConfigError("seed: paired orbit bases are not inverse");
        }
    }
}

std::complex<double> res_to_complex(const Residue& r, const NumericSeed& seed) {
    return seed.orbit_base.at(r.orbit) * std::pow(seed.q, static_cast<int>(r.exp));
}

NumericSeed make_seed(const ParamConfig& cfg, std::mt19937_64& rng) {
    using C = std::complex<double>;
    constexpr double pi = std::numbers::pi;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    NumericSeed s;
    if (cfg.finite()) {
        const long m = 2 * cfg.e();
        std::vector<long> units;
        for (long j = 1; j < m; ++j)
            if (std::gcd(j, m) == 1) units.push_back(j);
        const long j = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
        s.q = std::polar(1.0, pi * static_cast<double>(j) / static_cast<double>(cfg.e()));
    } else {
        while (true) {
            s.q = std::polar(1.0, 2 * pi * unit(rng));
            bool ok = true;
            for (int m = 1; m <= 24 && ok; ++m)
                if (std::abs(std::pow(s.q, m) - 1.0) < 1e-3 || std::abs(std::pow(s.q, m) + 1.0) < 1e-3) ok = false;
            if (ok) break;
        }
    }
    s.orbit_base.assign(cfg.num_orbits(), C(0.0, 0.0));
    s.orbit_base[0] = 1.0;
    for (int id = 1; id < cfg.num_orbits(); ++id) {
        if (s.orbit_base[id] != C(0.0, 0.0)) continue;
        if (!cfg.has_inversion(id)) throw ConfigError("orbit " + cfg.orbit_name(id) + " has no inversion rule");
        if (cfg.self_inverse_orbit(id)) {
            s.orbit_base[id] = -std::pow(s.q, -static_cast<double>(cfg.orbit_center(id)) / 2.0);
        } else {
            const double r = 0.5 + 1.5 * unit(rng);
            const C b = std::polar(r, 2 * pi * unit(rng));
            s.orbit_base[id] = b;
            s.orbit_base[cfg.inverse_orbit(id)] = 1.0 / b;
        }
    }
    const C a1 = res_to_complex(cfg.marker_residue(Marker::alpha1), s);
    const C a2 = res_to_complex(cfg.marker_residue(Marker::alpha2), s);
    s.q0 = std::sqrt(-a1 * a2);
    s.qn = a1 / s.q0;
    s.theta = res_to_complex(cfg.marker_residue(Marker::theta), s);
    return s;
}

}  // namespace oriftl
