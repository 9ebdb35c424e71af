#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace oriftl {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The six special points. The first five are also shape markers.
enum class Marker : std::uint8_t { alpha1, alpha2, alpha1_inv, alpha2_inv, theta, theta_inv };

const char* marker_name(Marker m);
std::optional<Marker> parse_marker(const std::string& s);
Marker marker_inverse(Marker m);
bool is_alpha_type(Marker m);

struct Residue {
    int orbit = 0;
    long exp = 0;

    friend bool operator==(const Residue&, const Residue&) = default;
    friend auto operator<=>(const Residue&, const Residue&) = default;
};

struct PointSpec {
    bool integral = true;
    long exponent = 0;  // integral: the point is q^exponent
    std::string orbit;  // formal: orbit label
    long offset = 0;    // formal: even offset from the orbit base
};

struct InversionSpec {
    bool self_inverse = false;
    std::string partner;
    long center = 0;
};

// e == 0 encodes e = infinity.
class ParamConfig {
public:
    static constexpr int kIntegralOrbit = 0;

    static ParamConfig make(long e, const std::array<PointSpec, 3>& points,
                            const std::map<std::string, InversionSpec>& inversions);
    static ParamConfig from_json(const nlohmann::json& j);
    static ParamConfig from_file(const std::string& path);
    nlohmann::json to_json() const;

    long e() const { return e_; }
    bool finite() const { return e_ != 0; }
    // symmetric representative in (-e, e] when e is finite
    long reduce(long x) const;
    bool congruent(long a, long b) const { return reduce(a - b) == 0; }

    int num_orbits() const { return static_cast<int>(orbit_names_.size()); }
    const std::string& orbit_name(int id) const { return orbit_names_.at(id); }
    std::optional<int> orbit_id(const std::string& name) const;
    bool orbit_integral(int id) const { return id == kIntegralOrbit; }
    bool has_inversion(int id) const { return inverse_.at(id) >= 0; }
    int inverse_orbit(int id) const { return inverse_.at(id); }
    bool self_inverse_orbit(int id) const { return self_.at(id); }
    long orbit_center(int id) const { return center_.at(id); }

    const PointSpec& point(int i) const { return points_.at(i); }
    const std::map<std::string, InversionSpec>& inversions() const { return inversions_; }
    Residue marker_residue(Marker m) const;

    std::string residue_str(const Residue& r) const;

private:
    int intern(const std::string& name);

    long e_ = 0;
    std::array<PointSpec, 3> points_{};
    std::map<std::string, InversionSpec> inversions_;
    std::vector<std::string> orbit_names_;
    std::vector<int> inverse_;
    std::vector<bool> self_;
    std::vector<long> center_;
    std::array<Residue, 6> markers_{};
    std::vector<std::string> build_notes_;

    friend std::vector<std::string> validate_config(const ParamConfig&, bool);
};

struct ResidueHash {
    std::size_t operator()(const Residue& r) const noexcept {
        return std::hash<long>()(r.exp * 1000003L + r.orbit);
    }
};

std::vector<std::string> validate_config(const ParamConfig& cfg, bool allow_self_inverse = false);

Residue res_shift(const Residue& r, long k, const ParamConfig& cfg);
Residue res_invert(const Residue& r, const ParamConfig& cfg);

std::optional<Marker> marker_label_at(const ParamConfig& cfg, const Residue& lattice_base, long x);
bool on_hyperplane(const ParamConfig& cfg, const Residue& lattice_base, long x);

// Complex values for q and for every orbit base (integral orbit base is 1).
struct NumericSeed {
    std::complex<double> q{1.0, 0.0};
    std::complex<double> q0{1.0, 0.0};
    std::complex<double> qn{1.0, 0.0};
    std::complex<double> theta{1.0, 0.0};
    std::vector<std::complex<double>> orbit_base;
    double tol = 1e-8;
};

// Throws ConfigError when q is not of order 2e or the bases break inversion rules.
void check_seed(const ParamConfig& cfg, const NumericSeed& seed);

std::complex<double> res_to_complex(const Residue& r, const NumericSeed& seed);

// Random seed respecting cfg; q0, qn are derived from alpha1 = q0 qn, alpha2 = -q0/qn.
NumericSeed make_seed(const ParamConfig& cfg, std::mt19937_64& rng);

}  // namespace oriftl
