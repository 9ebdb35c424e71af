#include "oriftl/calibrated.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace oriftl {

namespace {

constexpr double kSingular = 1e-10;

cplx checked_div(cplx num, cplx den, const StandardTableau& t, const std::string& what) {
    if (std::abs(den) < kSingular)
        throw NonGenericSeed("non-generic seed: vanishing denominator in " + what + " at " + tableau_str(t));
    return num / den;
}

CMat identity(int d) { return CMat::Identity(d, d); }

}  // namespace

CMat CalibratedModule::e(int i) const {
    const CMat& g = (i == n && n > 0) ? T[n] : T.at(i);
    return g - q_index(i) * identity(dim());
}

cplx gamma_from_shape(const Shape& shape, int n, const ParamConfig& cfg, const NumericSeed& seed) {
    if (shape.is_theta()) return seed.theta * std::pow(seed.q, -(n % 2 == 0 ? n : n - 1));
    const cplx beta = res_to_complex(cfg.marker_residue(shape.marker), seed);
    return beta * std::pow(seed.q, -2 * (bead_position(n, shape) - 1));
}

std::vector<cplx> gamma_of(const StandardTableau& t, const ParamConfig& cfg, const NumericSeed& seed) {
    const cplx g1 = gamma_from_shape(t.shape, t.n, cfg, seed);
    const cplx q2 = seed.q * seed.q;
    std::vector<cplx> out(t.n);
    const auto es = t.entries();
    cplx c = g1;
    for (int j = 0; j < t.n; ++j) {
        const int a = es[j];
        out[std::abs(a) - 1] = a > 0 ? c : 1.0 / c;
        c *= q2;
    }
    return out;
}

CalibratedModule build_calibrated(const Shape& shape, int n, const ParamConfig& cfg, const NumericSeed& seed) {
    CalibratedModule m;
    m.n = n;
    m.shape = shape;
    m.q = seed.q;
    m.q0 = seed.q0;
    m.qn = seed.qn;
    m.basis = enumerate_std(n, shape);
    const int d = m.dim();
    std::unordered_map<std::uint64_t, int> index;
    for (int k = 0; k < d; ++k) {
        index[m.basis[k].neg] = k;
        m.gamma.push_back(gamma_of(m.basis[k], cfg, seed));
    }
    auto partner = [&](int g, int k) -> int {
        const Filling f = weyl_act(g, to_filling(m.basis[k]));
        if (!is_standard(n, f)) return -1;
        return index.at(to_tableau(n, f).neg);
    };

    const cplx q = seed.q;
    const cplx Q0 = seed.q0 - 1.0 / seed.q0;
    const cplx Qn = seed.qn - 1.0 / seed.qn;

    m.T.assign(n + 1, CMat::Zero(d, d));
    m.T0v = CMat::Zero(d, d);

    // T_0 and T_0v
    {
        std::vector<cplx> a(d), b(d);
        for (int k = 0; k < d; ++k) {
            const cplx g = m.gamma[k][0];
            const cplx den = 1.0 - 1.0 / (g * g);
            a[k] = checked_div(Q0 + Qn / g, den, m.basis[k], "T_0");
            b[k] = checked_div(Qn + Q0 / g, den, m.basis[k], "T_0v");
            m.T[0](k, k) = a[k];
            m.T0v(k, k) = b[k];
        }
        for (int k = 0; k < d; ++k) {
            const int s = partner(0, k);
            if (s <= k) continue;
            const cplx r = std::sqrt(a[k] * a[s] + 1.0);
            m.T[0](s, k) = r;
            m.T[0](k, s) = r;
            m.T0v(s, k) = m.gamma[s][0] * r;
            m.T0v(k, s) = m.gamma[k][0] * r;
        }
    }
    // T_i, 1 <= i < n
    for (int i = 1; i < n; ++i) {
        std::vector<cplx> a(d);
        for (int k = 0; k < d; ++k) {
            const cplx x = m.gamma[k][i - 1] / m.gamma[k][i];
            a[k] = checked_div(q - 1.0 / q, 1.0 - x, m.basis[k], "T_" + std::to_string(i));
            m.T[i](k, k) = a[k];
        }
        for (int k = 0; k < d; ++k) {
            const int s = partner(i, k);
            if (s <= k) continue;
            const cplx r = std::sqrt(a[k] * a[s] + 1.0);
            m.T[i](s, k) = r;
            m.T[i](k, s) = r;
        }
    }
    // T_n = (T_{n-1}...T_1) T_0v (T_1^{-1}...T_{n-1}^{-1})
    {
        CMat left = identity(d), right = identity(d);
        const CMat shift = (1.0 / q - q) * identity(d);
        for (int i = n - 1; i >= 1; --i) left = left * m.T[i];
        for (int i = 1; i <= n - 1; ++i) right = right * (m.T[i] + shift);
        m.T[n] = left * m.T0v * right;
    }
    m.X.assign(n, CMat());
    m.X[0] = m.T0v * m.T[0];
    for (int i = 1; i < n; ++i) m.X[i] = m.T[i] * m.X[i - 1] * m.T[i];
    return m;
}

double op_norm(const CMat& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

double RelationReport::max_residual() const {
    double r = 0.0;
    for (const auto& [k, v] : residuals) r = std::max(r, v);
    return r;
}

void RelationReport::merge(const RelationReport& other) {
    for (const auto& [k, v] : other.residuals) {
        auto [it, fresh] = residuals.emplace(k, v);
        if (!fresh) it->second = std::max(it->second, v);
    }
    for (const auto& [k, v] : other.absolute) {
        auto [it, fresh] = absolute.emplace(k, v);
        if (!fresh) it->second = std::max(it->second, v);
    }
    tol = std::min(tol, other.tol);
}

nlohmann::json RelationReport::to_json() const {
    nlohmann::json j;
    j["residuals"] = nlohmann::json::object();
    for (const auto& [k, v] : residuals) j["residuals"][k] = v;
    j["absolute"] = nlohmann::json::object();
    for (const auto& [k, v] : absolute) j["absolute"][k] = v;
    j["max_residual"] = max_residual();
    j["tol"] = tol;
    j["pass"] = pass();
    return j;
}

namespace {

// A relation is a list of monomials (signed scalar times a product of factors) that should sum to zero.
struct Monomial {
    cplx coeff;
    std::vector<const CMat*> factors;
};

void record(RelationReport& r, const std::string& name, const std::vector<Monomial>& terms) {
    const int d = static_cast<int>(terms.front().factors.front()->rows());
    CMat sum = CMat::Zero(d, d);
    double scale = 0.0;
    for (const auto& t : terms) {
        CMat prod = identity(d);
        double s = std::abs(t.coeff);
        for (const CMat* f : t.factors) {
            prod = prod * *f;
            s *= op_norm(*f);
        }
        sum += t.coeff * prod;
        scale += s;
    }
    const double abs_res = op_norm(sum);
    const double rel = abs_res / std::max(1.0, scale);
    auto put = [](std::map<std::string, double>& m, const std::string& k, double v) {
        auto [it, fresh] = m.emplace(k, v);
        if (!fresh) it->second = std::max(it->second, v);
    };
    put(r.residuals, name, rel);
    put(r.absolute, name, abs_res);
}

}  // namespace

RelationReport check_hecke_relations(const CalibratedModule& m, double tol) {
    RelationReport r;
    r.tol = tol;
    const int n = m.n;
    const int d = m.dim();
    const CMat id = identity(d);
    auto quadratic = [&](const CMat& g, cplx qi) {
        // (g - q)(g + 1/q) = g^2 + (1/q - q) g - 1
        record(r, "quadratic", {{1.0, {&g, &g}}, {1.0 / qi - qi, {&g}}, {-1.0, {&id}}});
    };
    for (int i = 0; i <= n; ++i) quadratic(m.T[i], m.q_index(i));
    quadratic(m.T0v, m.qn);
    r.residuals.emplace("commuting", 0.0);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 2; j <= n; ++j) record(r, "commuting", {{1.0, {&m.T[i], &m.T[j]}}, {-1.0, {&m.T[j], &m.T[i]}}});
    r.residuals.emplace("braid3", 0.0);
    for (int i = 1; i + 1 <= n - 1; ++i) {
        const CMat* a = &m.T[i];
        const CMat* b = &m.T[i + 1];
        record(r, "braid3", {{1.0, {a, b, a}}, {-1.0, {b, a, b}}});
    }
    if (n >= 2) {
        const CMat* t0 = &m.T[0];
        const CMat* t1 = &m.T[1];
        record(r, "braid4_left", {{1.0, {t0, t1, t0, t1}}, {-1.0, {t1, t0, t1, t0}}});
        const CMat* tn = &m.T[n];
        const CMat* tm = &m.T[n - 1];
        record(r, "braid4_right", {{1.0, {tn, tm, tn, tm}}, {-1.0, {tm, tn, tm, tn}}});
    }
    r.residuals.emplace("jm_commuting", 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            record(r, "jm_commuting", {{1.0, {&m.X[i], &m.X[j]}}, {-1.0, {&m.X[j], &m.X[i]}}});
    return r;
}

RelationReport check_tl_relations(const CalibratedModule& m, double tol) {
    RelationReport r;
    r.tol = tol;
    const int n = m.n;
    std::vector<CMat> e(n + 1);
    for (int i = 0; i <= n; ++i) e[i] = m.e(i);
    for (int i = 0; i <= n; ++i) record(r, "e_sq", {{1.0, {&e[i], &e[i]}}, {qbracket(m.q_index(i)), {&e[i]}}});
    if (n >= 2) {
        record(r, "smash_left", {{1.0, {&e[1], &e[0], &e[1]}}, {-qbracket(m.q0 / m.q), {&e[1]}}});
        record(r, "smash_right", {{1.0, {&e[n - 1], &e[n], &e[n - 1]}}, {-qbracket(m.qn / m.q), {&e[n - 1]}}});
    }
    r.residuals.emplace("smash_inner", 0.0);
    for (int i = 1; i <= n - 1; ++i) {
        if (i + 1 <= n - 1) record(r, "smash_inner", {{1.0, {&e[i], &e[i + 1], &e[i]}}, {-1.0, {&e[i]}}});
        if (i - 1 >= 1) record(r, "smash_inner", {{1.0, {&e[i], &e[i - 1], &e[i]}}, {-1.0, {&e[i]}}});
    }
    return r;
}

cplx blob_kappa(int n, const NumericSeed& seed) {
    const cplx a1 = seed.q0 * seed.qn;
    if (n % 2 == 0) return qbracket(seed.theta / seed.q) - qbracket(a1 / seed.q);
    return qbracket(seed.theta) - qbracket(a1);
}

std::pair<CMat, CMat> blob_idempotents(const CalibratedModule& m) {
    const int d = m.dim();
    CMat i0 = identity(d), i1 = identity(d);
    for (int i = 0; i <= m.n; i += 2) i0 = i0 * m.e(i);
    for (int i = 1; i <= m.n; i += 2) i1 = i1 * m.e(i);
    return {i0, i1};
}

RelationReport blob_check(const CalibratedModule& m, cplx kappa, double tol) {
    RelationReport r;
    r.tol = tol;
    const auto [i0, i1] = blob_idempotents(m);
    if (m.shape.is_theta()) {
        record(r, "blob_I0I1I0", {{1.0, {&i0, &i1, &i0}}, {-kappa, {&i0}}});
        record(r, "blob_I1I0I1", {{1.0, {&i1, &i0, &i1}}, {-kappa, {&i1}}});
    } else {
        // scale of I_j is the product of its factor norms
        std::vector<CMat> e(m.n + 1);
        for (int i = 0; i <= m.n; ++i) e[i] = m.e(i);
        Monomial a{1.0, {}}, b{1.0, {}};
        for (int i = 0; i <= m.n; i += 2) a.factors.push_back(&e[i]);
        for (int i = 1; i <= m.n; i += 2) b.factors.push_back(&e[i]);
        record(r, "blob_I0_annihilates", {a});
        record(r, "blob_I1_annihilates", {b});
    }
    return r;
}

RelationReport blob_check(const CalibratedModule& m, const NumericSeed& seed, double tol) {
    return blob_check(m, blob_kappa(m.n, seed), tol);
}

double jm_spectrum_residual(const CalibratedModule& m, const ParamConfig& cfg, const NumericSeed& seed) {
    double worst = 0.0;
    for (int k = 0; k < m.dim(); ++k) {
        const auto res = residue_seq(m.basis[k], cfg);
        for (int i = 0; i < m.n; ++i) {
            worst = std::max(worst, std::abs(m.X[i](k, k) - res_to_complex(res[i], seed)));
            CMat off = m.X[i];
            off.diagonal().setZero();
            worst = std::max(worst, op_norm(off));
        }
    }
    return worst;
}

}  // namespace oriftl
