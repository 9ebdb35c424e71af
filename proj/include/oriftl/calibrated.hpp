#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "oriftl/params.hpp"
#include "oriftl/tableaux.hpp"

namespace oriftl {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;

struct NonGenericSeed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CalibratedModule {
    int n = 0;
    Shape shape;
    std::vector<StandardTableau> basis;
    std::vector<std::vector<cplx>> gamma;  // gamma[t][i-1] = gamma^t_i
    cplx q, q0, qn;

    std::vector<CMat> T;  // T[0] = T_0, T[i] = T_i for 1 <= i < n, T[n] = T_n
    CMat T0v;
    std::vector<CMat> X;  // X[i-1] = X_i

    int dim() const { return static_cast<int>(basis.size()); }
    cplx q_index(int i) const { return i == 0 ? q0 : (i == n ? qn : q); }
    CMat e(int i) const;  // T_i - q_i
};

// <x> = x + 1/x
inline cplx qbracket(cplx x) { return x + 1.0 / x; }

cplx gamma_from_shape(const Shape& shape, int n, const ParamConfig& cfg, const NumericSeed& seed);
std::vector<cplx> gamma_of(const StandardTableau& t, const ParamConfig& cfg, const NumericSeed& seed);

CalibratedModule build_calibrated(const Shape& shape, int n, const ParamConfig& cfg, const NumericSeed& seed);

// residuals[name] = |lhs - rhs| / max(1, sum over monomials of the product of factor norms),
// maximised over instances; absolute[name] keeps |lhs - rhs| for reference.
struct RelationReport {
    std::map<std::string, double> residuals;
    std::map<std::string, double> absolute;
    double tol = 1e-8;

    double max_residual() const;
    bool pass() const { return max_residual() < tol; }
    void merge(const RelationReport& other);
    nlohmann::json to_json() const;
};

// induced infinity norm
double op_norm(const CMat& m);

RelationReport check_hecke_relations(const CalibratedModule& m, double tol);
RelationReport check_tl_relations(const CalibratedModule& m, double tol);
cplx blob_kappa(int n, const NumericSeed& seed);
std::pair<CMat, CMat> blob_idempotents(const CalibratedModule& m);  // (I_0, I_1)
RelationReport blob_check(const CalibratedModule& m, cplx kappa, double tol);
RelationReport blob_check(const CalibratedModule& m, const NumericSeed& seed, double tol);
// max |X_i[t,t] - res_to_complex(residue_seq(t)[i])| together with off-diagonal mass
double jm_spectrum_residual(const CalibratedModule& m, const ParamConfig& cfg, const NumericSeed& seed);

}  // namespace oriftl
