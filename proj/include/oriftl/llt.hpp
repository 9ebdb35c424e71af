#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oriftl/params.hpp"
#include "oriftl/poly.hpp"
#include "oriftl/tableaux.hpp"

namespace oriftl {

// Square matrix of Laurent polynomials indexed by shapes (row lambda, column mu).
struct GradedMatrix {
    std::vector<Shape> shapes;
    std::vector<LaurentPoly> entries;  // row-major
    bool conjectural = false;

    GradedMatrix() = default;
    explicit GradedMatrix(std::vector<Shape> s);

    std::size_t size() const { return shapes.size(); }
    LaurentPoly& at(std::size_t r, std::size_t c) { return entries[r * size() + c]; }
    const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries[r * size() + c]; }
    int index_of(const Shape& s) const;
    const LaurentPoly& entry(const Shape& row, const Shape& col) const;

    bool is_lower_unitriangular() const;
    GradedMatrix restrict_to(const std::vector<Shape>& subset) const;  // keeps this matrix's order
    GradedMatrix operator*(const GradedMatrix& o) const;
    friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
        return a.shapes == b.shapes && a.entries == b.entries;
    }

    nlohmann::json to_json() const;
    static GradedMatrix from_json(const nlohmann::json& j);
    std::string to_tsv() const;
};

GradedMatrix identity_matrix(const std::vector<Shape>& shapes);

// dim_v of the graded count sum_{s in CStd(lambda, mu)} v^deg(s)
LaurentPoly delta_entry(int n, const Shape& lambda, const Shape& mu, const ParamConfig& cfg);
GradedMatrix delta_matrix(int n, const ParamConfig& cfg, const std::optional<std::vector<Shape>>& restrict = {},
                          int jobs = 0);

std::vector<std::vector<Shape>> blocks(const GradedMatrix& delta);
std::vector<std::vector<Shape>> blocks(int n, const ParamConfig& cfg, int jobs = 0);
std::vector<Shape> block_of(const GradedMatrix& delta, const Shape& s);

// Delta = N A with N off-diagonal in vZ[v], A bar-symmetric; both unitriangular.
std::pair<GradedMatrix, GradedMatrix> na_factorize(const GradedMatrix& delta);
// same factorization computed block by block
std::pair<GradedMatrix, GradedMatrix> na_factorize_blocks(const GradedMatrix& delta, int jobs = 0);

GradedMatrix decomposition_matrix(int n, const ParamConfig& cfg, int jobs = 0);
std::vector<std::string> positivity_warnings(const GradedMatrix& n_matrix);

LaurentPoly graded_dim_delta(int n, const Shape& lambda, const ParamConfig& cfg);
std::vector<std::pair<Shape, LaurentPoly>> simple_graded_dims(int n, const ParamConfig& cfg, int jobs = 0);
std::vector<std::pair<Shape, LaurentPoly>> simple_graded_dims(const GradedMatrix& n_matrix,
                                                              const std::vector<LaurentPoly>& dim_delta);

// Standard tableaux of every shape grouped by residue sequence, in key order.
std::vector<std::vector<StandardTableau>> residue_partition(int n, const ParamConfig& cfg);
// ladder tableaux of a residue class
std::vector<StandardTableau> class_ladders(const std::vector<StandardTableau>& cls, const ParamConfig& cfg);
std::vector<std::pair<Shape, long>> simple_dim_lower_bounds(int n, const ParamConfig& cfg);

}  // namespace oriftl
