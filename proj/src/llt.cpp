#include "oriftl/llt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "oriftl/parallel.hpp"
#include "oriftl/paths.hpp"

namespace oriftl {

GradedMatrix::GradedMatrix(std::vector<Shape> s) : shapes(std::move(s)), entries(shapes.size() * shapes.size()) {}

int GradedMatrix::index_of(const Shape& s) const {
    for (std::size_t i = 0; i < shapes.size(); ++i)
        if (shapes[i] == s) return static_cast<int>(i);
    return -1;
}

const LaurentPoly& GradedMatrix::entry(const Shape& row, const Shape& col) const {
    const int r = index_of(row), c = index_of(col);
    if (r < 0 || c < 0) throw std::out_of_range("shape not in matrix");
    return at(r, c);
}

bool GradedMatrix::is_lower_unitriangular() const {
    for (std::size_t r = 0; r < size(); ++r)
        for (std::size_t c = r; c < size(); ++c)
            if (at(r, c) != LaurentPoly(r == c ? 1 : 0)) return false;
    return true;
}

GradedMatrix GradedMatrix::restrict_to(const std::vector<Shape>& subset) const {
    std::vector<int> idx;
    for (std::size_t i = 0; i < shapes.size(); ++i)
        if (std::find(subset.begin(), subset.end(), shapes[i]) != subset.end()) idx.push_back(static_cast<int>(i));
    if (idx.size() != subset.size()) throw std::invalid_argument("restrict_to: shape not in matrix");
    std::vector<Shape> s;
    for (int i : idx) s.push_back(shapes[i]);
    GradedMatrix out(s);
    out.conjectural = conjectural;
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) out.at(r, c) = at(idx[r], idx[c]);
    return out;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& o) const {
    if (shapes != o.shapes) throw std::invalid_argument("matrix product over different shape lists");
    GradedMatrix out(shapes);
    const std::size_t m = size();
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k < m; ++k) {
            if (at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < m; ++c)
                if (!o.at(k, c).is_zero()) out.at(r, c) += at(r, k) * o.at(k, c);
        }
    return out;
}

nlohmann::json GradedMatrix::to_json() const {
    nlohmann::json j;
    j["shapes"] = nlohmann::json::array();
    for (const auto& s : shapes) j["shapes"].push_back(shape_str(s));
    j["entries"] = nlohmann::json::array();
    for (std::size_t r = 0; r < size(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < size(); ++c) row.push_back(oriftl::to_json(at(r, c)));
        j["entries"].push_back(row);
    }
    j["conjectural"] = conjectural;
    return j;
}

GradedMatrix GradedMatrix::from_json(const nlohmann::json& j) {
    std::vector<Shape> s;
    for (const auto& x : j.at("shapes")) s.push_back(parse_shape(x.get<std::string>()));
    GradedMatrix out(s);
    const auto& rows = j.at("entries");
    if (rows.size() != s.size()) throw std::invalid_argument("entries has wrong row count");
    for (std::size_t r = 0; r < s.size(); ++r) {
        if (rows[r].size() != s.size()) throw std::invalid_argument("entries has wrong column count");
        for (std::size_t c = 0; c < s.size(); ++c) out.at(r, c) = poly_from_json(rows[r][c]);
    }
    out.conjectural = j.value("conjectural", false);
    return out;
}

std::string GradedMatrix::to_tsv() const {
    std::ostringstream os;
    os << (conjectural ? "# CONJECTURAL\n" : "") << "shape";
    for (const auto& s : shapes) os << "\t" << shape_str(s);
    os << "\n";
    for (std::size_t r = 0; r < size(); ++r) {
        os << shape_str(shapes[r]);
        for (std::size_t c = 0; c < size(); ++c) os << "\t" << at(r, c).str();
        os << "\n";
    }
    return os.str();
}

GradedMatrix identity_matrix(const std::vector<Shape>& shapes) {
    GradedMatrix out(shapes);
    for (std::size_t i = 0; i < shapes.size(); ++i) out.at(i, i) = LaurentPoly(1);
    return out;
}

LaurentPoly delta_entry(int n, const Shape& lambda, const Shape& mu, const ParamConfig& cfg) {
    LaurentPoly out;
    for (const auto& s : cstd(n, lambda, mu, cfg)) out.add_term(degree_tiles(s, cfg), 1);
    return out;
}

GradedMatrix delta_matrix(int n, const ParamConfig& cfg, const std::optional<std::vector<Shape>>& restrict,
                          int jobs) {
    std::vector<Shape> all = shapes(n);
    if (restrict) {
        std::vector<Shape> keep;
        for (const auto& s : all)
            if (std::find(restrict->begin(), restrict->end(), s) != restrict->end()) keep.push_back(s);
        if (keep.size() != restrict->size()) throw std::invalid_argument("restricted shape not in Lambda_n");
        all = keep;
    }
    GradedMatrix out(all);
    const std::size_t m = all.size();
    parallel_for(m, jobs, [&](std::size_t c) {
        for (std::size_t r = 0; r < m; ++r) out.at(r, c) = delta_entry(n, all[r], all[c], cfg);
    });
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (r != c && all[r].k == all[c].k && !out.at(r, c).is_zero())
                throw std::logic_error("nonzero Delta entry between shapes of equal width: " + shape_str(all[r]) +
                                       ", " + shape_str(all[c]));
    return out;
}

std::vector<std::vector<Shape>> blocks(const GradedMatrix& delta) {
    const std::size_t m = delta.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
            if (!delta.at(r, c).is_zero()) {
                const auto a = find(r), b = find(c);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    std::map<std::size_t, std::vector<Shape>> groups;
    for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(delta.shapes[i]);
    std::vector<std::vector<Shape>> out;
    for (auto& [root, g] : groups) out.push_back(std::move(g));
    return out;
}

std::vector<std::vector<Shape>> blocks(int n, const ParamConfig& cfg, int jobs) {
    return blocks(delta_matrix(n, cfg, std::nullopt, jobs));
}

std::vector<Shape> block_of(const GradedMatrix& delta, const Shape& s) {
    for (const auto& b : blocks(delta))
        if (std::find(b.begin(), b.end(), s) != b.end()) return b;
    throw std::invalid_argument("shape " + shape_str(s) + " not in matrix");
}

std::pair<GradedMatrix, GradedMatrix> na_factorize(const GradedMatrix& delta) {
    if (!delta.is_lower_unitriangular()) throw std::invalid_argument("na_factorize: matrix is not lower unitriangular");
    const std::size_t m = delta.size();
    GradedMatrix N = identity_matrix(delta.shapes);
    GradedMatrix A = identity_matrix(delta.shapes);
    for (std::size_t c = m; c-- > 0;) {
        for (std::size_t r = c + 1; r < m; ++r) {
            LaurentPoly rhs = delta.at(r, c);
            for (std::size_t j = c + 1; j < r; ++j)
                if (!N.at(r, j).is_zero() && !A.at(j, c).is_zero()) rhs -= N.at(r, j) * A.at(j, c);
            auto [a, nn] = bar_split(rhs);
            A.at(r, c) = std::move(a);
            N.at(r, c) = std::move(nn);
        }
    }
    return {N, A};
}

std::pair<GradedMatrix, GradedMatrix> na_factorize_blocks(const GradedMatrix& delta, int jobs) {
    const auto bs = blocks(delta);
    GradedMatrix N = identity_matrix(delta.shapes);
    GradedMatrix A = identity_matrix(delta.shapes);
    std::vector<std::pair<GradedMatrix, GradedMatrix>> parts(bs.size());
    parallel_for(bs.size(), jobs, [&](std::size_t b) { parts[b] = na_factorize(delta.restrict_to(bs[b])); });
    for (std::size_t b = 0; b < bs.size(); ++b) {
        const auto& [nb, ab] = parts[b];
        for (std::size_t r = 0; r < nb.size(); ++r)
            for (std::size_t c = 0; c < nb.size(); ++c) {
                const int gr = delta.index_of(nb.shapes[r]), gc = delta.index_of(nb.shapes[c]);
                N.at(gr, gc) = nb.at(r, c);
                A.at(gr, gc) = ab.at(r, c);
            }
    }
    return {N, A};
}

GradedMatrix decomposition_matrix(int n, const ParamConfig& cfg, int jobs) {
    auto N = na_factorize_blocks(delta_matrix(n, cfg, std::nullopt, jobs), jobs).first;
    N.conjectural = true;
    return N;
}

std::vector<std::string> positivity_warnings(const GradedMatrix& n_matrix) {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < n_matrix.size(); ++r)
        for (std::size_t c = 0; c < n_matrix.size(); ++c)
            if (n_matrix.at(r, c).has_negative_coeff())
                out.push_back("WARNING: negative coefficient in N at (" + shape_str(n_matrix.shapes[r]) + ", " +
                              shape_str(n_matrix.shapes[c]) + "): " + n_matrix.at(r, c).str());
    return out;
}

LaurentPoly graded_dim_delta(int n, const Shape& lambda, const ParamConfig& cfg) {
    LaurentPoly out;
    for (const auto& s : enumerate_std(n, lambda)) out.add_term(degree_tiles(s, cfg), 1);
    return out;
}

std::vector<std::pair<Shape, LaurentPoly>> simple_graded_dims(const GradedMatrix& n_matrix,
                                                              const std::vector<LaurentPoly>& dim_delta) {
    const std::size_t m = n_matrix.size();
    std::vector<LaurentPoly> dimL(m);
    for (std::size_t r = 0; r < m; ++r) {
        LaurentPoly x = dim_delta.at(r);
        for (std::size_t c = 0; c < r; ++c)
            if (!n_matrix.at(r, c).is_zero()) x -= n_matrix.at(r, c) * dimL[c];
        dimL[r] = x;
    }
    std::vector<std::pair<Shape, LaurentPoly>> out;
    for (std::size_t i = 0; i < m; ++i) out.emplace_back(n_matrix.shapes[i], dimL[i]);
    return out;
}

std::vector<std::pair<Shape, LaurentPoly>> simple_graded_dims(int n, const ParamConfig& cfg, int jobs) {
    const GradedMatrix N = decomposition_matrix(n, cfg, jobs);
    std::vector<LaurentPoly> dd(N.size());
    parallel_for(N.size(), jobs, [&](std::size_t i) { dd[i] = graded_dim_delta(n, N.shapes[i], cfg); });
    return simple_graded_dims(N, dd);
}

std::vector<std::vector<StandardTableau>> residue_partition(int n, const ParamConfig& cfg) {
    std::map<std::vector<Residue>, std::vector<StandardTableau>> groups;
    for (const auto& s : shapes(n))
        for (const auto& t : enumerate_std(n, s)) groups[residue_seq(t, cfg)].push_back(t);
    std::vector<std::vector<StandardTableau>> out;
    out.reserve(groups.size());
    for (auto& [k, g] : groups) out.push_back(std::move(g));
    return out;
}

std::vector<StandardTableau> class_ladders(const std::vector<StandardTableau>& cls, const ParamConfig& cfg) {
    std::vector<StandardTableau> out;
    for (const auto& t : cls)
        if (is_ladder(t, cls, cfg)) out.push_back(t);
    return out;
}

std::vector<std::pair<Shape, long>> simple_dim_lower_bounds(int n, const ParamConfig& cfg) {
    const auto all = shapes(n);
    std::vector<long> bound(all.size(), 0);
    for (const auto& cls : residue_partition(n, cfg)) {
        std::vector<bool> ladder_shape(all.size(), false);
        for (const auto& t : class_ladders(cls, cfg)) ladder_shape[shape_index(n, t.shape)] = true;
        for (const auto& s : cls) {
            const int i = shape_index(n, s.shape);
            if (ladder_shape[i]) ++bound[i];
        }
    }
    std::vector<std::pair<Shape, long>> out;
    for (std::size_t i = 0; i < all.size(); ++i) out.emplace_back(all[i], bound[i]);
    return out;
}

}  // namespace oriftl
