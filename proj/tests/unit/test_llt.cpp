#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oriftl/llt.hpp"
#include "support.hpp"

using namespace oriftl;
using test::load_config;

namespace {

Shape sh(const char* s) { return parse_shape(s); }
LaurentPoly v(int k) { return LaurentPoly::monomial(k); }

GradedMatrix from_rows(const std::vector<Shape>& shapes, const std::vector<std::vector<LaurentPoly>>& rows) {
    GradedMatrix m(shapes);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

GradedMatrix random_unitriangular(std::mt19937_64& rng, std::size_t m) {
    auto all = shapes(12);
    all.resize(m);
    GradedMatrix d = identity_matrix(all);
    std::uniform_int_distribution<int> terms(0, 3);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < r; ++c) d.at(r, c) = test::random_poly(rng, -4, 4, 3, terms(rng));
    return d;
}

void check_factorization(const GradedMatrix& delta, const GradedMatrix& N, const GradedMatrix& A) {
    CHECK(N * A == delta);
    CHECK(N.is_lower_unitriangular());
    CHECK(A.is_lower_unitriangular());
    for (std::size_t r = 0; r < N.size(); ++r)
        for (std::size_t c = 0; c < r; ++c) {
            CHECK(N.at(r, c).in_vZv());
            CHECK(A.at(r, c).is_bar_symmetric());
        }
}

}  // namespace

TEST_CASE("golden delta block, e = 5") {
    const auto cfg = load_config("ex65");
    const std::vector<Shape> order = {sh("(16,alpha1)"),     sh("(12,alpha2)"),     sh("(6,alpha1)"),
                                      sh("(2,alpha2)"),      sh("(16,alpha1_inv)"), sh("(10,alpha2_inv)"),
                                      sh("(6,alpha1_inv)"),  sh("(0,theta)")};
    const LaurentPoly o(0), i(1);
    const auto expect = from_rows(order, {{i, o, o, o, o, o, o, o},
                                          {v(1), i, o, o, o, o, o, o},
                                          {v(2), v(1), i, o, o, o, o, o},
                                          {v(3), v(2), v(1), i, o, o, o, o},
                                          {o, o, o, o, i, o, o, o},
                                          {o, o, o, o, v(1), i, o, o},
                                          {o, o, o, o, v(2), v(1), i, o},
                                          {v(4), v(3), v(2), v(1), v(3), v(2), v(1), i}});
    const auto delta = delta_matrix(16, cfg);
    auto block = block_of(delta, sh("(16,alpha1)"));
    CHECK(block.size() == 8);
    std::sort(block.begin(), block.end(), [&](const Shape& a, const Shape& b) {
        return std::find(order.begin(), order.end(), a) < std::find(order.begin(), order.end(), b);
    });
    CHECK(block == order);

    GradedMatrix sub(order);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) sub.at(r, c) = delta.entry(order[r], order[c]);
    CHECK(sub == expect);

    const auto [N, A] = na_factorize(delta.restrict_to(block_of(delta, order[0])));
    CHECK(N == delta.restrict_to(block_of(delta, order[0])));
    CHECK(A == identity_matrix(A.shapes));
}

TEST_CASE("golden decomposition block, e = infinity") {
    const auto cfg = load_config("ex66");
    const std::vector<Shape> order = {sh("(18,alpha2_inv)"), sh("(14,alpha1_inv)"), sh("(6,alpha1)"),
                                      sh("(2,alpha2)")};
    const auto delta = delta_matrix(18, cfg);
    const auto blk = block_of(delta, order[0]);
    for (const auto& s : order) CHECK(std::find(blk.begin(), blk.end(), s) != blk.end());
    CHECK(delta.entry(sh("(6,alpha1)"), sh("(14,alpha1_inv)")) == LaurentPoly(1));
    CHECK(delta.entry(sh("(2,alpha2)"), sh("(14,alpha1_inv)")) == LaurentPoly::monomial(1, 2));

    const auto [N, A] = na_factorize_blocks(delta);
    const LaurentPoly o(0), i(1);
    const auto expect = from_rows(order, {{i, o, o, o}, {v(1), i, o, o}, {v(1), o, i, o}, {v(2), v(1), v(1), i}});
    GradedMatrix got(order);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) got.at(r, c) = N.entry(order[r], order[c]);
    CHECK(got == expect);
    CHECK(A.entry(sh("(6,alpha1)"), sh("(14,alpha1_inv)")) == LaurentPoly(1));
    check_factorization(delta, N, A);

    const auto dm = decomposition_matrix(18, cfg);
    CHECK(dm.conjectural);
    CHECK(dm == N);
}

TEST_CASE("factorization of random matrices") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    for (int it = 0; it < 200; ++it) {
        const auto delta = random_unitriangular(rng, size(rng));
        const auto [N, A] = na_factorize(delta);
        check_factorization(delta, N, A);
    }
    CHECK_THROWS(na_factorize(from_rows(shapes(1), {{LaurentPoly(1), v(1)}, {LaurentPoly(0), LaurentPoly(1)}})));
}

TEST_CASE("factorization examples") {
    const auto s = shapes(2);
    const LaurentPoly o(0), i(1);
    // strictly positive degrees: N = delta
    const auto d1 = from_rows({s[0], s[1], s[2]}, {{i, o, o}, {v(1), i, o}, {v(2) + v(3), v(1), i}});
    const auto [n1, a1] = na_factorize(d1);
    CHECK(n1 == d1);
    CHECK(a1 == identity_matrix(d1.shapes));
    // a degree 0 entry moves to A
    const auto d2 = from_rows({s[0], s[1]}, {{i, o}, {i, i}});
    const auto [n2, a2] = na_factorize(d2);
    CHECK(n2 == identity_matrix(d2.shapes));
    CHECK(a2 == d2);
}

TEST_CASE("blockwise and tie-break independent factorization") {
    for (const char* name : {"ex65", "ex66", "e7", "fig14"}) {
        const auto cfg = load_config(name);
        for (int n = 1; n <= 8; ++n) {
            const auto delta = delta_matrix(n, cfg);
            const auto full = na_factorize(delta);
            const auto blk = na_factorize_blocks(delta, 2);
            CHECK(full.first == blk.first);
            CHECK(full.second == blk.second);

            // reverse the order within each width
            auto perm = delta.shapes;
            for (auto it = perm.begin(); it != perm.end();) {
                auto end = std::find_if(it, perm.end(), [&](const Shape& s) { return s.k != it->k; });
                std::reverse(it, end);
                it = end;
            }
            GradedMatrix pd(perm);
            for (std::size_t r = 0; r < perm.size(); ++r)
                for (std::size_t c = 0; c < perm.size(); ++c) pd.at(r, c) = delta.entry(perm[r], perm[c]);
            const auto [pn, pa] = na_factorize(pd);
            for (const auto& a : perm)
                for (const auto& b : perm) {
                    CHECK(pn.entry(a, b) == full.first.entry(a, b));
                    CHECK(pa.entry(a, b) == full.second.entry(a, b));
                }

            // columns count coloured tableaux across all shapes
            for (std::size_t c = 0; c < delta.size(); ++c) {
                BigInt sum = 0;
                for (std::size_t r = 0; r < delta.size(); ++r) sum += lp_eval_one(delta.at(r, c));
                const auto cls = residue_class(n, residue_seq(t_lambda(n, delta.shapes[c]), cfg), cfg);
                CHECK(sum == cls.size());
                CHECK(delta.at(c, c) == LaurentPoly(1));
            }
            for (const auto& b : blocks(delta)) CHECK(!b.empty());
        }
    }
}

TEST_CASE("generic parameters are semisimple") {
    const auto cfg = load_config("generic");
    for (int n = 1; n <= 8; ++n) {
        const auto bs = blocks(n, cfg);
        CHECK(bs.size() == shapes(n).size());
        for (const auto& b : bs) CHECK(b.size() == 1);
        for (const auto& [s, bound] : simple_dim_lower_bounds(n, cfg)) CHECK(bound == static_cast<long>(count_std(n, s)));
        for (const auto& cls : residue_partition(n, cfg)) CHECK(cls.size() == 1);
    }
}

TEST_CASE("simple dimensions and bounds") {
    for (const char* name : {"ex65", "ex66", "e7", "fig14"}) {
        const auto cfg = load_config(name);
        for (int n = 1; n <= 8; ++n) {
            const auto N = decomposition_matrix(n, cfg);
            const auto dims = simple_graded_dims(n, cfg);
            const auto bounds = simple_dim_lower_bounds(n, cfg);
            REQUIRE(dims.size() == N.size());
            for (std::size_t r = 0; r < N.size(); ++r) {
                BigInt total = 0;
                for (std::size_t c = 0; c < N.size(); ++c) total += lp_eval_one(N.at(r, c) * dims[c].second);
                CHECK(total == count_std(n, N.shapes[r]));
                CHECK(bounds[r].first == dims[r].first);
                CHECK(bounds[r].second >= 1);
                CHECK(BigInt(bounds[r].second) <= lp_eval_one(dims[r].second));
            }
            // a maximal shape with no lower neighbours keeps the cell module dimension
            const auto delta = delta_matrix(n, cfg);
            for (const auto& b : blocks(delta))
                if (b.size() == 1) {
                    const int i = delta.index_of(b[0]);
                    CHECK(dims[i].second == graded_dim_delta(n, b[0], cfg));
                }
            std::size_t total = 0;
            for (const auto& cls : residue_partition(n, cfg)) {
                total += cls.size();
                for (const auto& t : cls)
                    if (t == t_lambda(n, t.shape)) CHECK(!class_ladders(cls, cfg).empty());
            }
            std::size_t expect = 0;
            for (const auto& s : shapes(n)) expect += count_std(n, s);
            CHECK(total == expect);
        }
    }
}

TEST_CASE("graded dimensions evaluate to counts") {
    const auto cfg = load_config("ex65");
    for (int n = 1; n <= 10; ++n)
        for (const auto& s : shapes(n)) CHECK(lp_eval_one(graded_dim_delta(n, s, cfg)) == count_std(n, s));
    CHECK(lp_eval_one(graded_dim_delta(9, Shape{0, Marker::theta}, cfg)) == 512);
}

TEST_CASE("positivity warnings") {
    const auto s = shapes(2);
    auto m = identity_matrix({s[0], s[1]});
    CHECK(positivity_warnings(m).empty());
    m.at(1, 0) = LaurentPoly::monomial(1, -1);
    const auto w = positivity_warnings(m);
    REQUIRE(w.size() == 1);
    CHECK(w[0].rfind("WARNING", 0) == 0);
}

TEST_CASE("serialization") {
    const auto cfg = load_config("ex66");
    auto N = decomposition_matrix(6, cfg);
    const auto j = N.to_json();
    CHECK(j.at("conjectural") == true);
    const auto back = GradedMatrix::from_json(j);
    CHECK(back == N);
    CHECK(back.conjectural);
    CHECK(N.to_tsv().rfind("# CONJECTURAL\n", 0) == 0);
    CHECK(delta_matrix(6, cfg).to_tsv().rfind("shape\t", 0) == 0);
    CHECK_THROWS(GradedMatrix::from_json(nlohmann::json::parse(R"j({"shapes":["(1,alpha1)"],"entries":[]})j")));
}

TEST_CASE("parallel and serial agree") {
    const auto cfg = load_config("e7");
    CHECK(delta_matrix(9, cfg, std::nullopt, 1) == delta_matrix(9, cfg, std::nullopt, 4));
    const std::vector<Shape> sub = {sh("(9,alpha1)"), sh("(1,alpha1)")};
    CHECK(delta_matrix(9, cfg, sub).shapes == sub);
    CHECK_THROWS(delta_matrix(9, cfg, std::vector<Shape>{sh("(2,alpha1)")}));
}
