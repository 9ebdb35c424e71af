#include "oriftl/paths.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace oriftl {

namespace {

std::uint64_t full_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

long PathEmbedding::x(int i) const {
    long v = start_x;
    for (int s = 1; s <= i; ++s) v += step_se(s) ? 1 : -1;
    return v;
}

std::vector<long> PathEmbedding::xs() const {
    std::vector<long> out(n + 1);
    out[0] = start_x;
    for (int s = 1; s <= n; ++s) out[s] = out[s - 1] + (step_se(s) ? 1 : -1);
    return out;
}

PathEmbedding embed(const StandardTableau& t, const ParamConfig& cfg) {
    const Residue beta = cfg.marker_residue(t.shape.marker);
    const long m = (bead_position(t.n, t.shape) - 1) - t.negatives();
    return PathEmbedding{beta, beta.exp - 1 - 2 * m, t.n, ~t.neg & full_mask(t.n)};
}

Residue step_residue(const PathEmbedding& p, int i, const ParamConfig& cfg) {
    const long x = p.x(i - 1);
    const int o = p.lattice_base.orbit;
    if (p.step_se(i)) return {o, cfg.reduce(x + i)};
    return res_invert(Residue{o, cfg.reduce(x - i)}, cfg);
}

std::vector<Residue> path_residues(const PathEmbedding& p, const ParamConfig& cfg) {
    std::vector<Residue> out(p.n);
    const auto xs = p.xs();
    const int o = p.lattice_base.orbit;
    for (int i = 1; i <= p.n; ++i)
        out[i - 1] = p.step_se(i) ? Residue{o, cfg.reduce(xs[i - 1] + i)}
                                  : res_invert(Residue{o, cfg.reduce(xs[i - 1] - i)}, cfg);
    return out;
}

namespace {

struct Peel {
    std::vector<Tile> tiles;
    std::vector<int> word;
};

Peel peel(const StandardTableau& t, const ParamConfig& cfg) {
    const int n = t.n;
    std::vector<long> cur = embed(t, cfg).xs();
    const std::vector<long> target = embed(t_lambda(n, t.shape), cfg).xs();
    Peel out;
    auto removable = [&](int i, int dir) {
        // dir = +1: vertex i sticks out to the right of T_lambda
        if (dir * (cur[i] - target[i]) <= 0) return false;
        if (i == 0) return cur[1] == cur[0] - dir;
        return cur[i - 1] == cur[i] - dir && cur[i + 1] == cur[i] - dir;
    };
    for (int dir : {+1, -1}) {
        while (true) {
            int pick = -1;
            for (int i = 0; i < n; ++i) {
                if (!removable(i, dir)) continue;
                if (pick < 0 || (dir > 0 ? i < pick : i > pick)) pick = i;
            }
            if (pick < 0) break;
            const long cx = cur[pick] - dir;
            out.tiles.push_back(Tile{cx, pick, dir > 0 ? Side::R : Side::L});
            out.word.push_back(pick);
            cur[pick] -= 2 * dir;
        }
    }
    if (cur != target) throw std::logic_error("peel did not reach T_lambda for " + tableau_str(t));
    return out;
}

}  // namespace

std::vector<Tile> tiling(const StandardTableau& t, const ParamConfig& cfg) { return peel(t, cfg).tiles; }

std::vector<int> reduced_word(const StandardTableau& t, const ParamConfig& cfg) { return peel(t, cfg).word; }

Filling apply_word(const std::vector<int>& word, const Filling& f) {
    Filling cur = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = weyl_act(*it, cur);
    return cur;
}

int tile_degree(const Tile& tile, const Residue& lattice_base, const ParamConfig& cfg) {
    const long x = tile.top_x;
    if (on_hyperplane(cfg, lattice_base, x)) return -2;
    if (tile.top_y == 0) {
        const auto m = marker_label_at(cfg, lattice_base, x);
        return (m && is_alpha_type(*m)) ? 1 : 0;
    }
    const bool l = on_hyperplane(cfg, lattice_base, x - 1);
    const bool r = on_hyperplane(cfg, lattice_base, x + 1);
    return (l != r) ? 1 : 0;
}

int degree_tiles(const StandardTableau& t, const ParamConfig& cfg) {
    const PathEmbedding p = embed(t, cfg);
    const auto xs = p.xs();
    const auto xt = embed(t_lambda(t.n, t.shape), cfg).xs();
    int deg = 0;
    for (int i = 0; i < t.n; ++i) {
        const long lo = std::min(xs[i], xt[i]);
        const long hi = std::max(xs[i], xt[i]);
        for (long cx = lo + 1; cx < hi; cx += 2) deg += tile_degree(Tile{cx, i, Side::L}, p.lattice_base, cfg);
    }
    return deg;
}

int degree_klr(const StandardTableau& t, const ParamConfig& cfg) {
    const auto word = reduced_word(t, cfg);
    auto seq = residue_seq(t_lambda(t.n, t.shape), cfg);
    const Residue alphas[4] = {cfg.marker_residue(Marker::alpha1), cfg.marker_residue(Marker::alpha2),
                               cfg.marker_residue(Marker::alpha1_inv), cfg.marker_residue(Marker::alpha2_inv)};
    int deg = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int b = *it;
        if (b == 0) {
            const Residue i1 = seq[0];
            const Residue inv = res_invert(i1, cfg);
            if (inv == i1) {
                deg -= 2;
            } else {
                for (const auto& a : alphas)
                    if (a == i1) deg += 1;
            }
            seq[0] = inv;
        } else {
            const Residue& ib = seq[b - 1];
            const Residue& ib1 = seq[b];
            if (ib == ib1)
                deg -= 2;
            else if (ib1 == res_shift(ib, 1, cfg) || ib1 == res_shift(ib, -1, cfg))
                deg += 1;
            std::swap(seq[b - 1], seq[b]);
        }
    }
    return deg;
}

SignedPerm w_of(const StandardTableau& t) {
    const auto from = t_lambda(t.n, t.shape).entries();
    const auto to = t.entries();
    SignedPerm w(t.n, 0);
    for (int b = 0; b < t.n; ++b) {
        const int a = from[b];
        w[std::abs(a) - 1] = a > 0 ? to[b] : -to[b];
    }
    return w;
}

int coxeter_length(const SignedPerm& w) {
    int len = 0;
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            if (w[i] > w[j]) ++len;
        if (w[i] < 0) len -= w[i];
    }
    return len;
}

namespace {

bool theta_endpoint(const PathEmbedding& p, const ParamConfig& cfg) {
    const long at = p.n % 2 ? p.end_x() : p.end_x() + 1;
    return Residue{p.lattice_base.orbit, cfg.reduce(at)} == cfg.marker_residue(Marker::theta);
}

}  // namespace

std::optional<Shape> max_shape(const PathEmbedding& p, const ParamConfig& cfg) {
    // the alpha markers are searched on the path oriented with x(0) <= x(n); the theta endpoint
    // rule is read in the theta lattice, whichever orientation that is
    const PathEmbedding o = p.start_x > p.end_x() ? sim_transform(p, Negate{}, cfg) : p;
    const long x0 = o.start_x;
    const long xn = o.end_x();
    for (long pos = x0 + 1; pos <= xn; pos += 2) {
        const auto m = marker_label_at(cfg, o.lattice_base, pos);
        if (m && is_alpha_type(*m)) {
            const Shape s{static_cast<int>(xn - pos + 1), *m};
            if (in_lambda(o.n, s)) return s;
            break;
        }
    }
    if (theta_endpoint(p, cfg) || theta_endpoint(o, cfg)) return Shape{0, Marker::theta};
    return std::nullopt;
}

PathEmbedding sim_transform(const PathEmbedding& p, const SimOp& op, const ParamConfig& cfg) {
    PathEmbedding q = p;
    if (std::holds_alternative<Negate>(op)) {
        const int o = p.lattice_base.orbit;
        q.lattice_base = res_invert(p.lattice_base, cfg);
        q.start_x = cfg.self_inverse_orbit(o) ? cfg.orbit_center(o) - p.start_x : -p.start_x;
        q.se = ~p.se & full_mask(p.n);
    } else if (const auto* tr = std::get_if<Translate>(&op)) {
        if (!cfg.finite()) throw std::invalid_argument("translation needs finite e");
        q.start_x = p.start_x + 2 * tr->r * cfg.e();
    } else {
        const int i = std::get<Reflect>(op).i;
        if (i < 0 || i > p.n) throw std::invalid_argument("reflection index out of range");
        if (!on_hyperplane(cfg, p.lattice_base, p.x(i)))
            throw std::invalid_argument("reflection point is not on a hyperplane");
        const std::uint64_t keep = i >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1;
        q.se = p.se ^ (full_mask(p.n) & ~keep);
    }
    return q;
}

std::vector<StandardTableau> tableaux_of_path(const PathEmbedding& p, const ParamConfig& cfg) {
    std::vector<StandardTableau> out;
    const int negs = p.n - std::popcount(p.se);
    const long xn = p.end_x();
    for (const Shape& s : shapes(p.n)) {
        const Residue beta = cfg.marker_residue(s.marker);
        if (beta.orbit != p.lattice_base.orbit) continue;
        const long end = (s.is_theta() && p.n % 2) ? beta.exp : beta.exp - 1 + s.k;
        if (!cfg.congruent(xn, end)) continue;
        if (negs > max_negatives(p.n, s)) continue;
        out.push_back(StandardTableau{p.n, s, ~p.se & full_mask(p.n)});
    }
    return out;
}

namespace {

using PathKey = std::tuple<int, long, std::uint64_t>;

PathKey key_of(const PathEmbedding& p, const ParamConfig& cfg) {
    return {p.lattice_base.orbit, cfg.reduce(p.start_x), p.se};
}

}  // namespace

std::vector<StandardTableau> sim_closure(const StandardTableau& t, const ParamConfig& cfg) {
    std::set<PathKey> seen;
    std::deque<PathEmbedding> queue;
    auto push = [&](PathEmbedding p) {
        p.start_x = cfg.reduce(p.start_x);
        p.lattice_base = Residue{p.lattice_base.orbit, 0};
        if (seen.insert(key_of(p, cfg)).second) queue.push_back(p);
    };
    push(embed(t, cfg));
    std::vector<StandardTableau> out;
    while (!queue.empty()) {
        const PathEmbedding p = queue.front();
        queue.pop_front();
        for (const auto& s : tableaux_of_path(p, cfg)) out.push_back(s);
        push(sim_transform(p, Negate{}, cfg));
        const auto xs = p.xs();
        for (int i = 0; i < p.n; ++i)
            if (on_hyperplane(cfg, p.lattice_base, xs[i])) push(sim_transform(p, Reflect{i}, cfg));
    }
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        const int ia = shape_index(a.n, a.shape), ib = shape_index(b.n, b.shape);
        return ia != ib ? ia < ib : a.neg < b.neg;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long path_width(const StandardTableau& t, const ParamConfig& cfg) {
    const auto p = embed(t, cfg);
    return p.end_x() - p.start_x;
}

bool is_ladder(const StandardTableau& t, const std::vector<StandardTableau>& cls, const ParamConfig& cfg) {
    const auto ms = max_shape(embed(t, cfg), cfg);
    if (!ms || !(*ms == t.shape)) return false;
    const long w = path_width(t, cfg);
    for (const auto& s : cls)
        if (path_width(s, cfg) > w) return false;
    return true;
}

bool is_ladder(const StandardTableau& t, const ParamConfig& cfg) {
    return is_ladder(t, residue_class(t.n, residue_seq(t, cfg), cfg), cfg);
}

std::string path_dump(const StandardTableau& t, const ParamConfig& cfg) {
    std::ostringstream os;
    const auto p = embed(t, cfg);
    const auto xs = p.xs();
    const auto res = path_residues(p, cfg);
    os << "# " << tableau_str(t) << "\n";
    os << "i\tx\tstep\tresidue\n";
    os << 0 << "\t" << xs[0] << "\t-\t-\n";
    for (int i = 1; i <= t.n; ++i)
        os << i << "\t" << xs[i] << "\t" << (p.step_se(i) ? "SE" : "SW") << "\t" << cfg.residue_str(res[i - 1])
           << "\n";
    os << "top_x\ttop_y\tside\tdegree\n";
    for (const auto& tile : tiling(t, cfg))
        os << tile.top_x << "\t" << tile.top_y << "\t" << (tile.side == Side::L ? "L" : "R") << "\t"
           << tile_degree(tile, p.lattice_base, cfg) << "\n";
    return os.str();
}

}  // namespace oriftl
