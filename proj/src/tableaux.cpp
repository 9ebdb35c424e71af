#include "oriftl/tableaux.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace oriftl {

std::string shape_str(const Shape& s) {
    return "(" + std::to_string(s.k) + "," + marker_name(s.marker) + ")";
}

Shape parse_shape(const std::string& str) {
    std::string s;
    for (char c : str)
        if (c != ' ') s += c;
    if (s.size() < 5 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("shape must look like (k,name): " + str);
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("shape must look like (k,name): " + str);
    Shape sh;
    try {
        std::size_t pos = 0;
        sh.k = std::stoi(s.substr(1, comma - 1), &pos);
        if (pos != comma - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad width in shape: " + str);
    }
    const auto m = parse_marker(s.substr(comma + 1, s.size() - comma - 2));
    if (!m || *m == Marker::theta_inv) throw std::invalid_argument("bad marker in shape: " + str);
    sh.marker = *m;
    return sh;
}

bool in_lambda(int n, const Shape& s) {
    if (s.is_theta()) return s.k == 0;
    if (s.marker == Marker::theta_inv) return false;
    if (s.k < 1 || s.k > n || (n - s.k) % 2 != 0) return false;
    if (s.k == 1) return s.marker == Marker::alpha1;
    if (s.k == 2) return s.marker != Marker::alpha1_inv;
    return true;
}

int bead_position(int n, const Shape& s) { return (n - s.k) / 2 + 1; }

int max_negatives(int n, const Shape& s) { return s.is_theta() ? n : bead_position(n, s) - 1; }

std::vector<Shape> shapes(int n) {
    std::vector<Shape> out;
    for (int k = n; k >= 1; k -= 2)
        for (Marker m : {Marker::alpha1, Marker::alpha2, Marker::alpha1_inv, Marker::alpha2_inv}) {
            Shape s{k, m};
            if (in_lambda(n, s)) out.push_back(s);
        }
    out.push_back(Shape{0, Marker::theta});
    return out;
}

std::vector<Shape> shapes(int n, const ParamConfig&) { return shapes(n); }

int shape_index(int n, const Shape& s) {
    const auto all = shapes(n);
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == s) return static_cast<int>(i);
    return -1;
}

int StandardTableau::negatives() const { return std::popcount(neg); }

std::vector<int> StandardTableau::entries() const {
    std::vector<int> out;
    out.reserve(n);
    for (int i = n; i >= 1; --i)
        if (neg >> (i - 1) & 1) out.push_back(-i);
    for (int i = 1; i <= n; ++i)
        if (!(neg >> (i - 1) & 1)) out.push_back(i);
    return out;
}

std::string tableau_str(const StandardTableau& t) {
    std::string s = shape_str(t.shape) + ":[";
    const auto es = t.entries();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(es[i]);
    }
    return s + "]";
}

StandardTableau parse_tableau(const std::string& str) {
    const auto colon = str.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("tableau must look like (k,name):[...]");
    Filling f;
    f.shape = parse_shape(str.substr(0, colon));
    std::string body;
    for (char c : str.substr(colon + 1))
        if (c != ' ') body += c;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("tableau entries must be in brackets");
    body = body.substr(1, body.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) f.entries.push_back(std::stoi(item));
    const int n = static_cast<int>(f.entries.size());
    return to_tableau(n, f);
}

bool is_standard(int n, const Filling& f) {
    if (n < 1 || n > kMaxN || static_cast<int>(f.entries.size()) != n) return false;
    if (!in_lambda(n, f.shape)) return false;
    std::vector<bool> seen(n + 1, false);
    int negs = 0;
    for (int i = 0; i < n; ++i) {
        const int a = std::abs(f.entries[i]);
        if (a < 1 || a > n || seen[a]) return false;
        seen[a] = true;
        if (f.entries[i] < 0) ++negs;
        if (i > 0 && f.entries[i] <= f.entries[i - 1]) return false;
    }
    return negs <= max_negatives(n, f.shape);
}

StandardTableau to_tableau(int n, const Filling& f) {
    if (!is_standard(n, f)) throw std::invalid_argument("filling is not a standard tableau");
    StandardTableau t{n, f.shape, 0};
    for (int e : f.entries)
        if (e < 0) t.neg |= std::uint64_t{1} << (-e - 1);
    return t;
}

Filling to_filling(const StandardTableau& t) { return Filling{t.shape, t.entries()}; }

std::vector<StandardTableau> enumerate_std(int n, const Shape& shape) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("n out of range");
    if (!in_lambda(n, shape)) throw std::invalid_argument("shape " + shape_str(shape) + " is not in Lambda_n");
    std::vector<StandardTableau> out;
    const int jmax = max_negatives(n, shape);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (int j = 0; j <= jmax; ++j) {
        if (j == 0) {
            out.push_back({n, shape, 0});
            continue;
        }
        std::uint64_t m = (std::uint64_t{1} << j) - 1;
        while (m < limit) {
            out.push_back({n, shape, m});
            const std::uint64_t c = m & -m;
            const std::uint64_t r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return out;
}

std::uint64_t count_std(int n, const Shape& shape) {
    const int jmax = max_negatives(n, shape);
    std::uint64_t total = 0, binom = 1;
    for (int j = 0; j <= jmax; ++j) {
        total += binom;
        binom = binom * (n - j) / (j + 1);
    }
    return total;
}

StandardTableau t_lambda(int n, const Shape& shape) {
    if (!in_lambda(n, shape)) throw std::invalid_argument("shape " + shape_str(shape) + " is not in Lambda_n");
    StandardTableau t{n, shape, 0};
    const int p = bead_position(n, shape);
    for (int i = 1; i < p; ++i) t.neg |= std::uint64_t{1} << (2 * i - 1);
    return t;
}

Residue box_content(int n, const Shape& shape, int box, const ParamConfig& cfg) {
    return res_shift(cfg.marker_residue(shape.marker), box - bead_position(n, shape), cfg);
}

std::vector<Residue> residue_seq(const StandardTableau& t, const ParamConfig& cfg) {
    std::vector<Residue> res(t.n);
    const auto es = t.entries();
    for (int j = 1; j <= t.n; ++j) {
        const int e = es[j - 1];
        const Residue c = box_content(t.n, t.shape, j, cfg);
        res[std::abs(e) - 1] = e > 0 ? c : res_invert(c, cfg);
    }
    return res;
}

int signed_generator_image(int g, int value) {
    const int a = std::abs(value);
    const int sign = value < 0 ? -1 : 1;
    if (g == 0) return a == 1 ? -value : value;
    if (a == g) return sign * (g + 1);
    if (a == g + 1) return sign * g;
    return value;
}

Filling weyl_act(int g, const Filling& f) {
    Filling out{f.shape, f.entries};
    for (int& e : out.entries) e = signed_generator_image(g, e);
    return out;
}

namespace {

struct ResidueDfs {
    int n;
    int j;
    const std::vector<Residue>& target;
    const std::vector<Residue>& content;      // content[box-1]
    const std::vector<Residue>& inv_content;  // inverse contents
    const Shape& shape;
    std::vector<StandardTableau>& out;

    void run(int i, int used, std::uint64_t mask) {
        if (i > n) {
            if (used == j) out.push_back({n, shape, mask});
            return;
        }
        const int left = n - i + 1;
        if (j - used > left) return;
        if (used < j) {
            const int box = j - used;
            if (inv_content[box - 1] == target[i - 1]) run(i + 1, used + 1, mask | (std::uint64_t{1} << (i - 1)));
        }
        if (j - used < left) {
            const int box = j + 1 + (i - 1 - used);
            if (content[box - 1] == target[i - 1]) run(i + 1, used, mask);
        }
    }
};

}  // namespace

std::vector<StandardTableau> tableaux_with_residues(int n, const Shape& shape,
                                                    const std::vector<Residue>& target,
                                                    const ParamConfig& cfg) {
    if (static_cast<int>(target.size()) != n) throw std::invalid_argument("residue sequence has wrong length");
    std::vector<Residue> content(n), inv_content(n);
    for (int b = 1; b <= n; ++b) {
        content[b - 1] = box_content(n, shape, b, cfg);
        inv_content[b - 1] = res_invert(content[b - 1], cfg);
    }
    std::vector<StandardTableau> out;
    const int jmax = max_negatives(n, shape);
    for (int j = 0; j <= jmax; ++j) {
        ResidueDfs dfs{n, j, target, content, inv_content, shape, out};
        dfs.run(1, 0, 0);
    }
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        const int na = a.negatives(), nb = b.negatives();
        return na != nb ? na < nb : a.neg < b.neg;
    });
    return out;
}

std::vector<StandardTableau> residue_class(int n, const std::vector<Residue>& target, const ParamConfig& cfg) {
    std::vector<StandardTableau> out;
    for (const Shape& s : shapes(n)) {
        auto part = tableaux_with_residues(n, s, target, cfg);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<StandardTableau> cstd(int n, const Shape& lambda, const Shape& mu, const ParamConfig& cfg) {
    if (!in_lambda(n, lambda) || !in_lambda(n, mu)) throw std::invalid_argument("shape not in Lambda_n");
    return tableaux_with_residues(n, lambda, residue_seq(t_lambda(n, mu), cfg), cfg);
}

}  // namespace oriftl
