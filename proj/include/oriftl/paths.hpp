#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oriftl/params.hpp"
#include "oriftl/tableaux.hpp"

namespace oriftl {

// Lattice path: vertex i sits at (x(i), i+1); markers live on row 0.
// Bit i-1 of se is set iff step i is south-east.
struct PathEmbedding {
    Residue lattice_base;
    long start_x = 0;
    int n = 0;
    std::uint64_t se = 0;

    bool step_se(int i) const { return se >> (i - 1) & 1; }
    long x(int i) const;
    std::vector<long> xs() const;
    long end_x() const { return x(n); }
    friend bool operator==(const PathEmbedding&, const PathEmbedding&) = default;
};

PathEmbedding embed(const StandardTableau& t, const ParamConfig& cfg);
Residue step_residue(const PathEmbedding& p, int i, const ParamConfig& cfg);
std::vector<Residue> path_residues(const PathEmbedding& p, const ParamConfig& cfg);

enum class Side { L, R };

struct Tile {
    long top_x = 0;
    int top_y = 0;
    Side side = Side::L;
    friend bool operator==(const Tile&, const Tile&) = default;
};

// Tiles listed in peel order (the order of reduced_word).
std::vector<Tile> tiling(const StandardTableau& t, const ParamConfig& cfg);
std::vector<int> reduced_word(const StandardTableau& t, const ParamConfig& cfg);
// word letters applied to T_lambda, rightmost letter first
Filling apply_word(const std::vector<int>& word, const Filling& f);

int tile_degree(const Tile& tile, const Residue& lattice_base, const ParamConfig& cfg);
int degree_tiles(const StandardTableau& t, const ParamConfig& cfg);
int degree_klr(const StandardTableau& t, const ParamConfig& cfg);

// Signed permutation in window notation [w(1), ..., w(n)].
using SignedPerm = std::vector<int>;
SignedPerm w_of(const StandardTableau& t);
int coxeter_length(const SignedPerm& w);

std::optional<Shape> max_shape(const PathEmbedding& p, const ParamConfig& cfg);

struct Negate {};
struct Translate {
    long r = 0;
};
struct Reflect {
    int i = 0;
};
using SimOp = std::variant<Negate, Translate, Reflect>;

PathEmbedding sim_transform(const PathEmbedding& p, const SimOp& op, const ParamConfig& cfg);

// Every standard tableau whose path is p up to translation by multiples of 2e.
std::vector<StandardTableau> tableaux_of_path(const PathEmbedding& p, const ParamConfig& cfg);

// Closure of {t} under negation, translation and hyperplane reflection.
std::vector<StandardTableau> sim_closure(const StandardTableau& t, const ParamConfig& cfg);

long path_width(const StandardTableau& t, const ParamConfig& cfg);
bool is_ladder(const StandardTableau& t, const std::vector<StandardTableau>& residue_class_of_t,
               const ParamConfig& cfg);
bool is_ladder(const StandardTableau& t, const ParamConfig& cfg);

std::string path_dump(const StandardTableau& t, const ParamConfig& cfg);

}  // namespace oriftl
