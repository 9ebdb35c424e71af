#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oriftl/params.hpp"

namespace oriftl {

constexpr int kMaxN = 62;

struct Shape {
    int k = 0;
    Marker marker = Marker::theta;

    bool is_theta() const { return marker == Marker::theta; }
    friend bool operator==(const Shape&, const Shape&) = default;
};

std::string shape_str(const Shape& s);
Shape parse_shape(const std::string& s);  // "(k,name)"
bool in_lambda(int n, const Shape& s);
int bead_position(int n, const Shape& s);
// maximal number of negative entries (n for (0,theta))
int max_negatives(int n, const Shape& s);

// Lambda_n: descending k, ties by marker enum order.
std::vector<Shape> shapes(int n);
std::vector<Shape> shapes(int n, const ParamConfig& cfg);
// position of s in shapes(n)
int shape_index(int n, const Shape& s);

// A standard tableau is determined by its shape and the set S of negated values.
// Bit i-1 of neg is set iff -i is an entry.
struct StandardTableau {
    int n = 0;
    Shape shape;
    std::uint64_t neg = 0;

    int negatives() const;
    std::vector<int> entries() const;
    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

std::string tableau_str(const StandardTableau& t);
StandardTableau parse_tableau(const std::string& s);  // "(k,name):[e1,...,en]"

// A filling of the one-row shape, not necessarily standard.
struct Filling {
    Shape shape;
    std::vector<int> entries;
};

bool is_standard(int n, const Filling& f);
StandardTableau to_tableau(int n, const Filling& f);  // throws if not standard
Filling to_filling(const StandardTableau& t);

// Canonical order: by number of negatives, then by the negated-value bitmask.
std::vector<StandardTableau> enumerate_std(int n, const Shape& shape);
std::uint64_t count_std(int n, const Shape& shape);

StandardTableau t_lambda(int n, const Shape& shape);

// content of box j (1-based) of shape on n boxes
Residue box_content(int n, const Shape& shape, int box, const ParamConfig& cfg);
std::vector<Residue> residue_seq(const StandardTableau& t, const ParamConfig& cfg);

// s_0 flips the sign of +-1; s_i swaps |i| and |i+1| keeping attached signs
int signed_generator_image(int g, int value);
Filling weyl_act(int g, const Filling& f);

// all s in Std_n(shape) with residue_seq(s) == target
std::vector<StandardTableau> tableaux_with_residues(int n, const Shape& shape,
                                                    const std::vector<Residue>& target,
                                                    const ParamConfig& cfg);
// every standard tableau (any shape in Lambda_n) with the given residue sequence
std::vector<StandardTableau> residue_class(int n, const std::vector<Residue>& target,
                                           const ParamConfig& cfg);

std::vector<StandardTableau> cstd(int n, const Shape& lambda, const Shape& mu, const ParamConfig& cfg);

}  // namespace oriftl
