#pragma once

// Small algebras written out by hand, independent of the corpus generators.

#include <initializer_list>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sgl/algebra.hpp"

namespace fx {

using sgl::Algebra;
using sgl::BasisElement;
using sgl::Field;
using sgl::Parity;

struct Entry {
    std::size_t left, right;
    std::vector<std::pair<std::size_t, long long>> result;
};

inline Algebra build(Field f, std::vector<BasisElement> basis, std::initializer_list<Entry> table,
                     std::optional<std::string> o = std::nullopt) {
    Algebra alg(f, std::move(basis), std::move(o));
    for (const auto& e : table) {
        sgl::Vector v = alg.zero_vector();
        for (auto [k, c] : e.result) v[k] = f.from_int(c);
        alg.set_product(e.left, e.right, v);
    }
    return alg;
}

/// x in L_a, y in L_b, [x,x] = y.
inline Algebra n2(Field f = Field::rationals(), std::optional<std::string> o = std::nullopt) {
    return build(f, {{"x", "a", Parity::Even}, {"y", "b", Parity::Even}}, {{0, 0, {{1, 1}}}}, std::move(o));
}

/// Two copies of N2 with labels a1, b1, a2, b2.
inline Algebra n2_pair(Field f = Field::rationals()) {
    return build(f,
                 {{"x1", "a1", Parity::Even}, {"y1", "b1", Parity::Even}, {"x2", "a2", Parity::Even}, {"y2", "b2", Parity::Even}},
                 {{0, 0, {{1, 1}}}, {2, 2, {{3, 1}}}});
}

/// One even line per label, no products.
inline Algebra abelian(std::vector<std::string> labels, Field f = Field::rationals()) {
    std::vector<BasisElement> basis;
    for (const auto& l : labels) basis.push_back({"e_" + l, l, Parity::Even});
    return Algebra(f, std::move(basis));
}

/// Heisenberg Lie algebra [p,q] = z = -[q,p], one label per line.
inline Algebra heisenberg(Field f = Field::rationals(), std::optional<std::string> o = std::nullopt) {
    return build(f, {{"p", "P", Parity::Even}, {"q", "Q", Parity::Even}, {"z", "Z", Parity::Even}},
                 {{0, 1, {{2, 1}}}, {1, 0, {{2, -1}}}}, std::move(o));
}

/// so(3): [x,y] = z, [y,z] = x, [z,x] = y, labels X, Y, Z.
inline Algebra so3(Field f = Field::rationals()) {
    return build(f, {{"x", "X", Parity::Even}, {"y", "Y", Parity::Even}, {"z", "Z", Parity::Even}},
                 {{0, 1, {{2, 1}}}, {1, 0, {{2, -1}}}, {1, 2, {{0, 1}}}, {2, 1, {{0, -1}}}, {2, 0, {{1, 1}}}, {0, 2, {{1, -1}}}});
}

}  // namespace fx
