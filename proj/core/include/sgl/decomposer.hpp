#pragma once

// Class ideals L_[a] = L_[a],o + V_[a] and the global decomposition
// L = U + sum of class ideals.

#include <string>
#include <vector>

#include "sgl/algebra.hpp"
#include "sgl/support_graph.hpp"

namespace sgl {

struct ClassIdeal {
    ConnectionClass cls;
    Subspace head;        ///< span{[L_b, L_c] : b, c in the class} cap L_o
    GradedSubspace body;  ///< direct sum of L_b over the class
    GradedSubspace total;
    bool is_subalgebra = false;
    bool is_ideal = false;
};

/// Every pair b, c outside o with b*c = {o} lies inside one class. The
/// ideal and decomposition statements rest on it. It always holds, since
/// {~c, o} connects c to b, so it serves as a guard only.
bool o_pairs_connected(const Algebra& alg, const std::vector<ConnectionClass>& classes);

Subspace class_head(const Algebra& alg, const ConnectionClass& cls);
/// Throws InternalError when the ideal sweep fails although
/// o_pairs_connected holds.
ClassIdeal class_ideal(const Algebra& alg, const ConnectionClass& cls);

struct Check {
    std::string name;
    bool applicable = true;  ///< hypotheses of the underlying statement hold
    bool passed = false;
    std::string detail;
};

struct DecompositionReport {
    Subspace U;
    std::vector<ClassIdeal> ideals;
    Subspace L_S_o;
    bool direct = false;
    bool o_pairs_connected = true;
    std::vector<Check> checks;

    /// No applicable check failed.
    bool consistent() const;
};

DecompositionReport decompose(const Algebra& alg);

}  // namespace sgl
