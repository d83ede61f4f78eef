#pragma once

// Deterministic generators of valid set-graded Leibniz superalgebras,
// plus perturbation negatives for the validator.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgl/algebra.hpp"

namespace sgl {

/// A square matrix acting on a module; entry (row k, column i) is the
/// coefficient of m_k in m_i . x.
using Matrix = std::vector<std::vector<Scalar>>;

/// One basis vector per (label, parity) entry; labels with no parities are omitted.
Algebra gen_abelian(Field field, const std::vector<std::pair<std::string, std::vector<Parity>>>& labels);

/// k copies of N2 ([x_i, x_i] = y_i) with labels a_i, b_i. For k = 1 the
/// names are x, y and the labels a, b.
Algebra gen_n2_family(std::size_t k, Field field);

/// g + M with [(x,m),(y,n)] = ([x,y], m.x) where action[j] is the matrix of
/// m -> m.e_j. Module vectors are named "m:<i>" and take the given labels.
/// Throws PreconditionError when the right-module law fails or the result
/// does not validate.
Algebra gen_hemisemidirect(const Algebra& lie, const std::vector<Matrix>& action, Parity module_parity,
                           const std::vector<std::string>& module_labels);

/// Block sum; names and labels get the suffixes "#1" and "#2". No distinguished label.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// Renames labels (unmapped labels stay); merged labels may break the
/// grading, so the caller validates.
Algebra relabel(const Algebra& alg, const std::map<std::string, std::string>& mapping);

/// The isomorphic algebra in the basis c_i e_i.
Algebra rescale(const Algebra& alg, const std::vector<Scalar>& factors);
/// rescale with factors drawn from a seeded generator.
Algebra random_rescale(const Algebra& alg, std::uint64_t seed);

struct Perturbed {
    Algebra algebra;
    bool expected_valid = false;
};

/// `edits` random single-entry changes of the structure constants; the
/// validity flag is whatever validate reports.
Perturbed gen_perturb(const Algebra& base, std::size_t edits, std::uint64_t seed);

// Lie algebras used as building blocks. Each basis line carries its own label.
Algebra lie_abelian(Field field, std::size_t n);
/// [e, f] = f.
Algebra lie_nonabelian2(Field field);
/// [h,e] = 2e, [h,f] = -2f, [e,f] = h.
Algebra lie_sl2(Field field);
/// [p, q] = z.
Algebra lie_heisenberg(Field field);
/// so(3) in a basis x, y, z with [x,y] = z, [y,z] = x, [z,x] = y; each line
/// its own label, so two distinct labels multiply into the third.
Algebra lie_so3(Field field);

/// Right action of g on itself: m . x = [m, x].
std::vector<Matrix> adjoint_action(const Algebra& lie);
std::vector<Matrix> zero_action(const Algebra& lie, std::size_t module_dim);
/// Irreducible sl2 module of dimension n + 1 turned into a right module (m . x = -x m).
std::vector<Matrix> sl2_irrep_action(Field field, std::size_t n);

/// x acting on M = span{m_1..m_k} by a signed permutation T (an involution),
/// with [x, x] = gamma m_1. All vectors even, one label per line.
Algebra gen_line_extension(Field field, const std::vector<std::size_t>& perm, const std::vector<int>& signs,
                           const Scalar& gamma);

/// Only [b0, r0] = a0 is nonzero, with a and b carrying both parities: a
/// maximal-length algebra that is not S-multiplicative.
Algebra gen_smult_counterexample(Field field);

struct CorpusEntry {
    std::string name;
    std::string family;
    Algebra algebra;
};

/// The acceptance corpus: abelian, N2 family, hemisemidirect over GF(5) and
/// GF(7), relabelled variants, the theorem families and special instances.
/// Every entry validates.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = 1);

struct PerturbedEntry {
    std::string name;
    Perturbed perturbed;
};

/// At least `count` perturbations that fail validation, drawn from corpus bases.
std::vector<PerturbedEntry> perturbed_corpus(std::uint64_t seed = 1, std::size_t count = 20);

}  // namespace sgl
