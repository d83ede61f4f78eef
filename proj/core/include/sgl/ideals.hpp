#pragma once

// Graded ideal closures, the ideal frak_I, center, Lie-annihilator,
// tightness and an exhaustive or sampled simplicity oracle.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgl/algebra.hpp"

namespace sgl {

struct IdealClosureResult {
    GradedSubspace subspace;
    std::vector<Vector> generators;
    /// Number of multiplication sweeps that enlarged the subspace.
    std::size_t iterations = 0;
};

/// Smallest graded W containing V with [W, L] + [L, W] <= W.
IdealClosureResult ideal_closure(const Algebra& alg, const GradedSubspace& v);
/// Same, from explicit generators. Throws PreconditionError on a generator
/// that is not homogeneous.
IdealClosureResult ideal_closure(const Algebra& alg, std::span<const Vector> generators);

/// Ideal generated by [x,y] + (-1)^{|x||y|}[y,x]. Throws PreconditionError if
/// it is not compatible with the grading and InternalError if [L, I] != 0.
GradedSubspace frak_I(const Algebra& alg);

Subspace center(const Algebra& alg);

/// {x : [x, L_a] + [L_a, x] = 0} for every label a outside the support of
/// frak_I; the distinguished label takes part only when include_o is set.
Subspace lie_annihilator(const Algebra& alg, bool include_o = true);

/// Sum of [L_a, L_b] over labels a, b other than o with a*b = {o}.
Subspace o_pair_span(const Algebra& alg);
/// L_o = 0 or L_o = o_pair_span(alg). No distinguished label counts as L_o = 0.
bool is_tight(const Algebra& alg);

enum class Verdict { Simple, NotSimple, ProbablySimple };
std::string to_string(Verdict v);

struct SimplicityVerdict {
    Verdict verdict = Verdict::NotSimple;
    /// A graded ideal outside {0, frak_I, L}, when one was found.
    std::optional<GradedSubspace> witness;
    /// True when some piece was only sampled rather than enumerated.
    bool sampled = false;
    std::string reason;
    std::size_t vectors_tested = 0;
};

struct OracleOptions {
    std::uint64_t seed = 0x5eedULL;
    /// Random combinations per piece of dimension >= 2 over Q.
    std::size_t samples = 32;
    /// Above this many projective points a GF(p) piece is sampled instead.
    std::size_t enumeration_limit = 4096;
};

SimplicityVerdict simplicity_oracle(const Algebra& alg, const OracleOptions& opts = {});

}  // namespace sgl
