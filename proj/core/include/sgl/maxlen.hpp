#pragma once

// Maximal-length algebras: the split of the support by frak_I,
// not-I connections, S-multiplicativity and the simplicity criterion.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sgl/algebra.hpp"
#include "sgl/ideals.hpp"
#include "sgl/support_graph.hpp"

namespace sgl {

/// Every L_a^i with a != o has dimension 0 or 1.
bool is_maximal_length(const Algebra& alg);

enum class Side { I, NotI };
std::string to_string(Side s);

struct FrakIPartition {
    std::array<LabelSet, 2> S_I;     ///< indexed by parity
    std::array<LabelSet, 2> S_notI;

    const LabelSet& part(Side side, Parity p) const { return side == Side::I ? S_I[to_int(p)] : S_notI[to_int(p)]; }
    /// S_side^0 u S_side^1.
    LabelSet all(Side side) const;
    /// Side of (label, parity), if that piece is nonzero and not the distinguished label.
    std::optional<Side> side_of(const std::string& label, Parity p) const;
};

/// Requires maximal length.
FrakIPartition frakI_partition(const Algebra& alg);

/// A labelled point of the support, L_label^parity.
struct Endpoint {
    std::string label;
    Parity parity = Parity::Even;
};

struct NegIStep {
    Symbol r;
    Parity parity;  ///< parity declared for this step
};

/// r_2..r_n of a not-I connection; r_1 is the start label. Empty for a = b.
using NegIChain = std::vector<NegIStep>;

/// Searches a not-I connection from a to b. r_k (k >= 2) ranges over
/// S_notI^{i_k}, and over their tilde companions too when allow_tilde is set.
/// Throws PreconditionError when a and b are not on a common side.
std::optional<NegIChain> neg_I_connected(const Algebra& alg, const Endpoint& a, const Endpoint& b, bool allow_tilde = false);
std::optional<NegIChain> neg_I_connected(const Algebra& alg, const FrakIPartition& part, const StarTable& table,
                                         const Endpoint& a, const Endpoint& b, bool allow_tilde);

/// Literal re-evaluation of a chain against the definition.
bool verify_neg_I_connection(const Algebra& alg, const FrakIPartition& part, const StarTable& table, const Endpoint& a,
                             const Endpoint& b, const NegIChain& chain, bool allow_tilde);

struct ConnectivityResult {
    bool all_connected = true;
    std::optional<std::pair<Endpoint, Endpoint>> failing;
};

/// Every element of S_side^i is not-I connected to every element of S_side^j.
ConnectivityResult all_neg_I_connected(const Algebra& alg, Side side, bool allow_tilde = false);

struct SMultCounterexample {
    int condition = 1;  ///< 1 for pairs in S_notI, 2 for pairs in S_I
    Endpoint target;    ///< a (or c)
    Endpoint source;    ///< b (or d)
    Symbol r;
    Parity r_parity;
};

struct SMultResult {
    bool multiplicative = true;
    std::optional<SMultCounterexample> counterexample;
    std::size_t tuples_checked = 0;
};

/// Tuples are checked when the parities are compatible (i = j + k); other
/// parities cannot meet in a product.
SMultResult is_S_multiplicative(const Algebra& alg);

struct TheoremRow {
    bool include_o = true;
    bool allow_tilde = false;
    bool z_lie_zero = false;
    bool hypotheses_hold = false;
    bool I_connected = false;
    bool notI_connected = false;
    bool rhs = false;
    bool consistent = true;
    std::optional<std::pair<Endpoint, Endpoint>> disconnected;
};

struct TheoremReport {
    /// Hypotheses that do not depend on the row settings.
    std::vector<std::pair<std::string, bool>> hypotheses;
    SimplicityVerdict verdict;
    bool lhs = false;  ///< verdict is Simple or ProbablySimple
    std::vector<TheoremRow> rows;

    bool consistent() const;
};

/// Rows for include_o x allow_tilde. Requires maximal length.
TheoremReport theorem_simplicity_check(const Algebra& alg, const OracleOptions& opts = {});

enum class TrichotomyCase { Simple, SplitOffLine, Neither };
std::string to_string(TrichotomyCase c);

struct TrichotomyResult {
    TrichotomyCase kind = TrichotomyCase::Neither;
    SimplicityVerdict verdict;
    std::size_t S_I_size = 0;
    std::size_t S_notI_size = 0;
    /// |S_I| <= 1 together with |S_notI| > 1 on a non-simple algebra. The
    /// proposition rules this out; simple algebras may sit in that shape.
    bool excluded_configuration = false;
    std::optional<std::string> line_label;
    bool split_is_direct = false;    ///< L = L_o + L_a + frak_I, direct
    bool line_is_subalgebra = false;
    bool line_one_dimensional = false;
    bool two_parity_line = false;    ///< L_a carries both parities
};

/// Names of the failed preconditions; empty when the proposition applies.
std::vector<std::string> trichotomy_preconditions(const Algebra& alg, bool include_o = true, bool allow_tilde = false);
/// Throws PreconditionError when a precondition fails.
TrichotomyResult proposition_trichotomy(const Algebra& alg, bool include_o = true, bool allow_tilde = false,
                                        const OracleOptions& opts = {});

struct OPairSplitResult {
    bool applicable = false;  ///< L_o is o-pair generated
    bool even_matches = false;
    bool odd_matches = false;
};

/// Recomputes both parity pieces of L_o from pairs with the right factor in S_notI.
OPairSplitResult check_o_pair_split(const Algebra& alg);

}  // namespace sgl
