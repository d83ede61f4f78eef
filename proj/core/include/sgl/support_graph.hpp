#pragma once

// Support of the grading, the star operation on S u ~S, the phi map and
// connections between support labels.

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgl/algebra.hpp"

namespace sgl {

/// A support label a or its formal companion ~a.
struct Symbol {
    std::string base;
    bool tilded = false;

    Symbol tilde() const { return {base, !tilded}; }
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

inline Symbol plain(std::string label) { return {std::move(label), false}; }
inline Symbol tilded(std::string label) { return {std::move(label), true}; }
std::string to_string(const Symbol& s);
/// "a" or "~a".
Symbol parse_symbol(const std::string& text);

using SymbolSet = std::set<Symbol>;
using LabelSet = std::set<std::string>;

struct Support {
    LabelSet all;
    LabelSet even;
    LabelSet odd;
};

Support support(const Algebra& alg);

/// Precomputed label-level multiplication targets. Built once per algebra;
/// all queries below go through it.
class StarTable {
public:
    explicit StarTable(const Algebra& alg);

    const LabelSet& labels() const noexcept { return labels_; }
    const std::optional<std::string>& distinguished() const noexcept { return distinguished_; }
    /// Symbols of S u ~S in canonical order.
    std::vector<Symbol> all_symbols() const;

    /// a*b = {c} when 0 != [L_a,L_b] <= L_c, else empty.
    /// a*~b = ~b*a = {c in S : 0 != [L_c, L_b] <= L_a}.  ~a*~b = empty.
    LabelSet star(const Symbol& x, const Symbol& y) const;

    /// ((U_x x*r) \ {o}) together with its tilde copy. phi(empty, r) = empty.
    SymbolSet phi(const SymbolSet& u, const Symbol& r) const;

    /// Target label of [L_a, L_b], if nonzero.
    std::optional<std::string> target(const std::string& a, const std::string& b) const;

private:
    LabelSet labels_;
    std::optional<std::string> distinguished_;
    std::map<std::pair<std::string, std::string>, std::string> target_;
    // preimage_[(a,b)] = {c : [L_c, L_b] <= L_a, nonzero}
    std::map<std::pair<std::string, std::string>, LabelSet> preimage_;
};

/// A chain r_1..r_n connecting a to b through iterated phi.
using Chain = std::vector<Symbol>;

/// Literal check of a chain: r_1 in {a, ~a}, every iterate before the last
/// nonempty, b in the last iterate. n = 1 requires r_1 = a = b.
bool verify_connection(const StarTable& table, const std::string& a, const std::string& b, const Chain& chain);

/// A witness chain from a to b, or nullopt. Throws PreconditionError when a
/// or b is the distinguished label or outside the support.
std::optional<Chain> is_connected(const StarTable& table, const std::string& a, const std::string& b);
std::optional<Chain> is_connected(const Algebra& alg, const std::string& a, const std::string& b);

/// Labels reachable from a (including a), computed by monotone fixpoint.
LabelSet reachable_labels(const StarTable& table, const std::string& a);

struct ConnectionClass {
    std::string representative;  ///< smallest member
    LabelSet members;
};

struct ConnectionAnalysis {
    std::vector<ConnectionClass> classes;
    /// True when reachability is symmetric, i.e. the classes are exactly the
    /// reachability sets.
    bool symmetric = true;
    /// Ordered pairs (a, b) with a reaching b but b not reaching a.
    std::vector<std::pair<std::string, std::string>> one_way_pairs;
};

/// Partition of S \ {o} into the classes of the equivalence relation
/// generated by connectedness. Singletons are always emitted.
ConnectionAnalysis analyze_connections(const Algebra& alg);
std::vector<ConnectionClass> connection_classes(const Algebra& alg);

}  // namespace sgl
