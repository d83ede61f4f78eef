#include "sgl/maxlen.hpp"

#include <deque>

#include "sgl/errors.hpp"

namespace sgl {

namespace {

Subspace piece_product(const Algebra& alg, const Cell& left, const Cell& right) {
    std::vector<Vector> rows;
    for (std::size_t i : alg.indices_in_cell(left))
        for (std::size_t j : alg.indices_in_cell(right))
            if (!alg.product_terms(i, j).empty()) rows.push_back(alg.product(i, j));
    return Subspace::span(alg.field(), alg.dim(), rows);
}

bool has_piece(const Algebra& alg, const std::string& label, Parity p) { return !alg.indices_in_cell({label, p}).empty(); }

std::string show(const Endpoint& e) { return e.label + "^" + std::to_string(to_int(e.parity)); }

}  // namespace

bool is_maximal_length(const Algebra& alg) {
    for (const auto& label : alg.labels()) {
        if (alg.is_distinguished(label)) continue;
        for (Parity p : kParities)
            if (alg.indices_in_cell({label, p}).size() > 1) return false;
    }
    return true;
}

std::string to_string(Side s) { return s == Side::I ? "I" : "notI"; }

LabelSet FrakIPartition::all(Side side) const {
    LabelSet out = part(side, Parity::Even);
    const auto& odd = part(side, Parity::Odd);
    out.insert(odd.begin(), odd.end());
    return out;
}

std::optional<Side> FrakIPartition::side_of(const std::string& label, Parity p) const {
    if (S_I[to_int(p)].contains(label)) return Side::I;
    if (S_notI[to_int(p)].contains(label)) return Side::NotI;
    return std::nullopt;
}

FrakIPartition frakI_partition(const Algebra& alg) {
    if (!is_maximal_length(alg)) throw PreconditionError("frakI_partition requires maximal length");
    const Subspace ideal = frak_I(alg).total();
    FrakIPartition out;
    for (const auto& label : alg.labels()) {
        if (alg.is_distinguished(label)) continue;
        for (Parity p : kParities) {
            Subspace piece = homogeneous_piece(alg, label, p);
            if (piece.is_zero()) continue;
            const std::size_t meet = intersect(piece, ideal).dim();
            if (meet == piece.dim()) {
                out.S_I[to_int(p)].insert(label);
            } else if (meet == 0) {
                out.S_notI[to_int(p)].insert(label);
            } else {
                throw InternalError("frak_I meets L_" + label + " properly in maximal length");
            }
        }
    }
    return out;
}

namespace {

struct Searcher {
    const Algebra& alg;
    const FrakIPartition& part;
    const StarTable& table;
    bool allow_tilde;

    std::vector<NegIStep> moves() const {
        std::vector<NegIStep> out;
        for (Parity k : kParities)
            for (const auto& t : part.S_notI[to_int(k)]) {
                out.push_back({plain(t), k});
                if (allow_tilde) out.push_back({tilded(t), k});
            }
        return out;
    }

    // The iterate, read on S, must be nonempty and inside S_side^parity.
    bool admissible(const SymbolSet& u, Side side, Parity p) const {
        bool any = false;
        for (const auto& s : u) {
            if (s.tilded) continue;
            any = true;
            if (!part.part(side, p).contains(s.base)) return false;
        }
        return any;
    }
};

Side common_side(const FrakIPartition& part, const Endpoint& a, const Endpoint& b) {
    auto sa = part.side_of(a.label, a.parity);
    auto sb = part.side_of(b.label, b.parity);
    if (!sa) throw PreconditionError(show(a) + " is not in S_I or S_notI");
    if (!sb) throw PreconditionError(show(b) + " is not in S_I or S_notI");
    if (*sa != *sb) throw PreconditionError("endpoints " + show(a) + " and " + show(b) + " lie on different sides of frak_I");
    return *sa;
}

}  // namespace

bool verify_neg_I_connection(const Algebra& alg, const FrakIPartition& part, const StarTable& table, const Endpoint& a,
                             const Endpoint& b, const NegIChain& chain, bool allow_tilde) {
    const Side side = common_side(part, a, b);
    if (a.label == b.label) return true;
    if (chain.empty()) return false;
    Searcher s{alg, part, table, allow_tilde};
    SymbolSet u{plain(a.label)};
    Parity p = a.parity;
    for (const auto& step : chain) {
        if (step.r.tilded && !allow_tilde) return false;
        if (!part.S_notI[to_int(step.parity)].contains(step.r.base)) return false;
        u = table.phi(u, step.r);
        p = p + step.parity;
        if (!s.admissible(u, side, p)) return false;
    }
    return u.contains(plain(b.label)) && p == b.parity;
}

std::optional<NegIChain> neg_I_connected(const Algebra& alg, const FrakIPartition& part, const StarTable& table,
                                         const Endpoint& a, const Endpoint& b, bool allow_tilde) {
    const Side side = common_side(part, a, b);
    if (a.label == b.label) return NegIChain{};

    using State = std::pair<SymbolSet, Parity>;
    Searcher s{alg, part, table, allow_tilde};
    const auto moves = s.moves();
    std::map<State, std::pair<State, NegIStep>> parent;
    const State start{SymbolSet{plain(a.label)}, a.parity};
    std::set<State> seen{start};
    std::deque<State> queue{start};
    while (!queue.empty()) {
        State cur = queue.front();
        queue.pop_front();
        for (const auto& m : moves) {
            State next{table.phi(cur.first, m.r), cur.second + m.parity};
            if (!s.admissible(next.first, side, next.second)) continue;
            if (next.first.contains(plain(b.label)) && next.second == b.parity) {
                NegIChain rev{m};
                for (State at = cur; at != start; at = parent.at(at).first) rev.push_back(parent.at(at).second);
                NegIChain chain(rev.rbegin(), rev.rend());
                if (!verify_neg_I_connection(alg, part, table, a, b, chain, allow_tilde))
                    throw InternalError("not-I connection fails re-verification");
                return chain;
            }
            if (seen.insert(next).second) {
                parent.emplace(next, std::make_pair(cur, m));
                queue.push_back(std::move(next));
            }
        }
    }
    return std::nullopt;
}

std::optional<NegIChain> neg_I_connected(const Algebra& alg, const Endpoint& a, const Endpoint& b, bool allow_tilde) {
    const auto part = frakI_partition(alg);
    const StarTable table(alg);
    return neg_I_connected(alg, part, table, a, b, allow_tilde);
}

namespace {

ConnectivityResult all_connected(const Algebra& alg, const FrakIPartition& part, const StarTable& table, Side side,
                                 bool allow_tilde) {
    ConnectivityResult out;
    for (Parity i : kParities)
        for (const auto& a : part.part(side, i))
            for (Parity j : kParities)
                for (const auto& b : part.part(side, j)) {
                    Endpoint ea{a, i}, eb{b, j};
                    if (!neg_I_connected(alg, part, table, ea, eb, allow_tilde)) {
                        out.all_connected = false;
                        out.failing = std::make_pair(ea, eb);
                        return out;
                    }
                }
    return out;
}

}  // namespace

ConnectivityResult all_neg_I_connected(const Algebra& alg, Side side, bool allow_tilde) {
    const auto part = frakI_partition(alg);
    const StarTable table(alg);
    return all_connected(alg, part, table, side, allow_tilde);
}

SMultResult is_S_multiplicative(const Algebra& alg) {
    const auto part = frakI_partition(alg);
    const StarTable table(alg);
    SMultResult out;

    auto scan = [&](int condition, Side side, bool r_in_notI) {
        for (Parity i : kParities)
            for (const auto& a : part.part(side, i))
                for (Parity j : kParities)
                    for (const auto& b : part.part(side, j))
                        for (const auto& r : table.all_symbols())
                            for (Parity k : kParities) {
                                if (i != j + k) continue;
                                if (r_in_notI ? !part.S_notI[to_int(k)].contains(r.base) : !has_piece(alg, r.base, k)) continue;
                                if (!table.star(plain(b), r).contains(a)) continue;
                                ++out.tuples_checked;
                                Subspace prod = piece_product(alg, {b, j}, {r.base, k});
                                if (!prod.contains(homogeneous_piece(alg, a, i))) {
                                    out.multiplicative = false;
                                    out.counterexample = SMultCounterexample{condition, {a, i}, {b, j}, r, k};
                                    return false;
                                }
                            }
        return true;
    };
    if (scan(1, Side::NotI, false)) scan(2, Side::I, true);
    return out;
}

bool TheoremReport::consistent() const {
    for (const auto& r : rows)
        if (!r.consistent) return false;
    return true;
}

TheoremReport theorem_simplicity_check(const Algebra& alg, const OracleOptions& opts) {
    if (!is_maximal_length(alg)) throw PreconditionError("theorem check requires maximal length");
    const auto part = frakI_partition(alg);
    const StarTable table(alg);
    TheoremReport rep;
    const bool smult = is_S_multiplicative(alg).multiplicative;
    const bool tight = is_tight(alg);
    rep.hypotheses = {{"maximal_length", true},
                      {"S_multiplicative", smult},
                      {"S_notI_size_gt_1", part.all(Side::NotI).size() > 1},
                      {"S_I_size_gt_1", part.all(Side::I).size() > 1},
                      {"L_o_pair_generated", tight}};
    bool base = true;
    for (const auto& [name, ok] : rep.hypotheses) base &= ok;

    rep.verdict = simplicity_oracle(alg, opts);
    rep.lhs = rep.verdict.verdict != Verdict::NotSimple;

    for (bool include_o : {true, false}) {
        const bool z_zero = lie_annihilator(alg, include_o).is_zero();
        for (bool allow_tilde : {false, true}) {
            TheoremRow row;
            row.include_o = include_o;
            row.allow_tilde = allow_tilde;
            row.z_lie_zero = z_zero;
            row.hypotheses_hold = base && z_zero;
            auto ci = all_connected(alg, part, table, Side::I, allow_tilde);
            auto cn = all_connected(alg, part, table, Side::NotI, allow_tilde);
            row.I_connected = ci.all_connected;
            row.notI_connected = cn.all_connected;
            row.rhs = ci.all_connected && cn.all_connected;
            row.disconnected = ci.failing ? ci.failing : cn.failing;
            row.consistent = !row.hypotheses_hold || row.rhs == rep.lhs;
            rep.rows.push_back(row);
        }
    }
    return rep;
}

std::string to_string(TrichotomyCase c) {
    switch (c) {
        case TrichotomyCase::Simple: return "Case1";
        case TrichotomyCase::SplitOffLine: return "Case2";
        case TrichotomyCase::Neither: return "Neither";
    }
    return "?";
}

std::vector<std::string> trichotomy_preconditions(const Algebra& alg, bool include_o, bool allow_tilde) {
    if (!is_maximal_length(alg)) return {"maximal_length"};
    std::vector<std::string> failed;
    const auto part = frakI_partition(alg);
    const StarTable table(alg);
    if (!is_S_multiplicative(alg).multiplicative) failed.emplace_back("S_multiplicative");
    if (!is_tight(alg)) failed.emplace_back("L_o_pair_generated");
    if (!lie_annihilator(alg, include_o).is_zero()) failed.emplace_back("Z_Lie_zero");
    if (!all_connected(alg, part, table, Side::NotI, allow_tilde).all_connected) failed.emplace_back("S_notI_connected");
    if (!all_connected(alg, part, table, Side::I, allow_tilde).all_connected) failed.emplace_back("S_I_connected");
    if (part.all(Side::NotI).size() > 1 && part.all(Side::I).size() > 1) failed.emplace_back("small_side");
    return failed;
}

TrichotomyResult proposition_trichotomy(const Algebra& alg, bool include_o, bool allow_tilde, const OracleOptions& opts) {
    auto failed = trichotomy_preconditions(alg, include_o, allow_tilde);
    if (!failed.empty()) {
        std::string msg = "proposition preconditions fail:";
        for (const auto& f : failed) msg += " " + f;
        throw PreconditionError(msg);
    }
    const auto part = frakI_partition(alg);
    TrichotomyResult res;
    res.S_I_size = part.all(Side::I).size();
    res.S_notI_size = part.all(Side::NotI).size();
    res.verdict = simplicity_oracle(alg, opts);
    res.excluded_configuration =
        res.S_I_size <= 1 && res.S_notI_size > 1 && res.verdict.verdict == Verdict::NotSimple;
    if (res.verdict.verdict != Verdict::NotSimple) {
        res.kind = TrichotomyCase::Simple;
        return res;
    }
    if (res.S_notI_size != 1) return res;

    const std::string a = *part.all(Side::NotI).begin();
    res.line_label = a;
    const Subspace la = label_space(alg, a);
    const Subspace lo = alg.distinguished() ? label_space(alg, *alg.distinguished()) : Subspace(alg.field(), alg.dim());
    const Subspace ideal = frak_I(alg).total();
    const Subspace all = sum(sum(lo, la), ideal);
    res.split_is_direct = all.dim() == alg.dim() && lo.dim() + la.dim() + ideal.dim() == alg.dim();
    res.line_is_subalgebra = true;
    for (const auto& u : la.rows())
        for (const auto& v : la.rows()) res.line_is_subalgebra &= la.contains(multiply(alg, u, v));
    res.line_one_dimensional = la.dim() == 1;
    res.two_parity_line = has_piece(alg, a, Parity::Even) && has_piece(alg, a, Parity::Odd);
    if (res.split_is_direct && res.line_is_subalgebra) res.kind = TrichotomyCase::SplitOffLine;
    return res;
}

OPairSplitResult check_o_pair_split(const Algebra& alg) {
    OPairSplitResult out;
    if (!alg.distinguished() || !is_maximal_length(alg) || !is_tight(alg)) return out;
    out.applicable = true;
    const std::string& o = *alg.distinguished();
    const auto part = frakI_partition(alg);
    const StarTable table(alg);
    for (Parity target : kParities) {
        std::vector<Vector> rows;
        for (const auto& a : table.labels())
            for (Parity i : kParities) {
                if (a == o || !has_piece(alg, a, i)) continue;
                const Parity j = target + i;
                for (const auto& b : part.S_notI[to_int(j)]) {
                    if (table.target(a, b) != o) continue;
                    const Subspace prod = piece_product(alg, {a, i}, {b, j});
                    rows.insert(rows.end(), prod.rows().begin(), prod.rows().end());
                }
            }
        const bool ok = Subspace::span(alg.field(), alg.dim(), rows) == homogeneous_piece(alg, o, target);
        (target == Parity::Even ? out.even_matches : out.odd_matches) = ok;
    }
    return out;
}

}  // namespace sgl
