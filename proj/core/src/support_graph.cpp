#include "sgl/support_graph.hpp"

#include <deque>
#include <numeric>

#include "sgl/errors.hpp"

namespace sgl {

std::string to_string(const Symbol& s) { return (s.tilded ? "~" : "") + s.base; }

Symbol parse_symbol(const std::string& text) {
    if (!text.empty() && text[0] == '~') return tilded(text.substr(1));
    return plain(text);
}

Support support(const Algebra& alg) {
    Support s;
    for (const auto& b : alg.basis()) {
        s.all.insert(b.label);
        (b.parity == Parity::Even ? s.even : s.odd).insert(b.label);
    }
    return s;
}

StarTable::StarTable(const Algebra& alg) : distinguished_(alg.distinguished()) {
    for (const auto& b : alg.basis()) labels_.insert(b.label);
    for (const auto& a : labels_)
        for (const auto& b : labels_) {
            auto t = product_target_labels(alg, a, b);
            if (t.size() > 1) throw PreconditionError("not a set grading: [L_" + a + ", L_" + b + "] spans several components");
            if (t.empty()) continue;
            target_[{a, b}] = *t.begin();
            preimage_[{*t.begin(), b}].insert(a);
        }
}

std::vector<Symbol> StarTable::all_symbols() const {
    std::vector<Symbol> out;
    for (const auto& l : labels_) out.push_back(plain(l));
    for (const auto& l : labels_) out.push_back(tilded(l));
    return out;
}

std::optional<std::string> StarTable::target(const std::string& a, const std::string& b) const {
    auto it = target_.find({a, b});
    if (it == target_.end()) return std::nullopt;
    return it->second;
}

LabelSet StarTable::star(const Symbol& x, const Symbol& y) const {
    if (x.tilded && y.tilded) return {};
    if (!x.tilded && !y.tilded) {
        auto t = target(x.base, y.base);
        return t ? LabelSet{*t} : LabelSet{};
    }
    // One plain symbol (the target side) and one tilde symbol (the right factor).
    const Symbol& p = x.tilded ? y : x;
    const Symbol& q = x.tilded ? x : y;
    auto it = preimage_.find({p.base, q.base});
    return it == preimage_.end() ? LabelSet{} : it->second;
}

SymbolSet StarTable::phi(const SymbolSet& u, const Symbol& r) const {
    SymbolSet out;
    for (const auto& x : u)
        for (const auto& c : star(x, r)) {
            if (distinguished_ && c == *distinguished_) continue;
            out.insert(plain(c));
            out.insert(tilded(c));
        }
    return out;
}

namespace {

void require_endpoint(const StarTable& t, const std::string& a) {
    if (!t.labels().contains(a)) throw PreconditionError("label '" + a + "' is not in the support");
    if (t.distinguished() && *t.distinguished() == a)
        throw PreconditionError("label '" + a + "' is the distinguished element");
}

}  // namespace

bool verify_connection(const StarTable& table, const std::string& a, const std::string& b, const Chain& chain) {
    if (chain.empty()) return false;
    if (chain.size() == 1) return a == b && chain[0] == plain(a);
    if (!(chain[0] == plain(a) || chain[0] == tilded(a))) return false;
    SymbolSet cur{chain[0]};
    for (std::size_t k = 1; k < chain.size(); ++k) {
        cur = table.phi(cur, chain[k]);
        if (k + 1 < chain.size() && cur.empty()) return false;
    }
    return cur.contains(plain(b));
}

std::optional<Chain> is_connected(const StarTable& table, const std::string& a, const std::string& b) {
    require_endpoint(table, a);
    require_endpoint(table, b);
    if (a == b) return Chain{plain(a)};

    // BFS over single symbols; phi distributes over unions, so a chain for a
    // symbol extends to a chain for anything one phi step away from it.
    struct Origin {
        Symbol parent;
        Symbol via;
        bool root;
    };
    std::map<Symbol, Origin> seen;
    std::deque<Symbol> queue;
    for (const auto& s : {plain(a), tilded(a)}) {
        seen.emplace(s, Origin{s, s, true});
        queue.push_back(s);
    }
    const auto symbols = table.all_symbols();
    while (!queue.empty()) {
        Symbol s = queue.front();
        queue.pop_front();
        for (const auto& r : symbols)
            for (const auto& t : table.phi({s}, r)) {
                if (seen.contains(t)) continue;
                seen.emplace(t, Origin{s, r, false});
                if (t == plain(b)) {
                    Chain rev;
                    Symbol cur = t;
                    while (!seen.at(cur).root) {
                        rev.push_back(seen.at(cur).via);
                        cur = seen.at(cur).parent;
                    }
                    rev.push_back(cur);
                    Chain chain(rev.rbegin(), rev.rend());
                    if (!verify_connection(table, a, b, chain)) throw InternalError("reconstructed connection fails re-verification");
                    return chain;
                }
                queue.push_back(t);
            }
    }
    return std::nullopt;
}

std::optional<Chain> is_connected(const Algebra& alg, const std::string& a, const std::string& b) {
    return is_connected(StarTable(alg), a, b);
}

LabelSet reachable_labels(const StarTable& table, const std::string& a) {
    require_endpoint(table, a);
    SymbolSet closure{plain(a), tilded(a)};
    const auto symbols = table.all_symbols();
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& r : symbols)
            for (const auto& t : table.phi(closure, r)) grew |= closure.insert(t).second;
    }
    LabelSet out{a};
    for (const auto& s : closure)
        if (!s.tilded) out.insert(s.base);
    return out;
}

ConnectionAnalysis analyze_connections(const Algebra& alg) {
    StarTable table(alg);
    std::vector<std::string> nodes;
    for (const auto& l : table.labels())
        if (!(alg.distinguished() && *alg.distinguished() == l)) nodes.push_back(l);

    std::map<std::string, LabelSet> reach;
    for (const auto& a : nodes) reach[a] = reachable_labels(table, a);

    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = i;
    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    ConnectionAnalysis out;
    for (const auto& a : nodes)
        for (const auto& b : reach[a]) {
            parent[find(pos[a])] = find(pos[b]);
            if (!reach[b].contains(a)) out.one_way_pairs.emplace_back(a, b);
        }
    out.symmetric = out.one_way_pairs.empty();

    std::map<std::size_t, LabelSet> groups;
    for (const auto& a : nodes) groups[find(pos[a])].insert(a);
    for (auto& [root, members] : groups) out.classes.push_back({*members.begin(), std::move(members)});
    std::sort(out.classes.begin(), out.classes.end(),
              [](const ConnectionClass& x, const ConnectionClass& y) { return x.representative < y.representative; });
    return out;
}

std::vector<ConnectionClass> connection_classes(const Algebra& alg) { return analyze_connections(alg).classes; }

}  // namespace sgl
