#include "sgl/corpus.hpp"

#include <random>

#include "sgl/errors.hpp"

namespace sgl {

namespace {

struct Entry {
    std::size_t i, j;
    std::vector<std::pair<std::size_t, long long>> terms;
};

Algebra build(Field field, std::vector<BasisElement> basis, const std::vector<Entry>& entries,
              std::optional<std::string> distinguished = std::nullopt) {
    Algebra alg(field, std::move(basis), std::move(distinguished));
    for (const auto& e : entries) {
        Vector v = alg.zero_vector();
        for (auto [k, c] : e.terms) v[k] += field.from_int(c);
        alg.set_product(e.i, e.j, v);
    }
    return alg;
}

BasisElement even(std::string name, std::string label) { return {std::move(name), std::move(label), Parity::Even}; }

Matrix zero_matrix(Field field, std::size_t n) { return Matrix(n, std::vector<Scalar>(n, field.zero())); }

Matrix mat_mul(Field field, const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out = zero_matrix(field, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[r][k].is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (!b[k][c].is_zero()) out[r][c] += a[r][k] * b[k][c];
        }
    return out;
}

Scalar random_unit(Field field, std::mt19937_64& rng) {
    if (field.is_rational()) {
        std::uniform_int_distribution<long long> d(1, 6);
        long long v = d(rng);
        return field.from_int(rng() % 2 ? v : -v);
    }
    std::uniform_int_distribution<long long> d(1, static_cast<long long>(field.characteristic()) - 1);
    return field.from_int(d(rng));
}

void require_valid_output(const Algebra& alg, const std::string& what) {
    auto rep = validate(alg);
    if (!rep.valid()) throw PreconditionError(what + " does not validate: " + rep.violations.front().message);
}

}  // namespace

Algebra gen_abelian(Field field, const std::vector<std::pair<std::string, std::vector<Parity>>>& labels) {
    if (labels.empty()) throw PreconditionError("gen_abelian needs at least one label");
    std::vector<BasisElement> basis;
    for (const auto& [label, parities] : labels)
        for (std::size_t t = 0; t < parities.size(); ++t)
            basis.push_back({label + "_" + std::to_string(t), label, parities[t]});
    return Algebra(field, std::move(basis));
}

Algebra gen_n2_family(std::size_t k, Field field) {
    if (k == 0) throw PreconditionError("gen_n2_family needs k >= 1");
    std::vector<BasisElement> basis;
    std::vector<Entry> entries;
    for (std::size_t c = 0; c < k; ++c) {
        const std::string s = k == 1 ? "" : std::to_string(c + 1);
        basis.push_back(even("x" + s, "a" + s));
        basis.push_back(even("y" + s, "b" + s));
        entries.push_back({2 * c, 2 * c, {{2 * c + 1, 1}}});
    }
    return build(field, std::move(basis), entries);
}

Algebra gen_hemisemidirect(const Algebra& lie, const std::vector<Matrix>& action, Parity module_parity,
                           const std::vector<std::string>& module_labels) {
    const Field field = lie.field();
    const std::size_t n = lie.dim(), m = module_labels.size();
    if (action.size() != n) throw PreconditionError("one action matrix per Lie basis vector is required");
    for (const auto& a : action) {
        if (a.size() != m) throw PreconditionError("action matrix size does not match the module");
        for (const auto& row : a)
            if (row.size() != m) throw PreconditionError("action matrix is not square");
    }
    if (!is_lie_superalgebra(lie) || !validate(lie).valid()) throw PreconditionError("gen_hemisemidirect needs a valid Lie algebra");

    // m.[x,y] = (m.x).y - (m.y).x, i.e. A_[x,y] = A_y A_x - A_x A_y.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix lhs = zero_matrix(field, m);
            for (const auto& t : lie.product_terms(i, j))
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t c = 0; c < m; ++c) lhs[r][c] += t.coeff * action[t.index][r][c];
            Matrix yx = mat_mul(field, action[j], action[i]);
            Matrix xy = mat_mul(field, action[i], action[j]);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < m; ++c)
                    if (!(lhs[r][c] == yx[r][c] - xy[r][c]))
                        throw PreconditionError("action violates the right-module law at (" + lie.element(i).name + ", " +
                                                lie.element(j).name + ")");
        }

    std::vector<BasisElement> basis = lie.basis();
    for (std::size_t k = 0; k < m; ++k) basis.push_back({"m:" + std::to_string(k), module_labels[k], module_parity});
    Algebra out(field, std::move(basis), lie.distinguished());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v = out.zero_vector();
            for (const auto& t : lie.product_terms(i, j)) v[t.index] = t.coeff;
            out.set_product(i, j, v);
        }
    for (std::size_t src = 0; src < m; ++src)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v = out.zero_vector();
            for (std::size_t k = 0; k < m; ++k) v[n + k] = action[j][k][src];
            out.set_product(n + src, j, v);
        }
    require_valid_output(out, "hemisemidirect product");
    return out;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    if (!(a.field() == b.field())) throw MismatchError("direct_sum over different fields");
    std::vector<BasisElement> basis;
    for (auto e : a.basis()) basis.push_back({e.name + "#1", e.label + "#1", e.parity});
    for (auto e : b.basis()) basis.push_back({e.name + "#2", e.label + "#2", e.parity});
    Algebra out(a.field(), std::move(basis));
    auto copy = [&](const Algebra& src, std::size_t off) {
        for (std::size_t i = 0; i < src.dim(); ++i)
            for (std::size_t j = 0; j < src.dim(); ++j) {
                if (src.product_terms(i, j).empty()) continue;
                Vector v = out.zero_vector();
                for (const auto& t : src.product_terms(i, j)) v[off + t.index] = t.coeff;
                out.set_product(off + i, off + j, v);
            }
    };
    copy(a, 0);
    copy(b, a.dim());
    return out;
}

Algebra relabel(const Algebra& alg, const std::map<std::string, std::string>& mapping) {
    auto map_label = [&](const std::string& l) {
        auto it = mapping.find(l);
        return it == mapping.end() ? l : it->second;
    };
    std::vector<BasisElement> basis = alg.basis();
    for (auto& e : basis) e.label = map_label(e.label);
    std::optional<std::string> o;
    if (alg.distinguished()) o = map_label(*alg.distinguished());
    Algebra out(alg.field(), std::move(basis), o);
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            if (!alg.product_terms(i, j).empty()) out.set_product(i, j, alg.product(i, j));
    return out;
}

Algebra rescale(const Algebra& alg, const std::vector<Scalar>& factors) {
    if (factors.size() != alg.dim()) throw PreconditionError("rescale needs one factor per basis vector");
    for (const auto& c : factors)
        if (c.is_zero()) throw PreconditionError("rescale factors must be nonzero");
    Algebra out(alg.field(), alg.basis(), alg.distinguished());
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (alg.product_terms(i, j).empty()) continue;
            Vector v = out.zero_vector();
            for (const auto& t : alg.product_terms(i, j)) v[t.index] = t.coeff * factors[i] * factors[j] / factors[t.index];
            out.set_product(i, j, v);
        }
    return out;
}

Algebra random_rescale(const Algebra& alg, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Scalar> f;
    for (std::size_t i = 0; i < alg.dim(); ++i) f.push_back(random_unit(alg.field(), rng));
    return rescale(alg, f);
}

Perturbed gen_perturb(const Algebra& base, std::size_t edits, std::uint64_t seed) {
    Perturbed out{base, true};
    std::mt19937_64 rng(seed);
    const std::size_t n = base.dim();
    if (n == 0) return out;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t e = 0; e < edits; ++e) {
        const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        Vector v = out.algebra.product(i, j);
        v[k] += random_unit(base.field(), rng);
        out.algebra.set_product(i, j, v);
    }
    out.expected_valid = validate(out.algebra).valid();
    return out;
}

Algebra lie_abelian(Field field, std::size_t n) {
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(even("g" + std::to_string(i + 1), "g" + std::to_string(i + 1)));
    return Algebra(field, std::move(basis));
}

Algebra lie_nonabelian2(Field field) {
    return build(field, {even("e", "e"), even("f", "f")}, {{0, 1, {{1, 1}}}, {1, 0, {{1, -1}}}});
}

Algebra lie_sl2(Field field) {
    // h = 0, e = 1, f = 2
    return build(field, {even("h", "h"), even("e", "e"), even("f", "f")},
                 {{0, 1, {{1, 2}}}, {1, 0, {{1, -2}}}, {0, 2, {{2, -2}}}, {2, 0, {{2, 2}}}, {1, 2, {{0, 1}}}, {2, 1, {{0, -1}}}});
}

Algebra lie_heisenberg(Field field) {
    return build(field, {even("p", "p"), even("q", "q"), even("z", "z")}, {{0, 1, {{2, 1}}}, {1, 0, {{2, -1}}}});
}

Algebra lie_so3(Field field) {
    return build(field, {even("x", "x"), even("y", "y"), even("z", "z")},
                 {{0, 1, {{2, 1}}}, {1, 0, {{2, -1}}}, {1, 2, {{0, 1}}}, {2, 1, {{0, -1}}}, {2, 0, {{1, 1}}}, {0, 2, {{1, -1}}}});
}

std::vector<Matrix> adjoint_action(const Algebra& lie) {
    const std::size_t n = lie.dim();
    std::vector<Matrix> out(n, zero_matrix(lie.field(), n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : lie.product_terms(i, j)) out[j][t.index][i] = t.coeff;
    return out;
}

std::vector<Matrix> zero_action(const Algebra& lie, std::size_t module_dim) {
    return std::vector<Matrix>(lie.dim(), zero_matrix(lie.field(), module_dim));
}

std::vector<Matrix> sl2_irrep_action(Field field, std::size_t n) {
    const std::size_t d = n + 1;
    Matrix h = zero_matrix(field, d), e = zero_matrix(field, d), f = zero_matrix(field, d);
    const auto N = static_cast<long long>(n);
    for (std::size_t k = 0; k < d; ++k) {
        const auto K = static_cast<long long>(k);
        h[k][k] = field.from_int(-(N - 2 * K));
        if (k + 1 < d) f[k + 1][k] = field.from_int(-1);
        if (k > 0) e[k - 1][k] = field.from_int(-K * (N - K + 1));
    }
    return {h, e, f};  // basis order of lie_sl2
}

Algebra gen_line_extension(Field field, const std::vector<std::size_t>& perm, const std::vector<int>& signs,
                           const Scalar& gamma) {
    const std::size_t k = perm.size();
    if (k == 0 || signs.size() != k) throw PreconditionError("line extension needs a nonempty signed permutation");
    for (std::size_t i = 0; i < k; ++i)
        if (perm[i] >= k || perm[perm[i]] != i) throw PreconditionError("line extension permutation must be an involution");
    std::vector<BasisElement> basis{even("x", "x")};
    for (std::size_t i = 0; i < k; ++i) basis.push_back(even("m" + std::to_string(i + 1), "m" + std::to_string(i + 1)));
    Algebra alg(field, std::move(basis));
    Vector xx = alg.zero_vector();
    xx[1] = gamma;
    alg.set_product(0, 0, xx);
    for (std::size_t i = 0; i < k; ++i) {
        Vector v = alg.zero_vector();
        v[1 + perm[i]] = field.from_int(signs[i]);
        alg.set_product(1 + i, 0, v);
    }
    require_valid_output(alg, "line extension");
    return alg;
}

Algebra gen_smult_counterexample(Field field) {
    return build(field,
                 {{"b0", "b", Parity::Even}, {"b1", "b", Parity::Odd}, {"r0", "r", Parity::Even}, {"a0", "a", Parity::Even},
                  {"a1", "a", Parity::Odd}},
                 {{0, 2, {{3, 1}}}});
}

namespace {

const std::vector<std::uint64_t> kTheoremPrimes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

Field field_cycle(std::size_t t, const std::vector<std::uint64_t>& primes) {
    const std::size_t slot = t % (primes.size() + 1);
    return slot == 0 ? Field::rationals() : Field::prime(primes[slot - 1]);
}

std::string fname(Field f) { return f.is_rational() ? "Q" : "GF" + std::to_string(f.characteristic()); }

Algebra so3_adjoint(Field f, Parity p) {
    Algebra g = lie_so3(f);
    return gen_hemisemidirect(g, adjoint_action(g), p, {"m:x", "m:y", "m:z"});
}

}  // namespace

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed) {
    std::vector<CorpusEntry> out;
    std::mt19937_64 rng(seed);
    auto add = [&](std::string name, std::string family, Algebra alg) {
        require_valid_output(alg, name);
        out.push_back({std::move(name), std::move(family), std::move(alg)});
    };

    // Abelian.
    std::vector<Algebra> abelians;
    for (std::size_t t = 0; t < 50; ++t) {
        Field f = field_cycle(t, {2, 3, 5, 7});
        const std::size_t nlabels = 1 + rng() % 4;
        std::vector<std::pair<std::string, std::vector<Parity>>> layout;
        for (std::size_t l = 0; l < nlabels; ++l) {
            std::vector<Parity> ps;
            const std::size_t count = 1 + rng() % 2;
            for (std::size_t c = 0; c < count; ++c) ps.push_back(parity_from_int(static_cast<int>(rng() % 2)));
            layout.emplace_back(std::string(1, static_cast<char>('a' + l)), ps);
        }
        Algebra alg = gen_abelian(f, layout);
        if (t % 4 == 1) alg.set_distinguished(layout.front().first);
        abelians.push_back(alg);
        add("abelian-" + std::to_string(t) + "-" + fname(f), "Abelian", std::move(alg));
    }

    // N2 family.
    for (std::size_t t = 0; t < 50; ++t) {
        Field f = field_cycle(t, {2, 3, 5, 7, 11});
        const std::size_t k = 1 + t % 4;
        Algebra alg = random_rescale(gen_n2_family(k, f), seed * 1000 + t);
        if (t % 3 == 0) alg.set_distinguished(k == 1 ? "b" : "b1");
        add("n2x" + std::to_string(k) + "-" + std::to_string(t) + "-" + fname(f), "N2Family", std::move(alg));
    }

    // Hemisemidirect products over GF(5) and GF(7).
    for (std::uint64_t p : {5, 7}) {
        Field f = Field::prime(p);
        struct Case {
            std::string name;
            Algebra lie;
            std::vector<Matrix> action;
            std::vector<std::string> labels;
        };
        std::vector<Case> cases;
        Algebra ab = lie_abelian(f, 1), na = lie_nonabelian2(f), sl = lie_sl2(f), he = lie_heisenberg(f), so = lie_so3(f);
        cases.push_back({"ab1-adj", ab, adjoint_action(ab), {"m:g1"}});
        cases.push_back({"ab1-zero2", ab, zero_action(ab, 2), {"m:1", "m:2"}});
        cases.push_back({"na2-adj", na, adjoint_action(na), {"m:e", "m:f"}});
        cases.push_back({"na2-zero1", na, zero_action(na, 1), {"m:1"}});
        cases.push_back({"sl2-adj", sl, adjoint_action(sl), {"m:h", "m:e", "m:f"}});
        cases.push_back({"sl2-zero1", sl, zero_action(sl, 1), {"m:1"}});
        cases.push_back({"sl2-V1", sl, sl2_irrep_action(f, 1), {"w:0", "w:1"}});
        cases.push_back({"sl2-V2", sl, sl2_irrep_action(f, 2), {"w:0", "w:1", "w:2"}});
        cases.push_back({"heis-adj", he, adjoint_action(he), {"m:p", "m:q", "m:z"}});
        cases.push_back({"heis-zero1", he, zero_action(he, 1), {"m:1"}});
        cases.push_back({"so3-adj", so, adjoint_action(so), {"m:x", "m:y", "m:z"}});
        cases.push_back({"so3-zero1", so, zero_action(so, 1), {"m:1"}});
        for (const auto& c : cases)
            for (Parity par : kParities)
                add("hsd-" + c.name + (par == Parity::Odd ? "-odd-" : "-even-") + fname(f), "Hemisemidirect",
                    gen_hemisemidirect(c.lie, c.action, par, c.labels));
        for (Parity par : kParities)
            add("hsd-so3-adj-rescaled" + std::string(par == Parity::Odd ? "-odd-" : "-even-") + fname(f), "Hemisemidirect",
                random_rescale(so3_adjoint(f, par), seed * 7 + p));
    }

    // Relabelled variants that merge labels.
    for (std::size_t t = 0; t < 10; ++t) {
        const Algebra& base = abelians[t * 5 % abelians.size()];
        auto labels = base.labels();
        std::map<std::string, std::string> merge;
        if (labels.size() >= 2) merge[labels[1]] = labels[0];
        add("relabel-abelian-" + std::to_string(t), "Relabel", relabel(base, merge));
    }
    for (std::uint64_t p : {0, 3, 5, 7, 11}) {
        Field f = p ? Field::prime(p) : Field::rationals();
        add("relabel-n2x2-" + fname(f), "Relabel", relabel(gen_n2_family(2, f), {{"a1", "a"}, {"a2", "a"}, {"b1", "b"}, {"b2", "b"}}));
    }
    for (std::uint64_t p : {3, 5, 7, 11}) {
        Field f = Field::prime(p);
        add("relabel-n2x3-" + fname(f), "Relabel",
            relabel(gen_n2_family(3, f), {{"a2", "a1"}, {"a3", "a1"}, {"b2", "b1"}, {"b3", "b1"}}));
    }
    for (std::uint64_t p : {5, 7})
        for (Parity par : kParities) {
            Field f = Field::prime(p);
            Algebra ab = lie_abelian(f, 1);
            add("relabel-zero2" + std::string(par == Parity::Odd ? "-odd-" : "-even-") + fname(f), "Relabel",
                relabel(gen_hemisemidirect(ab, zero_action(ab, 2), par, {"m:1", "m:2"}), {{"m:2", "m:1"}}));
        }
    for (std::uint64_t p : {0, 5, 7}) {
        Field f = p ? Field::prime(p) : Field::rationals();
        add("relabel-sl2-ef-" + fname(f), "Relabel", relabel(lie_sl2(f), {{"e", "ef"}, {"f", "ef"}}));
    }
    for (std::uint64_t p : {0, 5, 7, 11}) {
        Field f = p ? Field::prime(p) : Field::rationals();
        add("relabel-so3-xy-" + fname(f), "Relabel", relabel(lie_so3(f), {{"x", "xy"}, {"y", "xy"}}));
    }

    // Maximal-length family meeting every hypothesis of the simplicity criterion.
    for (std::size_t t = 0; t <= kTheoremPrimes.size(); ++t) {
        Field f = field_cycle(t, kTheoremPrimes);
        for (Parity par : kParities)
            add("so3adj" + std::string(par == Parity::Odd ? "-odd-" : "-even-") + fname(f), "TheoremFamily",
                random_rescale(so3_adjoint(f, par), seed * 31 + t * 2 + static_cast<std::uint64_t>(to_int(par))));
    }
    for (std::uint64_t p : {0, 5, 7}) {
        Field f = p ? Field::prime(p) : Field::rationals();
        add("so3adj-pair-" + fname(f), "TheoremFamily", direct_sum(so3_adjoint(f, Parity::Even), so3_adjoint(f, Parity::Odd)));
    }

    // Line extensions: one label outside frak_I.
    for (std::uint64_t p : {0, 3, 5, 7, 11}) {
        Field f = p ? Field::prime(p) : Field::rationals();
        add("line-k1p-" + fname(f), "LineExtension", gen_line_extension(f, {0}, {1}, f.one()));
        add("line-k1m-" + fname(f), "LineExtension", gen_line_extension(f, {0}, {-1}, f.one()));
        add("line-k2pp-" + fname(f), "LineExtension", gen_line_extension(f, {1, 0}, {1, 1}, f.one()));
        add("line-k2pm-" + fname(f), "LineExtension", gen_line_extension(f, {1, 0}, {1, -1}, f.from_int(2)));
    }

    // Special instances.
    for (std::uint64_t p : {0, 5, 7}) {
        Field f = p ? Field::prime(p) : Field::rationals();
        Algebra sl = lie_sl2(f);
        sl.set_distinguished("h");
        add("sl2-o-h-" + fname(f), "Special", std::move(sl));
    }
    add("so3-Q", "Special", lie_so3(Field::rationals()));
    add("smult-counterexample-Q", "Special", gen_smult_counterexample(Field::rationals()));
    add("smult-counterexample-GF5", "Special", gen_smult_counterexample(Field::prime(5)));
    {
        Algebra na = lie_nonabelian2(Field::rationals());
        add("hsd-na2-adj-even-Q", "Special", gen_hemisemidirect(na, adjoint_action(na), Parity::Even, {"m:e", "m:f"}));
    }
    return out;
}

std::vector<PerturbedEntry> perturbed_corpus(std::uint64_t seed, std::size_t count) {
    std::vector<PerturbedEntry> out;
    std::vector<CorpusEntry> bases;
    for (auto& e : standard_corpus(seed)) {
        bool nonzero = false;
        for (std::size_t i = 0; i < e.algebra.dim() && !nonzero; ++i)
            for (std::size_t j = 0; j < e.algebra.dim() && !nonzero; ++j) nonzero = !e.algebra.product_terms(i, j).empty();
        if (nonzero && e.algebra.dim() <= 8 && e.algebra.field().characteristic() != 2) bases.push_back(std::move(e));
    }
    for (std::uint64_t t = 0; out.size() < count && t < 100 * count; ++t) {
        const auto& base = bases[t % bases.size()];
        Perturbed p = gen_perturb(base.algebra, 1 + t % 2, seed * 977 + t);
        if (p.expected_valid) continue;
        out.push_back({"perturb-" + std::to_string(t) + "-" + base.name, std::move(p)});
    }
    return out;
}

}  // namespace sgl
