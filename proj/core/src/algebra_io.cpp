#include "sgl/algebra_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "sgl/errors.hpp"

namespace sgl {

namespace {

const ojson& member(const ojson& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where, "missing key '" + key + "'");
    return *it;
}

std::string string_at(const ojson& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where, "expected a string");
    return v.get<std::string>();
}

Field parse_field(const ojson& v) {
    const std::string where = "$.field";
    if (v.is_string()) {
        if (v.get<std::string>() == "Q") return Field::rationals();
        throw ParseError(where, "unknown field '" + v.get<std::string>() + "'");
    }
    const ojson& p = member(v, "GF", where);
    if (!p.is_number_unsigned()) throw ParseError(where + ".GF", "expected a positive integer");
    try {
        return Field::prime(p.get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ".GF", e.what());
    }
}

}  // namespace

Algebra algebra_from_json(const ojson& doc) {
    if (!doc.is_object()) throw ParseError("$", "expected an object");
    const Field field = parse_field(member(doc, "field", "$"));

    const ojson& basis_json = member(doc, "basis", "$");
    if (!basis_json.is_array()) throw ParseError("$.basis", "expected an array");
    std::vector<BasisElement> basis;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < basis_json.size(); ++i) {
        const std::string where = "$.basis[" + std::to_string(i) + "]";
        const ojson& b = basis_json[i];
        BasisElement e;
        e.name = string_at(member(b, "name", where), where + ".name");
        e.label = string_at(member(b, "label", where), where + ".label");
        const ojson& par = member(b, "parity", where);
        if (!par.is_number_integer() || (par.get<long long>() != 0 && par.get<long long>() != 1))
            throw ParseError(where + ".parity", "expected 0 or 1");
        e.parity = parity_from_int(par.get<int>());
        if (e.name.empty()) throw ParseError(where + ".name", "empty name");
        if (e.label.empty()) throw ParseError(where + ".label", "empty label");
        if (!index.emplace(e.name, i).second) throw ParseError(where + ".name", "duplicate basis name '" + e.name + "'");
        basis.push_back(std::move(e));
    }

    std::optional<std::string> distinguished;
    if (auto it = doc.find("distinguished"); it != doc.end() && !it->is_null())
        distinguished = string_at(*it, "$.distinguished");

    Algebra alg(field, std::move(basis), distinguished);
    auto resolve = [&](const ojson& v, const std::string& where) {
        const std::string name = string_at(v, where);
        auto it = index.find(name);
        if (it == index.end()) throw ParseError(where, "unknown basis name '" + name + "'");
        return it->second;
    };

    if (auto it = doc.find("products"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("$.products", "expected an array");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t p = 0; p < it->size(); ++p) {
            const std::string where = "$.products[" + std::to_string(p) + "]";
            const ojson& prod = (*it)[p];
            const std::size_t l = resolve(member(prod, "left", where), where + ".left");
            const std::size_t r = resolve(member(prod, "right", where), where + ".right");
            if (!seen.emplace(l, r).second) throw ParseError(where, "duplicate product entry");
            const ojson& result = member(prod, "result", where);
            if (!result.is_array()) throw ParseError(where + ".result", "expected an array");
            Vector v = alg.zero_vector();
            for (std::size_t t = 0; t < result.size(); ++t) {
                const std::string tw = where + ".result[" + std::to_string(t) + "]";
                const std::size_t k = resolve(member(result[t], "basis", tw), tw + ".basis");
                const std::string coeff = string_at(member(result[t], "coeff", tw), tw + ".coeff");
                try {
                    v[k] += field.parse(coeff);
                } catch (const std::exception& e) {
                    throw ParseError(tw + ".coeff", std::string("bad coefficient: ") + e.what());
                }
            }
            alg.set_product(l, r, v);
        }
    }
    return alg;
}

Algebra parse_algebra(std::string_view text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    return algebra_from_json(doc);
}

Algebra load_algebra(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str());
}

ojson algebra_to_json(const Algebra& alg) {
    ojson doc;
    if (alg.field().is_rational()) {
        doc["field"] = "Q";
    } else {
        doc["field"] = ojson{{"GF", alg.field().characteristic()}};
    }
    doc["basis"] = ojson::array();
    for (const auto& b : alg.basis())
        doc["basis"].push_back(ojson{{"name", b.name}, {"label", b.label}, {"parity", to_int(b.parity)}});
    doc["products"] = ojson::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            const auto& terms = alg.product_terms(i, j);
            if (terms.empty()) continue;
            ojson result = ojson::array();
            for (const auto& t : terms) result.push_back(ojson{{"basis", alg.element(t.index).name}, {"coeff", t.coeff.to_string()}});
            doc["products"].push_back(
                ojson{{"left", alg.element(i).name}, {"right", alg.element(j).name}, {"result", std::move(result)}});
        }
    doc["distinguished"] = alg.distinguished() ? ojson(*alg.distinguished()) : ojson(nullptr);
    return doc;
}

std::string emit_algebra(const Algebra& alg) { return algebra_to_json(alg).dump(2) + "\n"; }

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    return out;
}

}  // namespace sgl
