#include "gtmm/io.hpp"

#include <cstdio>
#include <sstream>

namespace gtmm {

json spec_to_json(const GroupSpec& spec) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbelianSpec>) {
                return json{{"type", "abelian"}, {"moduli", s.moduli}};
            } else if constexpr (std::is_same_v<T, SymSpec>) {
                json j{{"type", "sym"}};
                if (s.index.triangle_n)
                    j["triangle"] = *s.index.triangle_n;
                else
                    j["n"] = s.index.size;
                return j;
            } else if constexpr (std::is_same_v<T, WreathSpec>) {
                json j{{"type", "wreath"},
                       {"base", json{{"type", "abelian"}, {"moduli", s.base.moduli}}}};
                if (s.index.triangle_n)
                    j["triangle"] = *s.index.triangle_n;
                else
                    j["index"] = s.index.size;
                return j;
            } else {
                return json{{"type", "product"},
                            {"parts", json::array({spec_to_json(s.parts[0]),
                                                   spec_to_json(s.parts[1])})}};
            }
        },
        spec.value);
}

namespace {

IndexSet index_from_json(const json& j, const char* size_key) {
    IndexSet idx;
    if (j.contains("triangle")) {
        const int n = j.at("triangle").get<int>();
        if (n < 1) throw StructuralError("triangle parameter must be >= 1");
        idx.triangle_n = n;
        idx.size = static_cast<std::size_t>(n) * (n + 1) / 2;
    } else {
        idx.size = j.at(size_key).get<std::size_t>();
    }
    return idx;
}

AbelianSpec abelian_from_json(const json& j) {
    if (j.at("type").get<std::string>() != "abelian")
        throw StructuralError("expected an abelian group spec");
    AbelianSpec s{j.at("moduli").get<std::vector<std::int64_t>>()};
    for (auto m : s.moduli)
        if (m < 1) throw StructuralError("abelian modulus must be >= 1");
    return s;
}

} // namespace

GroupSpec spec_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "abelian") return GroupSpec{abelian_from_json(j)};
    if (type == "sym") return GroupSpec{SymSpec{index_from_json(j, "n")}};
    if (type == "wreath")
        return GroupSpec{WreathSpec{abelian_from_json(j.at("base")), index_from_json(j, "index")}};
    if (type == "product") {
        const auto& parts = j.at("parts");
        if (!parts.is_array() || parts.size() != 2)
            throw StructuralError("product spec needs exactly two parts");
        return GroupSpec{ProductSpec{{spec_from_json(parts[0]), spec_from_json(parts[1])}}};
    }
    throw StructuralError("unknown group spec type: " + type);
}

json element_to_json(const GroupSpec& spec, const GroupElement& e) {
    return std::visit(
        [&](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AbelianVec>) {
                return json(v);
            } else if constexpr (std::is_same_v<T, Perm>) {
                return json(v.map);
            } else if constexpr (std::is_same_v<T, WreathElement>) {
                const auto* ws = std::get_if<WreathSpec>(&spec.value);
                if (!ws) throw StructuralError("wreath element under non-wreath spec");
                const std::size_t r = ws->base.arity();
                json h = json::array();
                for (std::size_t i = 0; i < ws->index.size; ++i) {
                    json row = json::array();
                    for (std::size_t c = 0; c < r; ++c) row.push_back(v.h[i * r + c]);
                    h.push_back(std::move(row));
                }
                return json{{"pi", v.pi.map}, {"h", std::move(h)}};
            } else {
                const auto* ps = std::get_if<ProductSpec>(&spec.value);
                if (!ps) throw StructuralError("pair element under non-product spec");
                return json::array({element_to_json(ps->parts[0], v.parts[0]),
                                    element_to_json(ps->parts[1], v.parts[1])});
            }
        },
        e.value);
}

GroupElement element_from_json(const GroupSpec& spec, const json& j) {
    GroupElement e = std::visit(
        [&](const auto& s) -> GroupElement {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AbelianSpec>) {
                return GroupElement{j.get<AbelianVec>()};
            } else if constexpr (std::is_same_v<T, SymSpec>) {
                return GroupElement{Perm{j.get<std::vector<std::uint32_t>>()}};
            } else if constexpr (std::is_same_v<T, WreathSpec>) {
                WreathElement w;
                w.pi.map = j.at("pi").get<std::vector<std::uint32_t>>();
                const auto rows = j.at("h").get<std::vector<AbelianVec>>();
                for (const auto& row : rows) w.h.insert(w.h.end(), row.begin(), row.end());
                return GroupElement{std::move(w)};
            } else {
                if (!j.is_array() || j.size() != 2)
                    throw StructuralError("pair element must be a two-entry array");
                return GroupElement{PairElement{{element_from_json(s.parts[0], j[0]),
                                                 element_from_json(s.parts[1], j[1])}}};
            }
        },
        spec.value);
    Group(spec).validate(e);
    return e;
}

namespace {

json subset_to_json(const GroupSpec& spec, const std::vector<GroupElement>& s) {
    json out = json::array();
    for (const auto& e : s) out.push_back(element_to_json(spec, e));
    return out;
}

std::vector<GroupElement> subset_from_json(const GroupSpec& spec, const json& j) {
    std::vector<GroupElement> out;
    for (const auto& e : j) out.push_back(element_from_json(spec, e));
    return out;
}

} // namespace

json triple_to_json(const SubsetTriple& t) {
    return json{{"group", spec_to_json(t.group)},
                {"S1", subset_to_json(t.group, t.s1)},
                {"S2", subset_to_json(t.group, t.s2)},
                {"S3", subset_to_json(t.group, t.s3)}};
}

SubsetTriple triple_from_json(const json& j) {
    GroupSpec spec = spec_from_json(j.at("group"));
    return make_triple(spec, subset_from_json(spec, j.at("S1")),
                       subset_from_json(spec, j.at("S2")), subset_from_json(spec, j.at("S3")));
}

json pair_family_to_json(const SubsetPairFamily& f) {
    json pairs = json::array();
    for (const auto& p : f.pairs)
        pairs.push_back(json{{"A", subset_to_json(f.group, p.a)},
                             {"B", subset_to_json(f.group, p.b)}});
    return json{{"group", spec_to_json(f.group)}, {"pairs", std::move(pairs)}};
}

SubsetPairFamily pair_family_from_json(const json& j) {
    GroupSpec spec = spec_from_json(j.at("group"));
    std::vector<SubsetPair> pairs;
    for (const auto& p : j.at("pairs"))
        pairs.push_back(SubsetPair{subset_from_json(spec, p.at("A")),
                                   subset_from_json(spec, p.at("B"))});
    return make_pair_family(std::move(spec), std::move(pairs));
}

json triple_family_to_json(const SubsetTripleFamily& f) {
    json triples = json::array();
    for (const auto& t : f.triples)
        triples.push_back(json{{"A", subset_to_json(f.group, t.a)},
                               {"B", subset_to_json(f.group, t.b)},
                               {"C", subset_to_json(f.group, t.c)}});
    return json{{"group", spec_to_json(f.group)}, {"triples", std::move(triples)}};
}

SubsetTripleFamily triple_family_from_json(const json& j) {
    GroupSpec spec = spec_from_json(j.at("group"));
    std::vector<TripleEntry> triples;
    for (const auto& t : j.at("triples"))
        triples.push_back(TripleEntry{subset_from_json(spec, t.at("A")),
                                      subset_from_json(spec, t.at("B")),
                                      subset_from_json(spec, t.at("C"))});
    return make_triple_family(std::move(spec), std::move(triples));
}

json chart_to_json(const Chart& c) {
    GroupSpec spec{c.group};
    auto map_to_json = [&](const std::map<int, std::vector<AbelianVec>>& m) {
        json out = json::object();
        for (const auto& [symbol, vecs] : m) out[std::to_string(symbol)] = json(vecs);
        return out;
    };
    return json{{"group", spec_to_json(spec)},
                {"symbols", c.symbols},
                {"A", map_to_json(c.a)},
                {"B", map_to_json(c.b)},
                {"C", map_to_json(c.c)}};
}

Chart chart_from_json(const json& j) {
    AbelianSpec group = abelian_from_json(j.at("group"));
    auto symbols = j.at("symbols").get<std::vector<int>>();
    auto map_from_json = [&](const json& m) {
        std::map<int, std::vector<AbelianVec>> out;
        for (auto it = m.begin(); it != m.end(); ++it)
            out[std::stoi(it.key())] = it.value().get<std::vector<AbelianVec>>();
        return out;
    };
    return make_chart_checked(std::move(group), std::move(symbols), map_from_json(j.at("A")),
                              map_from_json(j.at("B")), map_from_json(j.at("C")));
}

json witness_to_json(const GroupSpec* spec, const Witness& w) {
    json out{{"property", w.property}};
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ProductWitness>) {
                out["indices"] = v.indices;
                json factors = json::array();
                for (const auto& f : v.factors) {
                    if (spec)
                        factors.push_back(json{{"numer", element_to_json(*spec, f.numer)},
                                               {"denom", element_to_json(*spec, f.denom)}});
                }
                out["factors"] = std::move(factors);
            } else if constexpr (std::is_same_v<T, PermTripleWitness>) {
                out["pi1"] = v.pi1;
                out["pi2"] = v.pi2;
                out["pi3"] = v.pi3;
            } else {
                out["u"] = v.u;
                out["v"] = v.v;
                out["w"] = v.w;
            }
        },
        w.data);
    return out;
}

json bound_to_json(const OmegaBound& b) {
    json out{{"value", rounded(b.value)},
             {"form", b.form},
             {"inputs", b.inputs},
             {"residual", rounded(b.residual)},
             {"residual_minus", rounded(b.residual_minus)},
             {"residual_plus", rounded(b.residual_plus)},
             {"bracket", json::array({rounded(b.bracket_lo), rounded(b.bracket_hi)})},
             {"capped", b.capped},
             {"floored", b.floored},
             {"conditional", b.conditional},
             {"sound", b.sound()}};
    if (!b.crossings.empty()) {
        json c = json::array();
        for (double x : b.crossings) c.push_back(rounded(x));
        out["crossings"] = std::move(c);
    }
    if (!b.note.empty()) out["note"] = b.note;
    return out;
}

IntMatrix matrix_from_csv(const std::string& text) {
    std::vector<std::vector<std::int64_t>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::int64_t> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stoll(cell));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw StructuralError("empty matrix");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols) throw StructuralError("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::string matrix_to_csv(const IntMatrix& m) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (c) out << ',';
            out << m.at(r, c);
        }
        out << '\n';
    }
    return out.str();
}

double round_sig12(double v) {
    if (v == 0 || !std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

json rounded(double v) { return json(round_sig12(v)); }

} // namespace gtmm
