#include "af/serialize.hpp"

#include <stdexcept>

namespace af {

namespace {
Json coeff_list(const Field& f, uint16_t code) {
    Json a = Json::array();
    for (uint16_t c : f.unpack(code)) a.push_back(c);
    return a;
}

uint16_t code_from_list(const Field& f, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("serialize: coefficient list expected");
    std::vector<uint16_t> c;
    for (auto& v : j) c.push_back(v.get<uint16_t>());
    return f.pack(c);
}
}  // namespace

Json field_json(const Field& f) {
    Json j;
    j["p"] = f.p;
    j["k"] = f.k;
    Json mod = Json::array();
    for (uint16_t c : f.modulus) mod.push_back(c);
    j["modulus"] = mod;
    return j;
}

Json fe_json(const Fe& x) {
    Json j;
    j["p"] = x.f->p;
    j["k"] = x.f->k;
    j["coeffs"] = coeff_list(*x.f, x.v);
    return j;
}

Fe fe_from_json(const Json& j) {
    const Field& f = field_make(j.at("p").get<int>(), j.at("k").get<int>());
    return Fe(code_from_list(f, j.at("coeffs")), f);
}

Json oct_json(const Octonion& x) {
    Json coeffs = Json::array();
    for (int i = 0; i < 8; ++i) coeffs.push_back(coeff_list(*x.f, x.c[i]));
    Json j;
    j["coeffs"] = coeffs;
    return j;
}

Octonion oct_from_json(const Json& j, const Field& f) {
    const Json& coeffs = j.is_array() ? j : j.at("coeffs");
    if (coeffs.size() != 8) throw std::invalid_argument("serialize: octonion needs 8 coefficients");
    Octonion x(f);
    for (int i = 0; i < 8; ++i) x.c[i] = code_from_list(f, coeffs[i]);
    return x;
}

Json albert_json(const AlbertVector& X) {
    const Field& f = *X.f;
    Json j;
    j["p"] = f.p;
    j["k"] = f.k;
    j["a"] = coeff_list(f, X.x[0]);
    j["b"] = coeff_list(f, X.x[1]);
    j["c"] = coeff_list(f, X.x[2]);
    for (auto [name, base] : {std::pair<const char*, int>{"A", 3}, {"B", 11}, {"C", 19}}) {
        Json arr = Json::array();
        for (int i = 0; i < 8; ++i) arr.push_back(coeff_list(f, X.x[base + i]));
        j[name] = arr;
    }
    return j;
}

AlbertVector albert_from_json(const Json& j) {
    const Field& f = field_make(j.at("p").get<int>(), j.at("k").get<int>());
    AlbertVector X(f);
    X.x[0] = code_from_list(f, j.at("a"));
    X.x[1] = code_from_list(f, j.at("b"));
    X.x[2] = code_from_list(f, j.at("c"));
    for (auto [name, base] : {std::pair<const char*, int>{"A", 3}, {"B", 11}, {"C", 19}}) {
        const Json& arr = j.at(name);
        if (arr.size() != 8) throw std::invalid_argument("serialize: octonion needs 8 coefficients");
        for (int i = 0; i < 8; ++i) X.x[base + i] = code_from_list(f, arr[i]);
    }
    return X;
}

Json op_json(const LinearOp27& op) {
    const Field& f = *op.f;
    Json j;
    j["p"] = f.p;
    j["k"] = f.k;
    Json rows = Json::array();
    for (int r = 0; r < 27; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 27; ++c) row.push_back(coeff_list(f, op.at(r, c)));
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

LinearOp27 op_from_json(const Json& j) {
    const Field& f = field_make(j.at("p").get<int>(), j.at("k").get<int>());
    const Json& rows = j.at("rows");
    if (rows.size() != 27) throw std::invalid_argument("serialize: operator needs 27 rows");
    std::vector<uint16_t> m(27 * 27);
    for (int r = 0; r < 27; ++r) {
        if (rows[r].size() != 27) throw std::invalid_argument("serialize: operator rows need 27 entries");
        for (int c = 0; c < 27; ++c) m[static_cast<size_t>(r) * 27 + c] = code_from_list(f, rows[r][c]);
    }
    return LinearOp27(std::move(m), f);
}

Json generator_json(const Generator& g) {
    const Field& f = *g.f;
    Json j;
    j["kind"] = gen_kind_name(g.kind);
    j["p"] = f.p;
    j["k"] = f.k;
    switch (g.kind) {
        case GenKind::Transvection:
            j["row"] = g.row;
            j["col"] = g.col;
            j["x"] = oct_json(g.x);
            break;
        case GenKind::Diagonal:
            j["slot"] = g.slot;
            j["u"] = oct_json(g.x);
            break;
        case GenKind::F4Rotation:
            j["pair"] = g.pair;
            j["x"] = oct_json(g.x);
            break;
        case GenKind::TwistedTransvection:
            j["pair"] = g.pair;
            j["eidx"] = g.eidx;
            j["lambda"] = coeff_list(f, g.lambda);
            break;
        case GenKind::TwistedDiagonal:
            j["a"] = coeff_list(f, g.sa);
            break;
        case GenKind::TwistedBlock:
            j["pair"] = g.pair;
            j["a"] = coeff_list(f, g.sa);
            j["b"] = coeff_list(f, g.sb);
            break;
        default:
            break;
    }
    return j;
}

}  // namespace af
