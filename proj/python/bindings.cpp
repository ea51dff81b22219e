// Python bindings for the core operations: field construction, octonion
// and 27-space arithmetic, generators and certificates, censuses, orbits
// and the order-identity reports.  Reports cross the boundary as plain
// dicts/lists mirroring the CLI JSON schema.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "af/orbits.hpp"
#include "af/reports.hpp"
#include "af/serialize.hpp"

namespace py = pybind11;
using namespace af;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<int64_t>());
        case Json::value_t::number_unsigned: return py::int_(j.get<uint64_t>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default: return py::none();
    }
}

Json py_to_json(const py::handle& h) {
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) return h.cast<int64_t>();
    if (py::isinstance<py::float_>(h)) return h.cast<double>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        Json a = Json::array();
        for (auto e : h) a.push_back(py_to_json(e));
        return a;
    }
    if (py::isinstance<py::dict>(h)) {
        Json o = Json::object();
        for (auto item : h.cast<py::dict>())
            o[item.first.cast<std::string>()] = py_to_json(item.second);
        return o;
    }
    throw py::type_error("unsupported value in JSON conversion");
}

Octonion oct_from_codes(const Field& f, const std::vector<uint16_t>& c) {
    if (c.size() != 8) throw py::value_error("octonion needs 8 coefficient codes");
    Octonion x(f);
    for (int i = 0; i < 8; ++i) x.c[i] = c[i];
    return x;
}

std::vector<uint16_t> oct_codes(const Octonion& x) {
    return std::vector<uint16_t>(x.c.begin(), x.c.end());
}

AlbertVector alb_from_codes(const Field& f, const std::vector<uint16_t>& c) {
    if (c.size() != 27) throw py::value_error("vector needs 27 coordinate codes");
    AlbertVector X(f);
    for (int i = 0; i < 27; ++i) X.x[i] = c[i];
    return X;
}

std::vector<uint16_t> alb_codes(const AlbertVector& X) {
    return std::vector<uint16_t>(X.x.begin(), X.x.end());
}

LinearOp27 op_from_rows(const Field& f, const std::vector<std::vector<uint16_t>>& rows) {
    if (rows.size() != 27) throw py::value_error("operator needs 27 rows");
    std::vector<uint16_t> m(27 * 27);
    for (int r = 0; r < 27; ++r) {
        if (rows[r].size() != 27) throw py::value_error("operator rows need 27 entries");
        for (int c = 0; c < 27; ++c) m[static_cast<size_t>(r) * 27 + c] = rows[r][c];
    }
    return LinearOp27(std::move(m), f);
}

std::vector<std::vector<uint16_t>> op_rows(const LinearOp27& op) {
    std::vector<std::vector<uint16_t>> rows(27, std::vector<uint16_t>(27));
    for (int r = 0; r < 27; ++r)
        for (int c = 0; c < 27; ++c) rows[r][c] = op.at(r, c);
    return rows;
}

Generator generator_from_descriptor(const Field& f, const py::dict& d) {
    std::string kind = d["kind"].cast<std::string>();
    if (kind == "transvection")
        return Generator::transvection(d["row"].cast<int>(), d["col"].cast<int>(),
                                       oct_from_codes(f, d["x"].cast<std::vector<uint16_t>>()));
    if (kind == "cyclic_perm") return Generator::cyclic_perm(f);
    if (kind == "swap_perm") return Generator::swap_perm(f);
    if (kind == "diagonal")
        return Generator::diagonal(oct_from_codes(f, d["u"].cast<std::vector<uint16_t>>()),
                                   d["slot"].cast<int>());
    if (kind == "f4_rotation")
        return Generator::f4_rotation(d["pair"].cast<int>(),
                                      oct_from_codes(f, d["x"].cast<std::vector<uint16_t>>()));
    if (kind == "twisted_transvection")
        return Generator::twisted_transvection(d["pair"].cast<int>(), d["eidx"].cast<int>(),
                                               d["lambda"].cast<uint16_t>(), f);
    if (kind == "twisted_diagonal")
        return Generator::twisted_diagonal(d["a"].cast<uint16_t>(), f);
    if (kind == "twisted_block")
        return Generator::twisted_block(d["pair"].cast<int>(), d["a"].cast<uint16_t>(),
                                        d["b"].cast<uint16_t>(), f);
    throw py::value_error("unknown generator kind " + kind);
}

}  // namespace

PYBIND11_MODULE(_albert_forge, m) {
    m.doc() = "split octonions, the Dickson-Freudenthal cubic form, and the groups preserving it";

    // ---- fields ----
    m.def("field_make", [](int p, int k) {
        const Field& f = field_make(p, k);
        return json_to_py(field_json(f));
    }, py::arg("p"), py::arg("k"), "interned field GF(p^k) with the lex-least modulus");
    m.def("field_add", [](int p, int k, uint16_t a, uint16_t b) { return field_make(p, k).add(a, b); });
    m.def("field_mul", [](int p, int k, uint16_t a, uint16_t b) { return field_make(p, k).mul(a, b); });
    m.def("field_inv", [](int p, int k, uint16_t a) { return field_make(p, k).inv(a); });
    m.def("field_neg", [](int p, int k, uint16_t a) { return field_make(p, k).neg(a); });
    m.def("field_pow", [](int p, int k, uint16_t a, uint64_t e) { return field_make(p, k).pow(a, e); });
    m.def("conj_q", [](int p, int k, uint16_t a) { return field_make(p, k).conjq(a); });

    // ---- octonions (coefficient-code lists in the canonical index order) ----
    m.def("oct_mul", [](int p, int k, std::vector<uint16_t> x, std::vector<uint16_t> y) {
        const Field& f = field_make(p, k);
        return oct_codes(oct_mul(oct_from_codes(f, x), oct_from_codes(f, y)));
    });
    m.def("oct_conj", [](int p, int k, std::vector<uint16_t> x) {
        const Field& f = field_make(p, k);
        return oct_codes(oct_conj(oct_from_codes(f, x)));
    });
    m.def("oct_trace", [](int p, int k, std::vector<uint16_t> x) {
        const Field& f = field_make(p, k);
        return oct_trace(oct_from_codes(f, x)).v;
    });
    m.def("oct_norm", [](int p, int k, std::vector<uint16_t> x) {
        const Field& f = field_make(p, k);
        return oct_norm(oct_from_codes(f, x)).v;
    });
    m.def("oct_bilinear", [](int p, int k, std::vector<uint16_t> x, std::vector<uint16_t> y) {
        const Field& f = field_make(p, k);
        return oct_bilinear(oct_from_codes(f, x), oct_from_codes(f, y)).v;
    });
    m.def("oct_prime", [](int p, int k, std::vector<uint16_t> x) {
        const Field& f = field_make(p, k);
        return oct_codes(oct_prime(oct_from_codes(f, x)));
    });
    m.def("count_isotropic", [](int p, int k) { return count_isotropic(field_make(p, k)); });

    // ---- the 27-space (coordinate-code lists, canonical order) ----
    m.def("alb_trace", [](int p, int k, std::vector<uint16_t> x) {
        return alb_trace(alb_from_codes(field_make(p, k), x)).v;
    });
    m.def("alb_q_form", [](int p, int k, std::vector<uint16_t> x) {
        return alb_Q(alb_from_codes(field_make(p, k), x)).v;
    });
    m.def("alb_det", [](int p, int k, std::vector<uint16_t> x) {
        return alb_det(alb_from_codes(field_make(p, k), x)).v;
    });
    m.def("classify_color", [](int p, int k, std::vector<uint16_t> x) {
        return std::string(color_name(classify_color(alb_from_codes(field_make(p, k), x))));
    });
    m.def("trilinear_det",
          [](int p, int k, std::vector<uint16_t> x, std::vector<uint16_t> y, std::vector<uint16_t> z) {
              const Field& f = field_make(p, k);
              return trilinear_det(alb_from_codes(f, x), alb_from_codes(f, y), alb_from_codes(f, z)).v;
          });
    m.def("jordan_mul", [](int p, int k, std::vector<uint16_t> x, std::vector<uint16_t> y) {
        const Field& f = field_make(p, k);
        return alb_codes(jordan_mul(alb_from_codes(f, x), alb_from_codes(f, y)));
    });
    m.def("dickson_translate", [](int p, int k, std::vector<uint16_t> x) {
        auto v = dickson_translate(alb_from_codes(field_make(p, k), x));
        return std::vector<uint16_t>(v.begin(), v.end());
    });
    m.def("dickson_cubic", [](int p, int k, std::vector<uint16_t> vars) {
        if (vars.size() != 27) throw py::value_error("dickson needs 27 variable codes");
        std::array<uint16_t, 27> a{};
        std::copy(vars.begin(), vars.end(), a.begin());
        return dickson_cubic(a, field_make(p, k)).v;
    });
    m.def("hermitian_form", [](int p, int k, std::vector<uint16_t> x, const std::string& variant) {
        const Field& f = field_make(p, k);
        HermitianVariant v =
            variant == "aschbacher" ? HermitianVariant::Aschbacher : HermitianVariant::H1;
        return hermitian_form(alb_from_codes(f, x), v).v;
    }, py::arg("p"), py::arg("k"), py::arg("x"), py::arg("variant") = "h1");
    m.def("twoE6_point_type", [](int p, int k, std::vector<uint16_t> x) {
        return std::string(twoE6_type_name(twoE6_point_type(alb_from_codes(field_make(p, k), x))));
    });

    // ---- generators and operators ----
    m.def("make_generator", [](int p, int k, py::dict descriptor) {
        const Field& f = field_make(p, k);
        return op_rows(generator_from_descriptor(f, descriptor).op());
    });
    m.def("preserves_det", [](int p, int k, std::vector<std::vector<uint16_t>> rows) {
        const Field& f = field_make(p, k);
        return preserves_det(op_from_rows(f, rows));
    });
    m.def("fixes_identity", [](int p, int k, std::vector<std::vector<uint16_t>> rows) {
        const Field& f = field_make(p, k);
        return fixes_identity(op_from_rows(f, rows));
    });
    m.def("preserves_h1", [](int p, int k, std::vector<std::vector<uint16_t>> rows) {
        const Field& f = field_make(p, k);
        return preserves_h1(op_from_rows(f, rows));
    });
    m.def("op_apply", [](int p, int k, std::vector<std::vector<uint16_t>> rows,
                         std::vector<uint16_t> x) {
        const Field& f = field_make(p, k);
        return alb_codes(op_from_rows(f, rows).apply(alb_from_codes(f, x)));
    });
    m.def("op_compose", [](int p, int k, std::vector<std::vector<uint16_t>> a,
                           std::vector<std::vector<uint16_t>> b) {
        const Field& f = field_make(p, k);
        return op_rows(op_from_rows(f, a).compose(op_from_rows(f, b)));
    });
    m.def("op_invert", [](int p, int k, std::vector<std::vector<uint16_t>> a) {
        const Field& f = field_make(p, k);
        return op_rows(op_from_rows(f, a).inverse());
    });
    m.def("scalar_op", [](int p, int k, uint16_t lam) {
        return op_rows(LinearOp27::scalar(field_make(p, k), lam));
    });

    // ---- reports (dicts mirroring the CLI JSON schema) ----
    m.def("table", [] { return json_to_py(table_report()); });
    m.def("census", [](int q, const std::string& mode, int threads) {
        return json_to_py(census_report(q, mode, threads));
    }, py::arg("q") = 2, py::arg("mode") = "closed", py::arg("threads") = 1);
    m.def("orbit", [](py::dict start, const std::string& gens, uint64_t budget) {
        return json_to_py(orbit_report(py_to_json(start), gens, budget));
    }, py::arg("start"), py::arg("gens") = "standard", py::arg("budget") = 0);
    m.def("dickson_certificate", [](std::vector<int> primes) {
        return json_to_py(dickson_report(primes));
    }, py::arg("primes") = std::vector<int>{2, 3, 5, 101});
    m.def("orders", [](std::vector<int> qs) { return json_to_py(orders_report(qs)); },
          py::arg("qs") = std::vector<int>{2, 3, 4, 5, 7, 8, 9});
    m.def("classify", [](py::dict vec) { return json_to_py(classify_report(py_to_json(vec))); });
    m.def("verify",
          [](std::vector<std::string> suites, std::vector<int> qs, uint64_t seed,
             uint64_t random_instances, int threads) {
              std::vector<int> untwisted = qs.empty() ? std::vector<int>{2, 3, 4, 5} : qs;
              std::vector<int> twisted = qs.empty() ? std::vector<int>{2, 3} : qs;
              return json_to_py(
                  verify_report(suites, untwisted, twisted, seed, random_instances, threads));
          },
          py::arg("suites") = std::vector<std::string>{"octonion", "albert", "generators", "twisted"},
          py::arg("qs") = std::vector<int>{}, py::arg("seed") = 1,
          py::arg("random_instances") = 10000, py::arg("threads") = 1);

    m.attr("__version__") = "0.1.0";
}
