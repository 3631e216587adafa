// Python bindings: the main operations exposed over JSON strings (complex
// objects) and plain numeric types (bounds, matrices).  The gtmm package
// wraps these with dict-based conveniences.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gtmm/constructions.hpp"
#include "gtmm/io.hpp"

namespace py = pybind11;
using namespace gtmm;

namespace {

std::string check_to_json(const GroupSpec* spec, const CheckResult& r) {
    json out;
    out["verdict"] = r ? "violated" : "true";
    if (r) out["witness"] = witness_to_json(spec, *r);
    return out.dump();
}

using Matrix = std::vector<std::vector<std::int64_t>>;

IntMatrix to_matrix(const Matrix& rows) {
    if (rows.empty()) throw StructuralError("empty matrix");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols) throw StructuralError("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix from_matrix(const IntMatrix& m) {
    Matrix rows(m.rows, std::vector<std::int64_t>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) rows[r][c] = m.at(r, c);
    return rows;
}

Puzzle puzzle_from_text(const std::string& text) {
    std::istringstream in(text);
    return parse_puzzle(in);
}

} // namespace

PYBIND11_MODULE(_gtmm, m) {
    m.doc() = "group-theoretic matrix multiplication toolkit";

    py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);

    // -- verification over JSON ------------------------------------------
    m.def("check_tpp_json", [](const std::string& text, std::uint64_t budget, int threads) {
        auto t = triple_from_json(json::parse(text));
        Budget b{budget, 0};
        return check_to_json(&t.group, check_tpp(t, b, threads));
    }, py::arg("triple"), py::arg("budget") = 1'000'000'000ULL, py::arg("threads") = 1);

    m.def("check_sdpp_json", [](const std::string& text, std::uint64_t budget) {
        auto f = pair_family_from_json(json::parse(text));
        Budget b{budget, 0};
        return check_to_json(&f.group, check_sdpp(f, b));
    }, py::arg("family"), py::arg("budget") = 1'000'000'000ULL);

    m.def("check_stpp_json", [](const std::string& text, std::uint64_t budget) {
        auto f = triple_family_from_json(json::parse(text));
        Budget b{budget, 0};
        return check_to_json(&f.group, check_stpp(f, b));
    }, py::arg("family"), py::arg("budget") = 1'000'000'000ULL);

    // -- puzzles ------------------------------------------------------------
    m.def("check_usp", [](const std::string& text) {
        return check_to_json(nullptr, check_usp(puzzle_from_text(text)));
    });
    m.def("check_strong_usp", [](const std::string& text) {
        return check_to_json(nullptr, check_strong_usp(puzzle_from_text(text)));
    });
    m.def("check_two_symbol_structure", [](const std::string& text) {
        Budget b;
        return check_to_json(nullptr, check_two_symbol_structure(puzzle_from_text(text), b));
    });
    m.def("check_local_usp", [](const std::string& text) {
        return check_to_json(nullptr, check_local_usp(puzzle_from_text(text)));
    });
    m.def("check_local_strong_usp", [](const std::string& text) {
        return check_to_json(nullptr, check_local_strong_usp(puzzle_from_text(text)));
    });
    m.def("strong_to_local", [](const std::string& text) {
        return format_puzzle(strong_to_local(puzzle_from_text(text)));
    });
    m.def("capacity_rate", [](const std::string& text) {
        return capacity_rate(puzzle_from_text(text));
    });

    // -- constructions (JSON out) ----------------------------------------
    m.def("build_swap_wreath_triple", [](int n) {
        return triple_to_json(build_swap_wreath_triple(n)).dump();
    });
    m.def("build_triangle_subgroups", [](int n) {
        return triple_to_json(build_triangle_subgroups(n)).dump();
    });
    m.def("build_easy_strong_usp", [](int k) {
        return format_puzzle(build_easy_strong_usp(k));
    });
    m.def("build_triangle_strong_usp", [](int k) {
        return format_puzzle(build_triangle_strong_usp(k));
    });
    m.def("strong_usp_to_tpp", [](const std::string& text, int mod) {
        return triple_to_json(strong_usp_to_tpp(puzzle_from_text(text), mod)).dump();
    });
    m.def("build_sdpp_trivial", [](int n, int k) {
        return pair_family_to_json(build_sdpp_trivial(n, k)).dump();
    });
    m.def("build_sdpp_binomial", [](int mod, int l) {
        return pair_family_to_json(build_sdpp_binomial(mod, l)).dump();
    });
    m.def("sdpp_to_tpp", [](const std::string& text) {
        return triple_to_json(sdpp_to_tpp(pair_family_from_json(json::parse(text)))).dump();
    });
    m.def("build_stpp_example", [](int n) {
        return triple_family_to_json(build_stpp_example(n)).dump();
    });
    m.def("local_strong_usp_to_stpp", [](const std::string& text, int l) {
        return triple_family_to_json(local_strong_usp_to_stpp(puzzle_from_text(text), l)).dump();
    });
    m.def("local_usp_chart", [](int l) { return chart_to_json(local_usp_chart(l)).dump(); });
    m.def("chart_to_stpp", [](const std::string& chart_text, const std::string& puzzle_text) {
        auto chart = chart_from_json(json::parse(chart_text));
        return triple_family_to_json(chart_to_stpp(chart, puzzle_from_text(puzzle_text))).dump();
    });
    m.def("stpp_to_tpp", [](const std::string& text) {
        return triple_to_json(stpp_to_tpp(triple_family_from_json(json::parse(text)))).dump();
    });
    m.def("build_no3ap_set", [](int n) { return build_no3ap_set(n); });
    m.def("build_triangle_free", [](int n) { return build_triangle_free(n); });

    // -- bounds ------------------------------------------------------------
    m.def("solve_omega_tpp", [](double n, double mm, double p, double d_max,
                                double group_order) {
        return bound_to_json(solve_omega_tpp(n, mm, p, DegreeProfile::bounded(d_max, group_order)))
            .dump();
    }, py::arg("n"), py::arg("m"), py::arg("p"), py::arg("d_max"), py::arg("group_order"));
    m.def("solve_omega_asi_abelian",
          [](const std::vector<std::array<double, 3>>& shapes, double order) {
              return bound_to_json(solve_omega_asi(shapes, DegreeProfile::abelian(order))).dump();
          });
    m.def("solve_omega_sdpp_abelian", [](const std::vector<double>& products, double order) {
        return bound_to_json(solve_omega_sdpp(products, DegreeProfile::abelian(order))).dump();
    });
    m.def("solve_omega_sdpp_asymptotic",
          [](int mod) { return bound_to_json(solve_omega_sdpp_asymptotic(mod)).dump(); });
    m.def("omega_from_strong_usp", [](std::int64_t size, int k, int mod) {
        return bound_to_json(omega_from_strong_usp(size, k, mod)).dump();
    });
    m.def("omega_from_capacity", [](double c, double mod) {
        return bound_to_json(omega_from_capacity(c, mod)).dump();
    });
    m.def("omega_from_alpha_beta", [](double alpha, double beta) {
        return bound_to_json(omega_from_alpha_beta(alpha, beta)).dump();
    });
    m.def("chart_bound_scan", [](int lo, int hi, double c) {
        return bound_to_json(chart_bound_scan(lo, hi, c)).dump();
    }, py::arg("lo") = 3, py::arg("hi") = 64,
       py::arg("c") = 3.0 / std::pow(2.0, 2.0 / 3.0));
    m.def("capacity_constants", [] {
        auto c = capacity_constants();
        return py::make_tuple(c.usp_upper, c.usp, c.strong_lower);
    });

    // -- matrix multiplication ---------------------------------------------
    m.def("naive_matmul", [](const Matrix& a, const Matrix& b) {
        return from_matrix(naive_matmul(to_matrix(a), to_matrix(b)));
    });
    m.def("multiply_via_tpp",
          [](const std::string& triple_text, const Matrix& a, const Matrix& b,
             bool assume_verified) {
              MatmulOptions opts;
              opts.assume_verified = assume_verified;
              auto t = triple_from_json(json::parse(triple_text));
              return from_matrix(multiply_via_tpp(t, to_matrix(a), to_matrix(b), opts));
          },
          py::arg("triple"), py::arg("a"), py::arg("b"), py::arg("assume_verified") = false);
    m.def("multiply_via_stpp",
          [](const std::string& family_text, const std::vector<std::pair<Matrix, Matrix>>& pairs,
             bool assume_verified) {
              MatmulOptions opts;
              opts.assume_verified = assume_verified;
              auto f = triple_family_from_json(json::parse(family_text));
              std::vector<std::pair<IntMatrix, IntMatrix>> inputs;
              for (const auto& [a, b] : pairs) inputs.emplace_back(to_matrix(a), to_matrix(b));
              std::vector<Matrix> out;
              for (const auto& r : multiply_via_stpp(f, inputs, opts))
                  out.push_back(from_matrix(r));
              return out;
          },
          py::arg("family"), py::arg("pairs"), py::arg("assume_verified") = false);

    m.attr("__version__") = "0.1.0";
}
