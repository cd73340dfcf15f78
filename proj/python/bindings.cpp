#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadsq/characters.hpp"
#include "quadsq/closedform.hpp"
#include "quadsq/ideal.hpp"
#include "quadsq/repcount.hpp"
#include "quadsq/series.hpp"
#include "quadsq/tables.hpp"

namespace py = pybind11;
using namespace quadsq;

namespace {

long long small(const Int& n) { return n.convert_to<long long>(); }

QuadInt elem(long long a, long long b) { return QuadInt(Int(a), Int(b)); }

}  // namespace

PYBIND11_MODULE(quadsq_py, m) {
    m.doc() = "Sums of two and three squares in Q(sqrt 3) and Q(sqrt 17). "
              "Elements are (a, b) pairs in the basis 1, sqrt(3) resp. 1, (1+sqrt(17))/2.";

    py::register_exception<InvalidInput>(m, "InvalidInput");

    m.def("fields", [] { return std::vector<std::string>{"q3", "q17"}; });

    m.def("norm", [](const std::string& f, long long a, long long b) {
        return small(Field::by_name(f).norm(elem(a, b)));
    });
    m.def("trace", [](const std::string& f, long long a, long long b) {
        return small(Field::by_name(f).trace(elem(a, b)));
    });
    m.def("is_totally_positive", [](const std::string& f, long long a, long long b) {
        return Field::by_name(f).is_totally_positive(elem(a, b));
    });

    m.def("classify", [](const std::string& f, long long a, long long b) -> std::string {
        const Field& F = Field::by_name(f);
        if (F.id() == FieldId::Q3) return to_string(classify3(F, elem(a, b)));
        auto [c, cp] = classify17(F, elem(a, b));
        return std::string(to_string(c)) + "," + to_string(cp);
    });

    m.def("r2", [](const std::string& f, long long a, long long b,
                   const std::string& method) {
        const Field& F = Field::by_name(f);
        QuadInt nu = elem(a, b);
        if (method == "brute") return small(r2_brute(F, nu));
        if (method == "closed") return small(r2_closed(F, nu));
        if (method == "criterion") return small(r2_criterion(F, nu).count);
        throw InvalidInput("unknown method: " + method);
    }, py::arg("field"), py::arg("a"), py::arg("b"), py::arg("method") = "closed");

    m.def("r3", [](const std::string& f, long long a, long long b,
                   const std::string& method) {
        const Field& F = Field::by_name(f);
        QuadInt nu = elem(a, b);
        if (method == "brute") return small(r3_brute(F, nu));
        if (method == "closed") {
            auto [alpha, mu] = squarefree_decompose(F, nu);
            return small(r3_closed(F, alpha, mu));
        }
        throw InvalidInput("unknown method: " + method);
    }, py::arg("field"), py::arg("a"), py::arg("b"), py::arg("method") = "brute");

    m.def("representable3", [](const std::string& f, long long a, long long b) {
        return representable3(Field::by_name(f), elem(a, b));
    });

    m.def("class_number", [](const std::string& f, long long a, long long b) {
        auto res = class_number(Field::by_name(f), elem(a, b));
        py::dict d;
        d["case"] = res.case_label;
        d["h"] = res.h;
        d["r3"] = small(res.r3_used);
        d["special"] = res.special;
        return d;
    });

    m.def("enumerate_alphas", [](const std::string& f, int n) {
        std::vector<std::pair<long long, long long>> out;
        for (const QuadInt& a : enumerate_alphas(Field::by_name(f), n))
            out.push_back({small(a.x), small(a.y)});
        return out;
    });

    m.def("table", [](const std::string& f, int n) {
        const Field& F = Field::by_name(f);
        py::list rows;
        for (const TableRow& r : generate_table(F, n)) {
            py::dict d;
            d["a"] = small(r.a);
            d["b"] = small(r.b);
            if (F.id() == FieldId::Q3) {
                d["m"] = r.e;
            } else {
                d["e"] = r.e;
                d["ep"] = r.ep;
            }
            d["h"] = r.h;
            rows.append(d);
        }
        return rows;
    });

    m.def("verify_theta_sq", [](const std::string& f, long T) {
        return verify_theta_sq(Field::by_name(f), T).pass();
    });
}
