#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylbkk/center.hpp"
#include "weylbkk/io.hpp"
#include "weylbkk/ultra.hpp"

namespace py = pybind11;
using namespace weylbkk;

namespace {

RingDescriptor make_ring(const std::string& kind, long p) {
    if (kind == "integers") return RingDescriptor::integers();
    if (kind == "prime_field") return RingDescriptor::prime_field(p);
    if (kind == "rational_functions") return RingDescriptor::rational_functions(p);
    fail(Errc::InvalidArgument, "unknown ring kind '" + kind + "'");
}

py::dict report_dict(const CheckReport& rep) {
    py::dict d;
    d["check"] = rep.check;
    py::dict params;
    for (const auto& [k, v] : rep.params) params[py::str(k)] = v;
    d["params"] = params;
    d["pass"] = rep.pass;
    d["precondition_ok"] = rep.precondition_ok;
    d["witnesses"] = rep.witnesses;
    d["timing_ms"] = rep.timing_ms;
    return d;
}

py::dict report_dict(const IndependenceReport& rep) {
    py::dict d;
    d["check"] = "independence";
    d["n"] = rep.n;
    d["degree_bound"] = rep.degree_bound;
    d["pass"] = rep.all_match();
    d["precondition_ok"] = rep.all_preconditions_ok();
    d["expected_integer"] = io::to_string(rep.expected_integer);
    py::list per_prime;
    for (const auto& r : rep.per_prime) {
        py::dict e;
        e["p"] = r.p;
        e["precondition_ok"] = r.precondition_ok;
        e["match"] = r.match;
        e["computed"] = io::to_string(r.computed);
        e["expected"] = io::to_string(r.expected);
        per_prime.append(e);
    }
    d["per_prime"] = per_prime;
    d["crt_reconstructed"] = io::to_string(rep.crt_reconstructed);
    d["crt_matches_expected"] = rep.crt_matches_expected;
    d["pairwise_consistent"] = rep.pairwise_consistent;
    d["timing_ms"] = rep.timing_ms;
    return d;
}

TameWord word_of(const WeylMorphism& f) {
    if (!f.provenance()) fail(Errc::InvalidArgument, "morphism has no tame word provenance");
    return *f.provenance();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weyl algebra arithmetic in positive characteristic: the char-p center, its Poisson "
              "bracket, center restriction of automorphisms, and multi-prime independence checks.";

    py::register_exception<AlgebraError>(m, "AlgebraError");

    py::class_<RingDescriptor>(m, "Ring")
        .def(py::init(&make_ring), py::arg("kind"), py::arg("p") = 0)
        .def_property_readonly("kind",
                               [](const RingDescriptor& r) {
                                   switch (r.kind) {
                                   case RingDescriptor::Kind::Integers: return "integers";
                                   case RingDescriptor::Kind::PrimeField: return "prime_field";
                                   default: return "rational_functions";
                                   }
                               })
        .def_readonly("p", &RingDescriptor::p)
        .def("__eq__", [](const RingDescriptor& a, const RingDescriptor& b) { return a == b; })
        .def("__repr__", [](const RingDescriptor& r) { return "Ring(" + r.to_string() + ")"; });

    py::class_<WeylElement>(m, "WeylElement")
        .def_property_readonly("n", &WeylElement::pairs)
        .def_property_readonly("ring", &WeylElement::ring)
        .def("__add__", [](const WeylElement& a, const WeylElement& b) { return a + b; })
        .def("__sub__", [](const WeylElement& a, const WeylElement& b) { return a - b; })
        .def("__mul__", [](const WeylElement& a, const WeylElement& b) { return a * b; })
        .def("__neg__", [](const WeylElement& a) { return -a; })
        .def("__pow__", [](const WeylElement& a, unsigned long e) { return pow(a, e); })
        .def("__eq__", [](const WeylElement& a, const WeylElement& b) { return a == b; })
        .def("__str__", [](const WeylElement& a) { return io::to_string(a); })
        .def("__repr__", [](const WeylElement& a) { return "WeylElement(" + io::to_string(a) + ")"; })
        .def("degree", [](const WeylElement& a) -> py::object {
            auto d = total_degree(a);
            return d ? py::cast(*d) : py::none();
        });

    py::class_<Poly>(m, "Poly")
        .def_property_readonly("nvars", &Poly::nvars)
        .def_property_readonly("ring", &Poly::ring)
        .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
        .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
        .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
        .def("__neg__", [](const Poly& a) { return -a; })
        .def("__pow__", [](const Poly& a, unsigned long e) { return pow(a, e); })
        .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
        .def("__str__", [](const Poly& a) { return io::to_string(a); })
        .def("__repr__", [](const Poly& a) { return "Poly(" + io::to_string(a) + ")"; })
        .def("degree", [](const Poly& a) -> py::object {
            auto d = total_degree(a);
            return d ? py::cast(*d) : py::none();
        });

    py::class_<SymplectoMap>(m, "SymplectoMap")
        .def_readonly("n", &SymplectoMap::n)
        .def_readonly("ring", &SymplectoMap::ring)
        .def_readonly("images", &SymplectoMap::images)
        .def("__eq__", [](const SymplectoMap& a, const SymplectoMap& b) { return a == b; })
        .def("__str__", [](const SymplectoMap& s) { return io::to_string(s); })
        .def("__repr__", [](const SymplectoMap& s) { return "SymplectoMap(" + io::to_string(s) + ")"; })
        .def("compose", [](const SymplectoMap& a, const SymplectoMap& b) { return compose(a, b); });

    py::class_<WeylMorphism>(m, "Morphism")
        .def_property_readonly("n", &WeylMorphism::pairs)
        .def_property_readonly("ring", &WeylMorphism::ring)
        .def_property_readonly("images", &WeylMorphism::images)
        .def_property_readonly("degree", [](const WeylMorphism& f) { return degree(f); })
        .def_property_readonly("has_word", [](const WeylMorphism& f) { return f.provenance().has_value(); })
        .def("__eq__", [](const WeylMorphism& a, const WeylMorphism& b) { return a == b; })
        .def("__str__", [](const WeylMorphism& f) { return io::emit_morphism(f); })
        .def("apply", [](const WeylMorphism& f, const WeylElement& w) { return apply(f, w); })
        .def("compose", [](const WeylMorphism& f, const WeylMorphism& g) { return compose(f, g); })
        .def("reduce_mod_p", [](const WeylMorphism& f, long p) { return reduce_mod_p(f, p); })
        .def("inverse", &inverse_from_provenance)
        .def("to_json", &io::emit_morphism);

    m.def("parse_weyl", &io::parse_weyl_expr, py::arg("text"), py::arg("n"), py::arg("ring"),
          "Parse a Weyl algebra expression in x1..xn, y1..yn.");
    m.def(
        "parse_center",
        [](std::string_view text, unsigned n, const RingDescriptor& ring) {
            return io::parse_poly_expr(text, 2 * n, ring, 'z');
        },
        py::arg("text"), py::arg("n"), py::arg("ring"),
        "Parse a center polynomial in z1..z2n.");
    m.def("parse_morphism", &io::parse_morphism, "Parse a morphism document (JSON).");
    m.def("validate_morphism",
          [](const std::vector<WeylElement>& images) { return WeylMorphism::validate(images); });

    m.def("mul_naive", &mul_naive, "Rewriting-based product oracle.");
    m.def("commutator", &commutator);
    m.def("ad_pow", &ad_pow);

    m.def("is_central", &is_central);
    m.def("extract_center", &extract_center);
    m.def("embed_center", &embed_center);
    m.def("poisson_bracket", &poisson_bracket);
    m.def("classical_bracket", &classical_bracket);

    m.def("random_tame", &random_tame, py::arg("seed"), py::arg("n"), py::arg("word_length"),
          py::arg("degree_bound"), py::arg("coeff_bound"),
          "Deterministic tame automorphism over the integers.");

    m.def("center_restriction", &center_restriction);
    m.def("untwist", &untwist);
    m.def(
        "phi_p",
        [](const WeylMorphism& f) {
            PhiResult r = phi_p(f);
            py::dict d;
            d["map"] = r.map;
            d["p"] = r.p;
            d["degree"] = r.morphism_degree;
            d["precondition_ok"] = r.precondition_ok;
            d["inverse_degree_known"] = r.inverse_degree_known;
            return d;
        },
        "untwist(center_restriction(f)) plus precondition flags.");
    m.def("classical_symplecto", [](const WeylMorphism& f) {
        return classical_symplecto(f.pairs(), f.ring(), word_of(f));
    });

    m.def("verify_symplectic", [](const SymplectoMap& s) { return report_dict(verify_symplectic(s)); });
    m.def("dominant_check", [](const WeylMorphism& f) { return report_dict(dominant_check(f)); });
    m.def("frobenius_poly_check",
          [](const WeylMorphism& f) { return report_dict(frobenius_poly_check(f)); });
    m.def("homomorphism_check", [](const WeylMorphism& f, const WeylMorphism& g) {
        return report_dict(homomorphism_check(f, g));
    });
    m.def("subdominant_report", [](const WeylMorphism& f) { return report_dict(subdominant_report(f)); });
    m.def(
        "independence_report",
        [](const WeylMorphism& f, const std::vector<long>& primes, unsigned threads) {
            return report_dict(independence_report(f.pairs(), word_of(f), primes, threads));
        },
        py::arg("morphism"), py::arg("primes"), py::arg("threads") = 1);
    m.def("default_primes", &default_primes);

    auto ultra_mod = m.def_submodule("ultra", "binary decomposition into the Cantor set");
    py::class_<ultra::BitString>(ultra_mod, "BitString")
        .def(py::init([](const std::string& bits) {
            ultra::BitString x;
            for (char c : bits) {
                if (c != '0' && c != '1') fail(Errc::InvalidArgument, "bit strings are over {0,1}");
                x.bits.push_back(c == '1');
            }
            return x;
        }))
        .def("__str__", &ultra::BitString::to_string)
        .def("__repr__",
             [](const ultra::BitString& x) { return "BitString(\"" + x.to_string() + "\")"; })
        .def("__eq__", [](const ultra::BitString& a, const ultra::BitString& b) { return a == b; })
        .def_property_readonly("length", &ultra::BitString::length);
    ultra_mod.def("binary_point", &ultra::binary_point, py::arg("a"), py::arg("length"));
    ultra_mod.def("d2", [](const ultra::BitString& x, const ultra::BitString& y) {
        auto d = ultra::d2(x, y);
        return py::make_tuple(d.num, d.den);
    });
    ultra_mod.def("nearest", &ultra::nearest);
    ultra_mod.def("approx_check", [](const ultra::BitString& x, long p, unsigned m) {
        return report_dict(ultra::approx_check(x, p, m));
    });

    m.attr("__version__") = "0.1.0";
}
