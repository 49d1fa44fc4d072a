#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "longknot/band_pass_pairs.hpp"
#include "longknot/certificate.hpp"
#include "longknot/conway.hpp"
#include "longknot/gauss_code.hpp"
#include "longknot/invariants.hpp"
#include "longknot/knot_table.hpp"
#include "longknot/moves.hpp"
#include "longknot/operations.hpp"
#include "longknot/search.hpp"

namespace py = pybind11;
using namespace longknot;

namespace {

std::vector<std::string> event_texts(const std::vector<MoveEvent>& events) {
    std::vector<std::string> out;
    out.reserve(events.size());
    for (const MoveEvent& e : events) out.push_back(e.to_string());
    return out;
}

MoveKindSet parse_kinds(const std::optional<std::vector<std::string>>& names) {
    if (!names) return MoveKindSet::reidemeister();
    MoveKindSet kinds;
    for (const std::string& n : *names) kinds.insert(parse_move_kind(n));
    return kinds;
}

py::dict counts_dict(const CobordismCounts& c) {
    py::dict d;
    d["births"] = c.births;
    d["saddles"] = c.saddles;
    d["deaths"] = c.deaths;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gauss diagrams of long virtual knots: invariants, moves and certificates";

    py::class_<LongGaussDiagram>(m, "LongGaussDiagram")
        .def(py::init([](const std::string& code) { return parse_gauss_code(code); }),
             py::arg("code") = "")
        .def_property_readonly("code", [](const LongGaussDiagram& d) { return serialize(d); })
        .def_property_readonly("arrow_count", &LongGaussDiagram::arrow_count)
        .def("renumber", [](const LongGaussDiagram& d) { return renumber(d); })
        .def("__str__", [](const LongGaussDiagram& d) { return serialize(d); })
        .def("__repr__",
             [](const LongGaussDiagram& d) { return "LongGaussDiagram('" + serialize(d) + "')"; })
        .def("__eq__", [](const LongGaussDiagram& a, const LongGaussDiagram& b) {
            return serialize(a) == serialize(b);
        });

    m.def("parse", &parse_gauss_code, py::arg("code"));
    m.def("serialize", py::overload_cast<const LongGaussDiagram&>(&serialize), py::arg("d"));

    m.def("v21", &v21, py::arg("d"));
    m.def("v22", &v22, py::arg("d"));
    m.def("beta", &beta, py::arg("d"));
    m.def("w", [](const LongGaussDiagram& d) { return w_polynomial(d).term_list(); }, py::arg("d"),
          "w polynomial as [(exponent, coefficient)] sorted by exponent");
    m.def(
        "pairing",
        [](const std::string& pattern, const LongGaussDiagram& d) {
            return pairing(ArrowPattern::unsigned_pattern(pattern), d);
        },
        py::arg("pattern"), py::arg("d"));
    m.def(
        "report",
        [](const LongGaussDiagram& d) {
            const InvariantReport r = report(d);
            py::dict out;
            out["v21"] = r.v21;
            out["v22"] = r.v22;
            out["beta"] = r.beta;
            out["w"] = r.w.term_list();
            return out;
        },
        py::arg("d"));
    m.def("conway_c2", &conway_c2, py::arg("d"));
    m.def("is_realizable", [](const LongGaussDiagram& d) { return is_realizable(closure(d)); },
          py::arg("d"));

    m.def("concatenate", &concatenate, py::arg("k1"), py::arg("k2"));
    m.def("inverse", &inverse, py::arg("k"));
    m.def("power", &power, py::arg("k"), py::arg("m"));
    m.def("random_diagram", py::overload_cast<std::size_t, std::uint64_t>(&random_diagram),
          py::arg("n_arrows"), py::arg("seed"));
    m.def("knot", &knots::by_name, py::arg("name"),
          "Named knot from the bundled table (unknot, right_trefoil, ..., fly)");

    m.def(
        "enumerate_moves",
        [](const LongGaussDiagram& d, const std::optional<std::vector<std::string>>& kinds) {
            return event_texts(enumerate_moves(d, parse_kinds(kinds)));
        },
        py::arg("d"), py::arg("kinds") = py::none());
    m.def(
        "apply_move",
        [](const LongGaussDiagram& d, const std::string& event) {
            return apply(d, MoveEvent::parse(event));
        },
        py::arg("d"), py::arg("event"));

    m.def(
        "band_pass_pair",
        [](int configuration, int base_arc, int variant, std::size_t extra, std::uint64_t seed) {
            if (variant != 1 && variant != 2) throw std::invalid_argument("variant must be 1 or 2");
            const BandPassPair p = generate_band_pass_pair(
                ConfigCase{configuration, base_arc, static_cast<BandPassVariant>(variant)}, extra,
                seed);
            return py::make_tuple(p.before, p.after, MoveEvent(p.site).to_string());
        },
        py::arg("configuration"), py::arg("base_arc"), py::arg("variant"), py::arg("extra") = 0,
        py::arg("seed") = 0);

    m.def(
        "trivialize_inverse_pair",
        [](const LongGaussDiagram& k) { return trivialize_inverse_pair(k).to_text(); },
        py::arg("k"), "Ribbon certificate text for K # K^-1");
    m.def("fly_certificate", &knots::fly_certificate_text);
    m.def(
        "verify_certificate",
        [](const std::string& text, bool ribbon) {
            const Verdict v = verify_certificate(
                CobordismCertificate::parse(text),
                ribbon ? CertificateMode::Ribbon : CertificateMode::Concordance);
            py::dict out;
            out["accepted"] = v.accepted;
            out["failing_step"] = v.failing_step ? py::cast(*v.failing_step) : py::none();
            out["reason"] = v.reason;
            out["counts"] = counts_dict(v.counts);
            return out;
        },
        py::arg("text"), py::arg("ribbon") = false);

    m.def(
        "search",
        [](const LongGaussDiagram& a, const LongGaussDiagram& b, std::size_t max_arrows,
           std::size_t max_steps, bool band_pass) {
            SearchOptions options;
            options.max_arrows = max_arrows;
            options.max_steps = max_steps;
            options.band_pass = band_pass;
            SearchResult r;
            {
                py::gil_scoped_release release;
                r = search_equivalence(a, b, options);
            }
            return r.path ? py::object(py::cast(event_texts(*r.path))) : py::object(py::none());
        },
        py::arg("a"), py::arg("b"), py::arg("max_arrows") = 4, py::arg("max_steps") = 3,
        py::arg("band_pass") = false, "Replay-verified move list, or None when unknown");
}
