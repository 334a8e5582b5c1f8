#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ijord/json_io.hpp"
#include "ijord/verify.hpp"

namespace py = pybind11;
using namespace ijord;

namespace {

std::string compute_json(const std::string& descriptor_json) {
    nlohmann::json j = nlohmann::json::parse(descriptor_json);
    if (descriptor_kind(j) == DescriptorKind::GeneralCuspidal) {
        auto parts = general_from_json(j);
        return general_report_to_json(ijord_general_report(parts)).dump();
    }
    SimpleCuspidalDescriptor desc = descriptor_from_json(j);
    return report_to_json(ijord_simple_report(desc)).dump();
}

std::vector<std::vector<long long>> enumerate_polys(long long q, int index, int m) {
    long long p = q;
    int k = 1;
    for (long long d = 3; d * d <= q; d += 2)
        if (q % d == 0) {
            p = d;
            k = 0;
            long long t = q;
            while (t > 1) {
                t /= p;
                ++k;
            }
            break;
        }
    DualityContext ctx(FiniteField(p, k), index);
    std::vector<std::vector<long long>> out;
    for (const auto& sd : enumerate_self_dual_irreducible(ctx, m)) {
        std::vector<long long> coeffs;
        for (auto c : sd.poly().coeffs()) coeffs.push_back(c);
        out.push_back(std::move(coeffs));
    }
    return out;
}

std::string enumerate_params_json(long long n_half, const std::string& registry_json) {
    EndoRegistry reg = registry_from_json(nlohmann::json::parse(registry_json));
    auto shapes = enumerate_cuspidal_shapes(n_half, reg.irreps());
    nlohmann::json catalog = nlohmann::json::array();
    for (const auto& shape : shapes) {
        auto counts = packet_counts(shape);
        nlohmann::json blocks = nlohmann::json::array();
        for (const auto& blk : shape.blocks)
            blocks.push_back(nlohmann::json{{"sigma", blk.sigma.id}, {"m", blk.m}});
        nlohmann::json row{{"blocks", blocks},
                           {"packet_size", counts.packet_size},
                           {"regular", is_regular(shape)}};
        if (counts.cuspidal_count) row["cuspidal_count"] = *counts.cuspidal_count;
        catalog.push_back(std::move(row));
    }
    return nlohmann::json{{"N", n_half}, {"shapes", catalog}, {"count", shapes.size()}}.dump();
}

std::vector<long long> blocks_from_real_part(long long num, long long den) {
    return jordan_blocks_from_real_part(Rational(num, den));
}

std::string parity_decision_py(bool tame, long long d, bool ramified, bool alpha_ramified) {
    ParityDecision pd = parity_decision(GaloisDescriptor{tame, d, ramified, alpha_ramified});
    if (!pd.same_parity) return "opposite";
    return pd.parity == Parity::Symplectic ? "same:symplectic" : "same:orthogonal";
}

std::vector<std::tuple<std::string, long long, long long>> verify_py(unsigned long long seed) {
    VerifyOptions opts;
    opts.seed = seed;
    auto rows = run_verification(opts);
    std::vector<std::tuple<std::string, long long, long long>> out;
    for (const auto& r : rows) out.emplace_back(r.name, r.checked, r.failed);
    return out;
}

std::string synthetic_registry_json(unsigned long long seed, int n_classes) {
    return registry_to_json(EndoRegistry::synthetic(seed, n_classes)).dump();
}

} // namespace

PYBIND11_MODULE(_ijord, m) {
    m.doc() = "inertial Jordan sets of cuspidal symplectic-group representations";

    py::register_exception<Error>(m, "IjordError");

    m.def("compute_json", &compute_json, py::arg("descriptor_json"),
          "Evaluate a simple/general cuspidal descriptor (JSON in, report JSON out).");
    m.def("enumerate_self_dual_polys", &enumerate_polys, py::arg("q"), py::arg("index"),
          py::arg("m"),
          "Self-dual irreducible monic polynomials of degree m as coefficient-index lists.");
    m.def("enumerate_params_json", &enumerate_params_json, py::arg("n"), py::arg("registry_json"),
          "Catalog of discrete cuspidal parameter shapes of dimension 2N+1.");
    m.def("jordan_blocks", &blocks_from_real_part, py::arg("num"), py::arg("den") = 1,
          "Jordan block ladder of a reducibility real part num/den.");
    m.def("parity_decision", &parity_decision_py, py::arg("tame"), py::arg("d"),
          py::arg("k_over_ktilde_ramified"), py::arg("alpha_ramified"),
          "Parity relation of a self-dual representation and its self-dual unramified twist.");
    m.def("existence_table",
          [](const std::string& dual_type, long long mm) {
              SelfDualType t;
              if (dual_type == "trivial")
                  t = SelfDualType::TrivialClass;
              else if (dual_type == "unramified")
                  t = SelfDualType::UnramifiedQuadratic;
              else if (dual_type == "ramified")
                  t = SelfDualType::RamifiedQuadratic;
              else
                  throw Error(Errc::SchemaError, "unknown dual_type '" + dual_type + "'");
              return existence_table(t, mm);
          },
          py::arg("dual_type"), py::arg("m"),
          "Whether self-dual cuspidals of relative degree m exist for this duality type.");
    m.def("synthetic_registry_json", &synthetic_registry_json, py::arg("seed") = 1,
          py::arg("n_classes") = 60, "Deterministic synthetic registry for experiments.");
    m.def("verify", &verify_py, py::arg("seed") = 1,
          "Run the invariant suites; returns (name, checked, failed) rows.");
}
