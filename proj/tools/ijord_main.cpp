#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ijord/json_io.hpp"
#include "ijord/verify.hpp"

namespace {

using namespace ijord;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitViolation = 2;

long long env_bound() {
    if (const char* env = std::getenv("IJORD_BOUND")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed IJORD_BOUND\n";
    }
    return FiniteField::kDefaultBound;
}

void print_report_table(std::ostream& os, const IJordReport& rep) {
    os << "Q-breakdown:\n";
    os << "  " << std::left << std::setw(16) << "Q" << std::setw(4) << "m" << std::setw(8) << "r0"
       << std::setw(8) << "r1" << std::setw(14) << "real parts" << std::setw(16) << "blocks"
       << "contribution\n";
    for (const auto& row : rep.rows) {
        std::ostringstream parts, blocks;
        parts << "{" << rat_to_string(row.s_plus) << ", " << rat_to_string(row.s_minus) << "}";
        blocks << "[";
        bool first = true;
        for (long long b : row.blocks_plus) {
            blocks << (first ? "" : " ") << b;
            first = false;
        }
        for (long long b : row.blocks_minus) {
            blocks << (first ? "" : " ") << b;
            first = false;
        }
        blocks << "]";
        os << "  " << std::left << std::setw(16) << row.q_poly.to_string() << std::setw(4) << row.m
           << std::setw(8) << rat_to_string(row.r0) << std::setw(8) << rat_to_string(row.r1)
           << std::setw(14) << parts.str() << std::setw(16) << blocks.str() << row.contribution
           << "\n";
    }
}

void print_multiset_table(std::ostream& os, const IJordMultiset& ms) {
    nlohmann::json agg = multiset_to_json(ms);
    os << "IJord multiset:\n";
    for (const auto& entry : agg) {
        os << "  ([" << entry["endo"].get<std::string>();
        os << ", poly=" << entry["poly"].dump();
        if (entry["chi_twist"].get<bool>()) os << ", chi";
        os << "], m=" << entry["m"] << ") x" << entry["multiplicity"]
           << "  deg_rho=" << entry["deg_rho"] << "\n";
    }
}

int cmd_compute(const std::string& path, bool as_json) {
    nlohmann::json j = load_json_file(path);
    DescriptorKind kind = descriptor_kind(j);
    if (kind == DescriptorKind::SimpleCuspidal) {
        SimpleCuspidalDescriptor desc = descriptor_from_json(j);
        IJordReport rep = ijord_simple_report(desc);
        identity_check(desc, rep.multiset);
        if (as_json) {
            std::cout << report_to_json(rep).dump(2) << "\n";
        } else {
            std::cout << "simple cuspidal descriptor: q=" << desc.q << " endo=" << desc.endo.label
                      << " (deg " << desc.endo.degree << ", "
                      << self_dual_type_name(*desc.endo.dual_type) << ") N=" << desc.N << "\n";
            print_report_table(std::cout, rep);
            print_multiset_table(std::cout, rep.multiset);
            std::cout << "identity: total " << rep.total << " == expected " << rep.expected
                      << " -> ok\n";
        }
        return kExitOk;
    }
    if (kind == DescriptorKind::GeneralCuspidal) {
        std::vector<GeneralPart> parts = general_from_json(j);
        IJordGeneralReport rep = ijord_general_report(parts);
        if (!rep.identity_ok)
            throw Error(Errc::IdentityViolation, "general total " + std::to_string(rep.total) +
                                                     " != " + std::to_string(rep.expected));
        if (as_json) {
            std::cout << general_report_to_json(rep).dump(2) << "\n";
        } else {
            std::cout << "general cuspidal descriptor with " << parts.size() << " part(s)\n";
            for (std::size_t i = 0; i < rep.part_reports.size(); ++i) {
                std::cout << "part " << i << ":\n";
                print_report_table(std::cout, rep.part_reports[i]);
            }
            print_multiset_table(std::cout, rep.multiset);
            std::cout << "identity: total " << rep.total << " == expected " << rep.expected
                      << " -> ok\n";
        }
        return kExitOk;
    }
    throw Error(Errc::SchemaError, "compute expects a simple_cuspidal or general_cuspidal file");
}

int cmd_enumerate_polys(long long q, int index, int m, bool as_json, long long bound) {
    long long p = q;
    int k = 1;
    for (long long d = 3; d * d <= q; d += 2)
        if (q % d == 0) {
            p = d;
            k = 0;
            long long t = q;
            while (t > 1) {
                if (t % p != 0) throw Error(Errc::InvalidArgument, "q must be an odd prime power");
                t /= p;
                ++k;
            }
            break;
        }
    DualityContext ctx(FiniteField(p, k, bound), index);
    auto polys = enumerate_self_dual_irreducible(ctx, m, bound);
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& sd : polys) arr.push_back(poly_to_json(sd.poly()));
        std::cout << nlohmann::json{{"version", kSchemaVersion},
                                    {"kind", "poly_listing"},
                                    {"q", q},
                                    {"index", index},
                                    {"m", m},
                                    {"polys", arr},
                                    {"count", polys.size()}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& sd : polys) std::cout << sd.poly().to_string() << "\n";
        std::cout << "count: " << polys.size() << "\n";
    }
    return kExitOk;
}

int cmd_enumerate_params(long long n_half, const std::string& registry_path,
                         const std::string& request_path, bool as_json) {
    EnumerationRequest req;
    if (!request_path.empty()) {
        req = enumeration_request_from_json(load_json_file(request_path));
    } else {
        req.n_half = n_half;
        req.registry = registry_from_json(load_json_file(registry_path));
    }
    std::vector<IrrepDescriptor> inventory = req.registry.irreps();
    auto shapes = enumerate_cuspidal_shapes(req.n_half, inventory, req.node_budget);

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
    if (as_json) {
        std::cout << nlohmann::json{{"version", kSchemaVersion},
                                    {"kind", "shape_catalog"},
                                    {"N", req.n_half},
                                    {"shapes", catalog},
                                    {"count", shapes.size()}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& row : catalog) {
            std::cout << "shape:";
            for (const auto& blk : row["blocks"])
                std::cout << " (" << blk["sigma"].get<std::string>() << ", St_" << blk["m"] << ")";
            std::cout << "  packet=" << row["packet_size"];
            if (row.contains("cuspidal_count")) std::cout << " cuspidal=" << row["cuspidal_count"];
            std::cout << (row["regular"].get<bool>() ? " regular" : " irregular") << "\n";
        }
        std::cout << "count: " << shapes.size() << "\n";
    }
    return kExitOk;
}

int cmd_verify(unsigned long long seed, long long bound, bool inject_mutant) {
    VerifyOptions opts;
    opts.seed = seed;
    opts.bound = bound;
    opts.inject_mutant = inject_mutant;
    auto results = run_verification(opts);
    std::cout << format_verification(results, opts);
    return verification_passed(results) ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inertial Jordan sets of cuspidal symplectic-group representations"};
    app.require_subcommand(1);
    long long bound = env_bound();

    std::string compute_path;
    bool compute_json = false;
    auto* compute = app.add_subcommand("compute", "evaluate a descriptor file");
    compute->add_option("file", compute_path, "descriptor JSON file")->required();
    compute->add_flag("--json", compute_json, "emit JSON instead of tables");

    long long ep_q = 3;
    int ep_index = 1, ep_m = 1;
    bool ep_json = false;
    auto* enum_polys = app.add_subcommand("enumerate-polys", "list self-dual irreducible polynomials");
    enum_polys->add_option("--q", ep_q, "cardinality of k_E")->required();
    enum_polys->add_option("--index", ep_index, "fixed-subfield index (1 or 2)")->required();
    enum_polys->add_option("--m", ep_m, "degree")->required();
    enum_polys->add_flag("--json", ep_json, "emit JSON");

    long long pa_n = 0;
    std::string pa_registry, pa_request;
    bool pa_json = false;
    auto* enum_params = app.add_subcommand("enumerate-params", "catalog cuspidal parameter shapes");
    enum_params->add_option("--n", pa_n, "N (shapes of dimension 2N+1)");
    enum_params->add_option("--registry", pa_registry, "registry JSON file");
    enum_params->add_option("--request", pa_request, "enumeration_request JSON file");
    enum_params->add_flag("--json", pa_json, "emit JSON");

    unsigned long long v_seed = 1;
    bool v_mutant = false;
    auto* verify = app.add_subcommand("verify", "run the invariant suites over the bounded corpus");
    verify->add_option("--seed", v_seed, "corpus seed");
    verify->add_option("--bound", bound, "cardinality/enumeration bound");
    verify->add_flag("--inject-mutant", v_mutant, "corrupt one case to demonstrate failure reporting");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) return cmd_compute(compute_path, compute_json);
        if (*enum_polys) return cmd_enumerate_polys(ep_q, ep_index, ep_m, ep_json, bound);
        if (*enum_params) {
            if (pa_request.empty() && pa_registry.empty())
                throw Error(Errc::InvalidArgument, "enumerate-params needs --registry or --request");
            return cmd_enumerate_params(pa_n, pa_registry, pa_request, pa_json);
        }
        if (*verify) return cmd_verify(v_seed, bound, v_mutant);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::IdentityViolation ? kExitViolation : kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
