#include "ijord/json_io.hpp"

#include <fstream>
#include <set>

namespace ijord {

using nlohmann::json;

namespace {

void expect_fields(const json& j, const std::set<std::string>& required,
                   const std::set<std::string>& optional, const std::string& where) {
    if (!j.is_object()) throw Error(Errc::SchemaError, where + ": expected an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.count(key) && !optional.count(key))
            throw Error(Errc::SchemaError, where + ": unknown field '" + key + "'");
    }
    for (const auto& key : required)
        if (!j.contains(key)) throw Error(Errc::SchemaError, where + ": missing field '" + key + "'");
}

void expect_version(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("version") || !j.at("version").is_string() ||
        j.at("version").get<std::string>() != kSchemaVersion)
        throw Error(Errc::SchemaError, where + ": missing or unsupported schema version");
}

long long get_int(const json& j, const char* field, const std::string& where) {
    if (!j.at(field).is_number_integer())
        throw Error(Errc::SchemaError, where + ": '" + field + "' must be an integer");
    return j.at(field).get<long long>();
}

SelfDualType dual_type_from_string(const std::string& s, const std::string& where) {
    if (s == "trivial") return SelfDualType::TrivialClass;
    if (s == "unramified") return SelfDualType::UnramifiedQuadratic;
    if (s == "ramified") return SelfDualType::RamifiedQuadratic;
    throw Error(Errc::SchemaError, where + ": unknown dual_type '" + s + "'");
}

GroupKind group_kind_from_string(const std::string& s, const std::string& where) {
    if (s == "unitary") return GroupKind::Unitary;
    if (s == "odd_special_orthogonal") return GroupKind::OddSpecialOrthogonal;
    if (s == "symplectic") return GroupKind::Symplectic;
    if (s == "even_special_orthogonal") return GroupKind::EvenSpecialOrthogonal;
    throw Error(Errc::SchemaError, where + ": unknown group_type '" + s + "'");
}

Involution involution_from_string(const std::string& s, const std::string& where) {
    if (s == "identity") return Involution::Identity;
    if (s == "negate_variable") return Involution::NegateVariable;
    throw Error(Errc::SchemaError, where + ": unknown involution '" + s + "'");
}

const char* involution_name(Involution sig) {
    return sig == Involution::Identity ? "identity" : "negate_variable";
}

QuadChar quad_char_from_string(const std::string& s, const std::string& where) {
    if (s == "1") return QuadChar::One;
    if (s == "w_nr") return QuadChar::Wnr;
    if (s == "w_r1") return QuadChar::Wram1;
    if (s == "w_r2") return QuadChar::Wram2;
    throw Error(Errc::SchemaError, where + ": unknown quadratic character '" + s + "'");
}

json endo_to_json(const EndoClassInvariants& endo) {
    json j{{"label", endo.label}, {"degree", endo.degree}, {"e", endo.e}, {"f", endo.f}};
    if (endo.dual_type) j["dual_type"] = self_dual_type_name(*endo.dual_type);
    return j;
}

EndoClassInvariants endo_from_json(const json& j, const std::string& where) {
    expect_fields(j, {"label", "degree", "e", "f"}, {"dual_type"}, where);
    EndoClassInvariants endo;
    endo.label = j.at("label").get<std::string>();
    endo.degree = get_int(j, "degree", where);
    endo.e = get_int(j, "e", where);
    endo.f = get_int(j, "f", where);
    if (j.contains("dual_type"))
        endo.dual_type = dual_type_from_string(j.at("dual_type").get<std::string>(), where);
    endo.check();
    return endo;
}

json datum_to_json(const CuspidalDatum& d) {
    json entries = json::array();
    for (const auto& [poly, a] : d.a_map()) {
        json entry{{"poly", poly_to_json(poly)}, {"a", a}};
        if (is_x_minus_one(poly) && d.eigen_types().plus) entry["eigen_type"] = *d.eigen_types().plus;
        if (is_x_plus_one(poly) && d.eigen_types().minus) entry["eigen_type"] = *d.eigen_types().minus;
        entries.push_back(std::move(entry));
    }
    return json{{"group_type", group_kind_name(d.gtype().kind())},
                {"dual_dim", d.dual_dim()},
                {"entries", entries}};
}

CuspidalDatum datum_from_json(const json& j, const DualityContext& ctx, const std::string& where) {
    expect_fields(j, {"group_type", "dual_dim", "entries"}, {}, where);
    GroupKind kind = group_kind_from_string(j.at("group_type").get<std::string>(), where);
    PolyMap amap;
    EigenTypes eigen;
    for (const auto& entry : j.at("entries")) {
        expect_fields(entry, {"poly", "a"}, {"eigen_type"}, where + ".entries");
        MonicPoly poly = poly_from_json(entry.at("poly"), ctx.field());
        long long a = get_int(entry, "a", where);
        if (!amap.emplace(poly, a).second)
            throw Error(Errc::SchemaError, where + ": polynomial repeats in entries");
        if (entry.contains("eigen_type")) {
            int et = static_cast<int>(get_int(entry, "eigen_type", where));
            if (is_x_minus_one(poly))
                eigen.plus = et;
            else if (is_x_plus_one(poly))
                eigen.minus = et;
            else
                throw Error(Errc::SchemaError, where + ": eigen_type only applies to X-1 / X+1");
        }
    }
    return CuspidalDatum::validate(GroupType(kind, ctx), get_int(j, "dual_dim", where), amap, eigen);
}

json descriptor_body_to_json(const SimpleCuspidalDescriptor& desc) {
    json j;
    j["q"] = desc.q;
    j["endo"] = endo_to_json(desc.endo);
    j["N"] = desc.N;
    j["factors"] = json::array({datum_to_json(desc.data[0]), datum_to_json(desc.data[1])});
    json sigs = json::array();
    for (const auto& [key, sig] : desc.involutions) {
        if (sig == Involution::Identity) continue;
        sigs.push_back(json{{"t", key.first}, {"m", key.second}, {"sig", involution_name(sig)}});
    }
    if (!sigs.empty()) j["involutions"] = sigs;
    if (desc.chi_twist) j["chi_twist"] = true;
    return j;
}

SimpleCuspidalDescriptor descriptor_body_from_json(const json& j, const std::string& where) {
    expect_fields(j, {"q", "endo", "N", "factors"}, {"involutions", "chi_twist"}, where);
    SimpleCuspidalDescriptor desc;
    desc.q = get_int(j, "q", where);
    desc.endo = endo_from_json(j.at("endo"), where + ".endo");
    desc.N = get_int(j, "N", where);
    if (!j.at("factors").is_array() || j.at("factors").size() != 2)
        throw Error(Errc::SchemaError, where + ": 'factors' must hold exactly two data");
    DualityContext ctx = desc.context();
    desc.data.push_back(datum_from_json(j.at("factors")[0], ctx, where + ".factors[0]"));
    desc.data.push_back(datum_from_json(j.at("factors")[1], ctx, where + ".factors[1]"));
    if (j.contains("involutions")) {
        for (const auto& s : j.at("involutions")) {
            expect_fields(s, {"t", "m", "sig"}, {}, where + ".involutions");
            desc.involutions[{static_cast<int>(get_int(s, "t", where)),
                              static_cast<int>(get_int(s, "m", where))}] =
                involution_from_string(s.at("sig").get<std::string>(), where);
        }
    }
    if (j.contains("chi_twist")) desc.chi_twist = j.at("chi_twist").get<bool>();
    desc.validate();
    return desc;
}

} // namespace

json poly_to_json(const MonicPoly& p) {
    json arr = json::array();
    for (auto c : p.coeffs()) arr.push_back(c);
    return arr;
}

MonicPoly poly_from_json(const json& j, const FiniteField& field) {
    if (!j.is_array() || j.size() < 2)
        throw Error(Errc::SchemaError, "polynomial must be an array of >= 2 coefficient indices");
    std::vector<FiniteField::Elt> coeffs;
    for (const auto& c : j) {
        if (!c.is_number_integer() || c.get<long long>() < 0 || c.get<long long>() >= field.q())
            throw Error(Errc::SchemaError, "coefficient index out of range for the field");
        coeffs.push_back(static_cast<FiniteField::Elt>(c.get<long long>()));
    }
    return MonicPoly(field, std::move(coeffs));
}

json descriptor_to_json(const SimpleCuspidalDescriptor& desc) {
    json j = descriptor_body_to_json(desc);
    j["version"] = kSchemaVersion;
    j["kind"] = "simple_cuspidal";
    return j;
}

SimpleCuspidalDescriptor descriptor_from_json(const json& j) {
    json body = j;
    expect_version(j, "simple_cuspidal");
    body.erase("version");
    body.erase("kind");
    return descriptor_body_from_json(body, "simple_cuspidal");
}

json general_to_json(const std::vector<GeneralPart>& parts) {
    json arr = json::array();
    for (const auto& part : parts) {
        json p = descriptor_body_to_json(part.desc);
        if (part.chi) p["chi_twist"] = true;
        arr.push_back(std::move(p));
    }
    return json{{"version", kSchemaVersion}, {"kind", "general_cuspidal"}, {"parts", arr}};
}

std::vector<GeneralPart> general_from_json(const json& j) {
    expect_version(j, "general_cuspidal");
    expect_fields(j, {"version", "kind", "parts"}, {}, "general_cuspidal");
    std::vector<GeneralPart> parts;
    for (const auto& p : j.at("parts")) {
        GeneralPart part;
        part.desc = descriptor_body_from_json(p, "general_cuspidal.parts");
        part.chi = part.desc.chi_twist;
        parts.push_back(std::move(part));
    }
    return parts;
}

namespace {

json rows_to_json(const std::vector<QBreakdownRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json blocks = json::array();
        for (long long b : row.blocks_plus) blocks.push_back(b);
        for (long long b : row.blocks_minus) blocks.push_back(b);
        arr.push_back(json{{"poly", poly_to_json(row.q_poly)},
                           {"m", row.m},
                           {"r0", rat_to_string(row.r0)},
                           {"r1", rat_to_string(row.r1)},
                           {"real_parts", json::array({rat_to_string(row.s_plus),
                                                       rat_to_string(row.s_minus)})},
                           {"blocks", blocks},
                           {"contribution", row.contribution}});
    }
    return arr;
}

} // namespace

json multiset_to_json(const IJordMultiset& ms) {
    // aggregate identical entries at serialization time
    std::map<std::tuple<std::string, std::vector<FiniteField::Elt>, bool, long long, long long>,
             long long>
        agg;
    for (const auto& e : ms.entries)
        ++agg[{e.endo_label, e.poly.coeffs(), e.chi_twist, e.m, e.deg_rho}];
    json arr = json::array();
    for (const auto& [key, mult] : agg) {
        const auto& [label, coeffs, chi, m, deg_rho] = key;
        json poly = json::array();
        for (auto c : coeffs) poly.push_back(c);
        arr.push_back(json{{"endo", label},
                           {"poly", poly},
                           {"chi_twist", chi},
                           {"m", m},
                           {"deg_rho", deg_rho},
                           {"multiplicity", mult}});
    }
    return arr;
}

json report_to_json(const IJordReport& rep) {
    return json{{"version", kSchemaVersion},
                {"kind", "ijord_report"},
                {"q_rows", rows_to_json(rep.rows)},
                {"multiset", multiset_to_json(rep.multiset)},
                {"total", rep.total},
                {"expected", rep.expected},
                {"identity", rep.identity_ok}};
}

json general_report_to_json(const IJordGeneralReport& rep) {
    json parts = json::array();
    for (const auto& part : rep.part_reports) parts.push_back(report_to_json(part));
    return json{{"version", kSchemaVersion},
                {"kind", "ijord_general_report"},
                {"parts", parts},
                {"multiset", multiset_to_json(rep.multiset)},
                {"total", rep.total},
                {"expected", rep.expected},
                {"identity", rep.identity_ok}};
}

json registry_to_json(const EndoRegistry& reg) {
    json classes = json::array();
    for (const auto& label : reg.class_labels()) {
        const EndoClassInvariants& cls = reg.cls(label);
        json c = endo_to_json(cls);
        c["square"] = reg.square_of(label);
        c["orbit"] = reg.orbit_of_endo(label).label;
        classes.push_back(std::move(c));
    }
    json orbits = json::array();
    for (const auto& label : reg.class_labels()) {
        const WildOrbit& orbit = reg.orbit_of_endo(label);
        orbits.push_back(json{{"label", orbit.label},
                              {"dim", orbit.dim},
                              {"self_dual", orbit.self_dual},
                              {"endo", orbit.paired_endo}});
    }
    json irreps = json::array();
    for (const auto& irrep : reg.irreps())
        irreps.push_back(json{{"id", irrep.id},
                              {"dim", irrep.dim},
                              {"parity", parity_name(irrep.parity)},
                              {"det", quad_char_name(irrep.det)},
                              {"orbit", irrep.orbit_label}});
    return json{{"version", kSchemaVersion},
                {"kind", "lparam_registry"},
                {"endo_classes", classes},
                {"orbits", orbits},
                {"irreps", irreps}};
}

EndoRegistry registry_from_json(const json& j) {
    expect_version(j, "lparam_registry");
    expect_fields(j, {"version", "kind", "endo_classes", "orbits", "irreps"}, {}, "lparam_registry");
    EndoRegistry reg;
    for (const auto& o : j.at("orbits")) {
        expect_fields(o, {"label", "dim", "self_dual", "endo"}, {}, "lparam_registry.orbits");
        reg.add_orbit(WildOrbit{o.at("label").get<std::string>(), get_int(o, "dim", "orbits"),
                                o.at("self_dual").get<bool>(), o.at("endo").get<std::string>()});
    }
    for (const auto& c : j.at("endo_classes")) {
        expect_fields(c, {"label", "degree", "e", "f", "square", "orbit"}, {"dual_type"},
                      "lparam_registry.endo_classes");
        json body = c;
        body.erase("square");
        body.erase("orbit");
        EndoClassInvariants cls = endo_from_json(body, "lparam_registry.endo_classes");
        reg.add_class(cls, c.at("square").get<std::string>(), c.at("orbit").get<std::string>());
    }
    for (const auto& s : j.at("irreps")) {
        expect_fields(s, {"id", "dim", "parity", "det", "orbit"}, {}, "lparam_registry.irreps");
        std::string parity = s.at("parity").get<std::string>();
        if (parity != "orthogonal" && parity != "symplectic")
            throw Error(Errc::SchemaError, "unknown parity '" + parity + "'");
        reg.add_irrep(IrrepDescriptor{
            s.at("id").get<std::string>(), get_int(s, "dim", "irreps"),
            parity == "orthogonal" ? Parity::Orthogonal : Parity::Symplectic,
            quad_char_from_string(s.at("det").get<std::string>(), "irreps"),
            s.at("orbit").get<std::string>()});
    }
    reg.validate();
    return reg;
}

EnumerationRequest enumeration_request_from_json(const json& j) {
    expect_version(j, "enumeration_request");
    expect_fields(j, {"version", "kind", "N", "registry"}, {"node_budget"}, "enumeration_request");
    EnumerationRequest req;
    req.n_half = get_int(j, "N", "enumeration_request");
    req.registry = registry_from_json(j.at("registry"));
    if (j.contains("node_budget")) req.node_budget = get_int(j, "node_budget", "enumeration_request");
    return req;
}

DescriptorKind descriptor_kind(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("version"))
        throw Error(Errc::SchemaError, "descriptor files carry 'version' and 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "simple_cuspidal") return DescriptorKind::SimpleCuspidal;
    if (kind == "general_cuspidal") return DescriptorKind::GeneralCuspidal;
    if (kind == "lparam_registry") return DescriptorKind::LParamRegistry;
    if (kind == "enumeration_request") return DescriptorKind::EnumerationRequest;
    throw Error(Errc::SchemaError, "unknown descriptor kind '" + kind + "'");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(Errc::SchemaError, "JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace ijord
