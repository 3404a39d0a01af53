#include "ederiv/session.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ederiv/errors.hpp"
#include "ederiv/parser.hpp"

namespace ederiv {

namespace {

using nlohmann::json;

std::uint32_t as_u32(const json& j, const std::string& key) {
    if (!j.is_number_unsigned())
        throw InputError("session field '" + key + "' must be a non-negative integer");
    return j.get<std::uint32_t>();
}

}  // namespace

FieldPtr SessionSpec::field() const { return CyclotomicField::create(conductor); }

RingPtr SessionSpec::ring() const {
    if (variables == 0) throw InputError("session must declare at least one variable");
    return PolyRing::create(field(), variables);
}

std::optional<MapVariant> SessionSpec::build_map() const {
    if (!map_kind) return std::nullopt;
    const RingPtr r = ring();
    if (map_polynomials.size() != variables)
        throw InputError("map arity (" + std::to_string(map_polynomials.size()) +
                         ") does not match the variable count (" +
                         std::to_string(variables) + ")");
    std::vector<Polynomial> polys;
    for (const auto& s : map_polynomials) polys.push_back(parse_polynomial(s, r));
    if (*map_kind == "endomorphism") {
        Endomorphism phi;
        phi.images = std::move(polys);
        return MapVariant{EDerivation{std::move(phi)}};
    }
    if (*map_kind == "derivation") {
        Derivation d;
        d.coeffs = std::move(polys);
        return MapVariant{d};
    }
    throw InputError("map kind must be 'endomorphism' or 'derivation', got '" +
                     *map_kind + "'");
}

ClaimParams SessionSpec::claim_params() const {
    ClaimParams p;
    p.field = field();
    if (map_kind) p.map = build_map();
    p.lambdas = options.lambdas;
    p.generators = options.generators;
    if (options.degree) p.degree = *options.degree;
    if (options.power) p.power = *options.power;
    if (options.multiplier) p.multiplier = *options.multiplier;
    p.nvars = variables;
    return p;
}

SessionSpec SessionSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read session file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

SessionSpec SessionSpec::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("session file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("session file must be a JSON object");

    SessionSpec spec;
    if (!j.contains("variables") || !j.contains("conductor"))
        throw InputError("session file needs 'variables' and 'conductor'");
    spec.variables = as_u32(j.at("variables"), "variables");
    spec.conductor = as_u32(j.at("conductor"), "conductor");
    if (spec.conductor == 0) throw InputError("conductor must be >= 1");

    if (j.contains("map")) {
        const json& m = j.at("map");
        if (!m.is_object() || !m.contains("kind") || !m.contains("polynomials"))
            throw InputError("session 'map' needs 'kind' and 'polynomials'");
        spec.map_kind = m.at("kind").get<std::string>();
        for (const auto& s : m.at("polynomials"))
            spec.map_polynomials.push_back(s.get<std::string>());
    }

    if (j.contains("options")) {
        const json& o = j.at("options");
        if (o.contains("degree")) spec.options.degree = as_u32(o.at("degree"), "degree");
        if (o.contains("slack")) spec.options.slack = as_u32(o.at("slack"), "slack");
        if (o.contains("power")) spec.options.power = as_u32(o.at("power"), "power");
        if (o.contains("multiplier"))
            spec.options.multiplier = as_u32(o.at("multiplier"), "multiplier");
        if (o.contains("claim")) spec.options.claim = o.at("claim").get<std::string>();
        if (o.contains("lambdas"))
            for (const auto& s : o.at("lambdas"))
                spec.options.lambdas.push_back(s.get<std::string>());
        if (o.contains("generators"))
            for (const auto& s : o.at("generators"))
                spec.options.generators.push_back(s.get<std::string>());
    }

    // Validate eagerly so malformed sessions fail at load time.
    spec.build_map();
    return spec;
}

}  // namespace ederiv
