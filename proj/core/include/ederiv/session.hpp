#ifndef EDERIV_SESSION_HPP
#define EDERIV_SESSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "ederiv/claims.hpp"
#include "ederiv/maps.hpp"

namespace ederiv {

struct SessionOptions {
    std::optional<std::uint32_t> degree;
    std::optional<std::uint32_t> slack;
    std::optional<std::uint32_t> power;
    std::optional<std::uint32_t> multiplier;
    std::optional<std::string> claim;
    std::vector<std::string> lambdas;
    std::vector<std::string> generators;
};

/// One reproducible session: the ring, the map under study, and option
/// defaults. Parsed from a JSON document; every polynomial string must parse
/// in the declared ring and the map arity must match the variable count.
struct SessionSpec {
    unsigned variables = 0;
    unsigned conductor = 1;
    std::optional<std::string> map_kind;  // "endomorphism" or "derivation"
    std::vector<std::string> map_polynomials;
    SessionOptions options;

    FieldPtr field() const;
    RingPtr ring() const;
    std::optional<MapVariant> build_map() const;
    ClaimParams claim_params() const;

    static SessionSpec from_file(const std::string& path);
    static SessionSpec from_json_text(const std::string& text);
};

}  // namespace ederiv

#endif
