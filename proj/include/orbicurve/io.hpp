#pragma once

#include "orbicurve/bundles.hpp"
#include "orbicurve/novikov.hpp"
#include "orbicurve/twisted_curve.hpp"
#include "orbicurve/wps.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace orbicurve {

using Json = nlohmann::ordered_json;

/// Schema or invariant violation in an input document, located by a JSON
/// pointer ("" for the document root).
class InputError : public std::invalid_argument {
public:
    InputError(std::string pointer, const std::string& message)
        : std::invalid_argument((pointer.empty() ? std::string("/") : pointer) + ": " + message),
          pointer_(std::move(pointer))
    {}
    [[nodiscard]] const std::string& pointer() const noexcept { return pointer_; }

private:
    std::string pointer_;
};

/// A chain and optionally a split bundle on it.
struct CurveInput {
    CurveChain chain;
    std::optional<SplitBundle> bundle;
};

struct WPSInput {
    WPSModel model;
};

/// A model with an invariant table for its bundle dual.
struct SeriesInput {
    WPSModel model;
    InvariantTable table;
};

using ParsedInput = std::variant<CurveInput, WPSInput, SeriesInput>;

/// Throws InputError on malformed JSON or any schema/invariant violation.
ParsedInput parse_input(std::string_view text);
ParsedInput parse_input(const Json& doc);

/// Canonical form: components as {a,b,l1,l2}, rationals as strings.
Json serialize_input(const ParsedInput& input);

Rational parse_rational(const Json& v, const std::string& pointer);
std::string to_string(const Rational& r);

/// Comma-separated fractional weights; "" is the empty list.
SectorAction parse_sector(std::string_view text);

} // namespace orbicurve
