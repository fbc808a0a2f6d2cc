#include "orbicurve/io.hpp"

#include <initializer_list>

namespace orbicurve {

namespace {

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + key; }
std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

void expect_object(const Json& v, const std::string& pointer, std::initializer_list<const char*> allowed)
{
    if (!v.is_object()) throw InputError(pointer, "expected an object");
    for (const auto& [key, value] : v.items()) {
        bool known = false;
        for (const char* a : allowed) known |= key == a;
        if (!known) throw InputError(child(pointer, key), "unknown key");
    }
}

const Json& require(const Json& obj, const std::string& pointer, const char* key)
{
    if (!obj.contains(key)) throw InputError(child(pointer, key), "missing required key");
    return obj.at(key);
}

const Json& expect_array(const Json& v, const std::string& pointer)
{
    if (!v.is_array()) throw InputError(pointer, "expected an array");
    return v;
}

std::int64_t as_int(const Json& v, const std::string& pointer)
{
    if (!v.is_number_integer()) throw InputError(pointer, "expected an integer");
    return v.get<std::int64_t>();
}

std::int64_t int_field(const Json& obj, const std::string& pointer, const char* key)
{
    return as_int(require(obj, pointer, key), child(pointer, key));
}

std::int64_t int_field_or(const Json& obj, const std::string& pointer, const char* key, std::int64_t fallback)
{
    return obj.contains(key) ? as_int(obj.at(key), child(pointer, key)) : fallback;
}

/// Runs f, turning std::invalid_argument into an InputError at pointer.
template <typename F>
auto at(const std::string& pointer, F f) -> decltype(f())
{
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(pointer, e.what());
    }
}

TwistedComponent parse_component(const Json& v, const std::string& pointer)
{
    expect_object(v, pointer, {"c", "d", "a", "b", "l1", "l2"});
    bool cd = v.contains("c") || v.contains("d");
    bool abl = v.contains("a") || v.contains("b") || v.contains("l1") || v.contains("l2");
    if (cd && abl) throw InputError(pointer, "give either {c, d} or {a, b, l1, l2}, not both");
    if (cd) {
        auto c = int_field(v, pointer, "c"), d = int_field(v, pointer, "d");
        return at(pointer, [&] { return present(c, d); });
    }
    auto a = int_field(v, pointer, "a"), b = int_field(v, pointer, "b");
    auto l1 = int_field(v, pointer, "l1"), l2 = int_field(v, pointer, "l2");
    return at(pointer, [&] { return TwistedComponent::make(a, b, l1, l2); });
}

CurveInput parse_curve(const Json& doc)
{
    CurveInput in;
    const auto& chain = expect_array(require(doc, "", "chain"), "/chain");
    if (chain.empty()) throw InputError("/chain", "a chain needs at least one component");
    std::vector<TwistedComponent> comps;
    for (std::size_t j = 0; j < chain.size(); ++j) comps.push_back(parse_component(chain[j], child("/chain", j)));
    in.chain = CurveChain::of(comps);
    auto validity = validate_chain(in.chain);
    if (!validity.valid()) {
        const auto& v = validity.violations.front();
        throw InputError(child("/chain", v.index), v.kind + ": " + v.detail);
    }
    if (!doc.contains("bundle")) return in;

    const auto& bundle = expect_array(doc.at("bundle"), "/bundle");
    std::vector<ChainBundle> summands;
    for (std::size_t i = 0; i < bundle.size(); ++i) {
        auto sp = child("/bundle", i);
        const auto& parts = expect_array(bundle[i], sp);
        if (parts.size() != comps.size())
            throw InputError(sp, "expected " + std::to_string(comps.size()) + " line bundles, one per component");
        std::vector<EqLineBundle> lines;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            auto pp = child(sp, j);
            expect_object(parts[j], pp, {"k1", "k2", "d"});
            auto k1 = int_field_or(parts[j], pp, "k1", 0), k2 = int_field_or(parts[j], pp, "k2", 0);
            auto d = int_field(parts[j], pp, "d");
            lines.push_back(at(pp, [&] { return EqLineBundle::make(comps[j], k1, k2, d); }));
        }
        summands.push_back(at(sp, [&] { return ChainBundle::make(in.chain, lines); }));
    }
    if (summands.empty()) throw InputError("/bundle", "a split bundle needs at least one summand");
    in.bundle = SplitBundle::make(std::move(summands));
    return in;
}

WPSModel parse_wps(const Json& v, const std::string& pointer)
{
    expect_object(v, pointer, {"weights", "bundle"});
    auto ints = [&](const char* key) {
        std::vector<std::int64_t> out;
        const auto& arr = expect_array(require(v, pointer, key), child(pointer, key));
        for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_int(arr[i], child(child(pointer, key), i)));
        return out;
    };
    auto weights = ints("weights");
    std::vector<std::int64_t> bundle;
    if (v.contains("bundle")) bundle = ints("bundle");
    return at(pointer, [&] { return WPSModel::make(weights, bundle); });
}

EffClass parse_class(const Json& v, const std::string& pointer)
{
    expect_object(v, pointer, {"theta", "detE", "extra"});
    auto theta = parse_rational(require(v, pointer, "theta"), child(pointer, "theta"));
    auto detE = parse_rational(require(v, pointer, "detE"), child(pointer, "detE"));
    std::vector<Rational> extra;
    if (v.contains("extra")) {
        const auto& arr = expect_array(v.at("extra"), child(pointer, "extra"));
        for (std::size_t i = 0; i < arr.size(); ++i)
            extra.push_back(parse_rational(arr[i], child(child(pointer, "extra"), i)));
    }
    return at(pointer, [&] { return EffClass::make(theta, detE, extra); });
}

InvariantTable parse_table(const Json& v, const std::string& pointer)
{
    InvariantTable table;
    const auto& arr = expect_array(v, pointer);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        auto ep = child(pointer, i);
        const auto& e = arr[i];
        expect_object(e, ep, {"beta", "sectors", "psi_power", "row", "col", "value"});
        InvariantEntry entry;
        entry.beta = parse_class(require(e, ep, "beta"), child(ep, "beta"));
        const auto& sectors = expect_array(require(e, ep, "sectors"), child(ep, "sectors"));
        if (sectors.size() != 2) throw InputError(child(ep, "sectors"), "expected [g1, g2]");
        entry.g1 = parse_rational(sectors[0], child(child(ep, "sectors"), 0));
        entry.g2 = parse_rational(sectors[1], child(child(ep, "sectors"), 1));
        entry.psi_power = int_field_or(e, ep, "psi_power", 0);
        entry.row = int_field(e, ep, "row");
        entry.col = int_field(e, ep, "col");
        entry.value = parse_rational(require(e, ep, "value"), child(ep, "value"));
        table.entries.push_back(std::move(entry));
    }
    return table;
}

Json class_json(const EffClass& b)
{
    Json j{{"theta", to_string(b.theta)}, {"detE", to_string(b.detE)}};
    if (!b.extra.empty()) {
        Json extra = Json::array();
        for (const auto& x : b.extra) extra.push_back(to_string(x));
        j["extra"] = extra;
    }
    return j;
}

Json wps_json(const WPSModel& m) { return Json{{"weights", m.weights}, {"bundle", m.bundle}}; }

} // namespace

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(const Json& v, const std::string& pointer)
{
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return at(pointer, [&] { return Rational::parse(v.get<std::string>()); });
    throw InputError(pointer, "expected an integer or a string \"p/q\"");
}

SectorAction parse_sector(std::string_view text)
{
    std::vector<Rational> weights;
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        weights.push_back(Rational::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return SectorAction::make(std::move(weights));
}

ParsedInput parse_input(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_input(doc);
}

ParsedInput parse_input(const Json& doc)
{
    expect_object(doc, "", {"chain", "bundle", "wps", "table"});
    if (doc.contains("chain")) {
        if (doc.contains("wps") || doc.contains("table"))
            throw InputError("", "a document describes either a chain or a wps model");
        return parse_curve(doc);
    }
    if (doc.contains("bundle")) throw InputError("/bundle", "a bundle needs a chain");
    if (!doc.contains("wps")) throw InputError("", "expected a \"chain\" or a \"wps\" key");
    auto model = parse_wps(doc.at("wps"), "/wps");
    if (!doc.contains("table")) return WPSInput{model};
    return SeriesInput{model, parse_table(doc.at("table"), "/table")};
}

Json serialize_input(const ParsedInput& input)
{
    if (const auto* c = std::get_if<CurveInput>(&input)) {
        Json chain = Json::array();
        for (const auto& comp : c->chain.components)
            chain.push_back(Json{{"a", comp.a}, {"b", comp.b}, {"l1", comp.l1}, {"l2", comp.l2}});
        Json doc{{"chain", chain}};
        if (c->bundle) {
            Json bundle = Json::array();
            for (const auto& L : c->bundle->summands) {
                Json parts = Json::array();
                for (const auto& p : L.parts) parts.push_back(Json{{"k1", p.k1}, {"k2", p.k2}, {"d", p.d}});
                bundle.push_back(parts);
            }
            doc["bundle"] = bundle;
        }
        return doc;
    }
    if (const auto* w = std::get_if<WPSInput>(&input)) return Json{{"wps", wps_json(w->model)}};
    const auto& s = std::get<SeriesInput>(input);
    Json table = Json::array();
    for (const auto& e : s.table.entries)
        table.push_back(Json{{"beta", class_json(e.beta)},
                             {"sectors", Json::array({to_string(e.g1), to_string(e.g2)})},
                             {"psi_power", e.psi_power},
                             {"row", e.row},
                             {"col", e.col},
                             {"value", to_string(e.value)}});
    return Json{{"wps", wps_json(s.model)}, {"table", table}};
}

} // namespace orbicurve
