#include "pathft/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pathft {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& v) { return json::array({v.real(), v.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("expected [re, im] pair");
    }
    const double re = j[0].get<double>();
    const double im = j[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("non-finite value");
    return {re, im};
}

std::string kind_name(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::Level1: return "level1";
        case LatticeKind::Level2TypeI: return "type1";
        case LatticeKind::Level2TypeII: return "type2";
    }
    return "?";
}

LatticeKind kind_from_name(const std::string& name) {
    if (name == "level1") return LatticeKind::Level1;
    if (name == "type1") return LatticeKind::Level2TypeI;
    if (name == "type2") return LatticeKind::Level2TypeII;
    throw ParseError("unknown lattice kind '" + name + "'");
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

i64 get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ParseError(std::string("missing integer field '") + key + "'");
    }
    return j[key].get<i64>();
}

PathSpace space_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("expected space object");
    const std::string variant =
        j.contains("variant") && j["variant"].is_string() ? j["variant"].get<std::string>() : "";
    const LatticeKind kind = kind_from_name(variant);
    if (kind == LatticeKind::Level1) throw ParseError("space variant must be type1 or type2");
    try {
        return make_path_space(kind, get_int(j, "H"), get_int(j, "Hp"));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

json space_to_json(const PathSpace& space) {
    return json{{"H", space.domain.H},
                {"Hp", space.codomain.Hp},
                {"variant", kind_name(space.codomain.kind)}};
}

}  // namespace

std::string grid_to_json(const GridFunction& phi) {
    json values = json::array();
    for (const Complex& v : phi.values) values.push_back(complex_to_json(v));
    json j{{"kind", kind_name(phi.lattice.kind)}, {"H", phi.lattice.H}, {"values", values}};
    if (phi.lattice.kind != LatticeKind::Level1) j["Hp"] = phi.lattice.Hp;
    return j.dump();
}

GridFunction grid_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ParseError("grid function: missing kind");
    }
    const LatticeKind kind = kind_from_name(j["kind"].get<std::string>());
    LatticeSpec lat;
    try {
        lat = kind == LatticeKind::Level1
                  ? make_lattice(kind, get_int(j, "H"))
                  : make_lattice(kind, get_int(j, "H"), get_int(j, "Hp"));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    if (!j.contains("values") || !j["values"].is_array()) {
        throw ParseError("grid function: missing values");
    }
    const json& values = j["values"];
    if (static_cast<i64>(values.size()) != lat.count) {
        throw ParseError("grid function: expected " + std::to_string(lat.count) +
                         " values, got " + std::to_string(values.size()));
    }
    GridFunction phi = make_grid(lat);
    for (std::size_t i = 0; i < values.size(); ++i) phi.values[i] = complex_from_json(values[i]);
    return phi;
}

std::string path_to_json(const PathFunction& a) {
    json j{{"H", a.space.domain.H},
           {"Hp", a.space.codomain.Hp},
           {"variant", kind_name(a.space.codomain.kind)},
           {"digits", a.digits}};
    return j.dump();
}

PathFunction path_from_json(const std::string& text) {
    const json j = parse(text);
    const PathSpace space = space_from_json(j);
    if (!j.contains("digits") || !j["digits"].is_array()) {
        throw ParseError("path function: missing digits");
    }
    std::vector<i64> digits;
    for (const json& d : j["digits"]) {
        if (!d.is_number_integer()) throw ParseError("path function: digits must be integers");
        digits.push_back(d.get<i64>());
    }
    try {
        return make_path(space, std::move(digits));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string functional_to_json(const Functional& f) {
    json j{{"space", space_to_json(f.space)}};
    if (f.is_dense()) {
        j["kind"] = "dense";
        json values = json::array();
        for (const Complex& v : f.dense().values) values.push_back(complex_to_json(v));
        j["values"] = values;
    } else if (f.is_product()) {
        j["kind"] = "product";
        json sites = json::array();
        for (const auto& site : f.product().sites) {
            json sv = json::array();
            for (const Complex& v : site) sv.push_back(complex_to_json(v));
            sites.push_back(sv);
        }
        j["sites"] = sites;
    } else {
        j["kind"] = "builtin";
        const BuiltinRepr& b = f.builtin();
        switch (b.name) {
            case BuiltinName::One: j["name"] = "one"; break;
            case BuiltinName::Delta: j["name"] = "delta"; break;
            case BuiltinName::DeltaPow:
                j["name"] = "delta_pow";
                j["power"] = b.power;
                break;
            case BuiltinName::Chirp: j["name"] = "chirp"; break;
            case BuiltinName::Gaussian: j["name"] = "gaussian"; break;
            case BuiltinName::ShiftedGaussian:
                j["name"] = "shifted_gaussian";
                j["b"] = b.shift_digits;
                break;
        }
    }
    return j.dump();
}

Functional functional_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("space")) throw ParseError("functional: missing space");
    const PathSpace space = space_from_json(j["space"]);
    const std::string kind =
        j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    try {
        if (kind == "dense") {
            if (!j.contains("values") || !j["values"].is_array()) {
                throw ParseError("functional: missing values");
            }
            const i64 total = path_count(space);
            if (static_cast<i64>(j["values"].size()) != total) {
                throw ParseError("functional: expected " + std::to_string(total) + " values");
            }
            std::vector<Complex> values;
            values.reserve(j["values"].size());
            for (const json& v : j["values"]) values.push_back(complex_from_json(v));
            return make_dense(space, std::move(values));
        }
        if (kind == "product") {
            if (!j.contains("sites") || !j["sites"].is_array()) {
                throw ParseError("functional: missing sites");
            }
            if (static_cast<i64>(j["sites"].size()) != space.sites()) {
                throw ParseError("functional: expected " + std::to_string(space.sites()) +
                                 " site vectors");
            }
            std::vector<std::vector<Complex>> sites;
            for (const json& sv : j["sites"]) {
                if (!sv.is_array() || static_cast<i64>(sv.size()) != space.period()) {
                    throw ParseError("functional: site vector length != period");
                }
                std::vector<Complex> site;
                site.reserve(sv.size());
                for (const json& v : sv) site.push_back(complex_from_json(v));
                sites.push_back(std::move(site));
            }
            return make_product(space, std::move(sites));
        }
        if (kind == "builtin") {
            const std::string name =
                j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
            if (name == "one") return one2(space);
            if (name == "delta") return delta2(space);
            if (name == "delta_pow") {
                if (!j.contains("power") || !j["power"].is_number()) {
                    throw ParseError("functional: delta_pow requires power");
                }
                return delta_pow2(space, j["power"].get<double>());
            }
            if (name == "chirp") return chirp_functional(space);
            if (name == "gaussian") return gaussian_functional(space);
            if (name == "shifted_gaussian") {
                if (!j.contains("b") || !j["b"].is_array()) {
                    throw ParseError("functional: shifted_gaussian requires b");
                }
                std::vector<i64> digits;
                for (const json& d : j["b"]) {
                    if (!d.is_number_integer()) throw ParseError("functional: b digits");
                    digits.push_back(d.get<i64>());
                }
                return shifted_gaussian2(space, make_path(space, std::move(digits)));
            }
            throw ParseError("functional: unknown builtin '" + name + "'");
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    throw ParseError("functional: kind must be dense, product or builtin");
}

std::string report_to_json(const VerificationReport& report) {
    json params = json::object();
    for (const auto& [k, v] : report.parameters) params[k] = v;
    json records = json::array();
    for (const IdentityRecord& r : report.records) {
        json jr{{"name", r.name},
                {"max_abs_dev", r.max_abs_dev},
                {"max_rel_dev", r.max_rel_dev},
                {"pass", r.pass}};
        if (r.informational) jr["informational"] = true;
        records.push_back(jr);
    }
    json j{{"suite", report.suite},
           {"parameters", params},
           {"pass", report.pass()},
           {"records", records}};
    return j.dump(2);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

}  // namespace pathft
