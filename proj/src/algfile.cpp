#include "homleib/algfile.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace homleib {

namespace {

using json = nlohmann::ordered_json;

// dim^3 rationals must stay allocatable even for adversarial files
constexpr std::size_t max_file_dim = 256;

[[noreturn]] void reject(const std::string& why) {
    throw parse_error("algebra file: " + why);
}

Rational entry(const json& j, const char* table) {
    if (!j.is_string())
        reject(std::string(table) + " entries must be rational strings, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

const json& field_of(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) reject(std::string("missing key '") + key + "'");
    return *it;
}

const std::vector<std::pair<std::string, std::function<AlgebraSpec()>>>& builtins() {
    static const std::vector<std::pair<std::string, std::function<AlgebraSpec()>>> table = {
        {"example_L", fixture_example_L},
        {"example_A", fixture_example_A},
        {"abelian1", [] { return fixture_abelian(1); }},
        {"abelian2", [] { return fixture_abelian(2); }},
        {"abelian3", [] { return fixture_abelian(3); }},
        {"abelian2_twisted", fixture_abelian_twisted2},
        {"rational_line", fixture_rational_line},
        {"leibniz2", fixture_leibniz2},
        {"zinbiel2", fixture_zinbiel2},
    };
    return table;
}

}  // namespace

AlgebraSpec AlgebraFile::checked() const {
    return AlgebraSpec::validated(name, kind, dim, structure, twist);
}

AlgebraSpec AlgebraFile::unchecked() const {
    return AlgebraSpec::untyped(name, dim, structure, twist);
}

AlgebraFile parse_algebra_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        reject(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) reject("top level must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "name" && key != "kind" && key != "dim" && key != "field" &&
            key != "product" && key != "twist")
            reject("unknown key '" + key + "'");
    }

    AlgebraFile out;
    const json& jname = field_of(j, "name");
    if (!jname.is_string() || jname.get<std::string>().empty())
        reject("'name' must be a nonempty string");
    out.name = jname.get<std::string>();

    const json& jkind = field_of(j, "kind");
    if (!jkind.is_string()) reject("'kind' must be a string");
    auto kind = kind_from_name(jkind.get<std::string>());
    if (!kind) reject("unknown kind '" + jkind.get<std::string>() + "'");
    out.kind = *kind;

    const json& jdim = field_of(j, "dim");
    if (!jdim.is_number_unsigned() || jdim.get<std::size_t>() == 0)
        reject("'dim' must be a positive integer");
    out.dim = jdim.get<std::size_t>();
    if (out.dim > max_file_dim)
        throw cap_error("algebra file: dim " + std::to_string(out.dim) + " exceeds the bound " +
                        std::to_string(max_file_dim));

    const json& jfield = field_of(j, "field");
    if (!jfield.is_string() || jfield.get<std::string>() != "rational")
        reject("'field' must be the string \"rational\"");

    const std::size_t d = out.dim;
    const json& jprod = field_of(j, "product");
    if (!jprod.is_array() || jprod.size() != d)
        reject("'product' must be an array of dim rows");
    out.structure.reserve(d * d * d);
    for (const json& row : jprod) {
        if (!row.is_array() || row.size() != d)
            reject("'product' rows must be arrays of dim columns");
        for (const json& cell : row) {
            if (!cell.is_array() || cell.size() != d)
                reject("'product' cells must be arrays of dim coefficients");
            for (const json& coeff : cell) out.structure.push_back(entry(coeff, "'product'"));
        }
    }

    const json& jtwist = field_of(j, "twist");
    if (!jtwist.is_array() || jtwist.size() != d)
        reject("'twist' must be an array of dim rows");
    Matrix twist(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        const json& row = jtwist[r];
        if (!row.is_array() || row.size() != d)
            reject("'twist' rows must be arrays of dim entries");
        for (std::size_t c = 0; c < d; ++c) twist.at(r, c) = entry(row[c], "'twist'");
    }
    out.twist = std::move(twist);
    return out;
}

AlgebraFile read_algebra_source(const std::string& source) {
    constexpr std::string_view prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) {
        const std::string name = source.substr(prefix.size());
        for (const auto& [key, make] : builtins())
            if (key == name) return algebra_file_from_spec(make());
        std::string known;
        for (const auto& [key, make] : builtins()) {
            (void)make;
            known += known.empty() ? key : ", " + key;
        }
        throw parse_error("unknown builtin '" + name + "' (available: " + known + ")");
    }
    std::ifstream in(source, std::ios::binary);
    if (!in) throw parse_error("cannot read '" + source + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra_text(buffer.str());
}

AlgebraFile algebra_file_from_spec(const AlgebraSpec& spec) {
    AlgebraFile out;
    out.name = spec.name();
    out.kind = spec.kind();
    out.dim = spec.dim();
    out.structure = spec.structure();
    out.twist = spec.twist();
    return out;
}

std::string serialize_algebra(const AlgebraFile& file) {
    json j;
    j["name"] = file.name;
    j["kind"] = kind_name(file.kind);
    j["dim"] = file.dim;
    j["field"] = "rational";
    json product = json::array();
    const std::size_t d = file.dim;
    for (std::size_t i = 0; i < d; ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < d; ++jj) {
            json cell = json::array();
            for (std::size_t k = 0; k < d; ++k)
                cell.push_back(format_rational(file.structure[(i * d + jj) * d + k]));
            row.push_back(std::move(cell));
        }
        product.push_back(std::move(row));
    }
    j["product"] = std::move(product);
    json twist = json::array();
    for (std::size_t r = 0; r < d; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < d; ++c) row.push_back(format_rational(file.twist.at(r, c)));
        twist.push_back(std::move(row));
    }
    j["twist"] = std::move(twist);
    return j.dump(2) + "\n";
}

const std::vector<std::string>& builtin_algebra_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [key, make] : builtins()) {
            (void)make;
            out.push_back(key);
        }
        return out;
    }();
    return names;
}

}  // namespace homleib
