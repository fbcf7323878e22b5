#include "thetalat/io.hpp"

#include <json.hpp>

namespace thetalat {

using nlohmann::json;

namespace {

Rational rational_at(const json& j, const std::string& path) {
    if (!j.is_string())
        throw ParseError(path, "expected a rational string");
    std::string s = j.get<std::string>();
    try {
        return parse_rational(s);
    } catch (const std::invalid_argument& e) {
        throw ParseError(path, e.what());
    }
}

Gaussian gaussian_at(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw ParseError(path, "expected an object with re and im");
    return Gaussian(rational_at(j.at("re"), path + ".re"),
                    rational_at(j.at("im"), path + ".im"));
}

GaussMat matrix_at(const json& j, const std::string& path, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ParseError(path, "expected " + std::to_string(rows) + " rows");
    GaussMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        std::string rp = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError(rp, "expected " + std::to_string(cols) + " entries");
        for (int k = 0; k < cols; ++k)
            m(i, k) = gaussian_at(row.at(k), rp + "[" + std::to_string(k) + "]");
    }
    return m;
}

DataBlock block_at(const json& j, const std::string& path) {
    if (!j.is_object())
        throw ParseError(path, "expected an object");
    DataBlock b;
    if (!j.contains("mode") || !j.at("mode").is_string())
        throw ParseError(path + ".mode", "expected \"gram\" or \"period\"");
    b.mode = j.at("mode").get<std::string>();
    if (b.mode != "gram" && b.mode != "period")
        throw ParseError(path + ".mode", "expected \"gram\" or \"period\"");
    if (!j.contains("g") || !j.at("g").is_number_integer())
        throw ParseError(path + ".g", "expected a positive integer");
    b.g = j.at("g").get<int>();
    if (b.g < 1)
        throw ParseError(path + ".g", "expected a positive integer");
    if (b.mode == "gram") {
        if (!j.contains("gram"))
            throw ParseError(path + ".gram", "missing");
        b.gram = matrix_at(j.at("gram"), path + ".gram", 2 * b.g, 2 * b.g);
    } else {
        if (!j.contains("period"))
            throw ParseError(path + ".period", "missing");
        if (!j.contains("hermitian"))
            throw ParseError(path + ".hermitian", "missing");
        b.period = matrix_at(j.at("period"), path + ".period", 2 * b.g, b.g);
        b.hermitian = matrix_at(j.at("hermitian"), path + ".hermitian", b.g, b.g);
    }
    if (!j.contains("alpha_t") || !j.at("alpha_t").is_array() ||
        static_cast<int>(j.at("alpha_t").size()) != 2 * b.g)
        throw ParseError(path + ".alpha_t", "expected " + std::to_string(2 * b.g) + " entries");
    for (int i = 0; i < 2 * b.g; ++i)
        b.alpha_t.push_back(
            rational_at(j.at("alpha_t").at(i), path + ".alpha_t[" + std::to_string(i) + "]"));
    return b;
}

json block_to_json(const DataBlock& b) {
    json j;
    j["mode"] = b.mode;
    j["g"] = b.g;
    auto mat = [](const GaussMat& m) {
        json rows = json::array();
        for (int i = 0; i < m.rows; ++i) {
            json row = json::array();
            for (int k = 0; k < m.cols; ++k)
                row.push_back(json{{"im", rational_str(m(i, k).im)},
                                   {"re", rational_str(m(i, k).re)}});
            rows.push_back(std::move(row));
        }
        return rows;
    };
    if (b.mode == "gram") {
        j["gram"] = mat(b.gram);
    } else {
        j["period"] = mat(b.period);
        j["hermitian"] = mat(b.hermitian);
    }
    json at = json::array();
    for (const auto& t : b.alpha_t)
        at.push_back(rational_str(t));
    j["alpha_t"] = std::move(at);
    return j;
}

}  // namespace

InputDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("$", e.what());
    }
    if (!j.is_object())
        throw ParseError("$", "expected a JSON object");
    if (j.contains("schema") && (!j.at("schema").is_number_integer() ||
                                 j.at("schema").get<int>() != 1))
        throw ParseError("schema", "unsupported schema version");
    InputDocument doc;
    if (j.contains("mode"))
        doc.main = block_at(j, "$");
    if (j.contains("pencil")) {
        const json& p = j.at("pencil");
        if (!p.is_object())
            throw ParseError("pencil", "expected an object");
        if (!p.contains("base"))
            throw ParseError("pencil.base", "missing");
        if (!p.contains("dominating"))
            throw ParseError("pencil.dominating", "missing");
        doc.pencil_base = block_at(p.at("base"), "pencil.base");
        doc.pencil_dominating = block_at(p.at("dominating"), "pencil.dominating");
    }
    if (!doc.main && !doc.pencil_base)
        throw ParseError("$", "document carries neither a datum nor a pencil block");
    return doc;
}

std::string serialize_document(const InputDocument& doc) {
    json j;
    j["schema"] = 1;
    if (doc.main)
        for (auto& [k, v] : block_to_json(*doc.main).items())
            j[k] = v;
    if (doc.pencil_base && doc.pencil_dominating) {
        j["pencil"] = json{{"base", block_to_json(*doc.pencil_base)},
                           {"dominating", block_to_json(*doc.pencil_dominating)}};
    }
    return j.dump(2) + "\n";
}

AHData to_ah_data(const DataBlock& b) {
    try {
        if (b.mode == "gram")
            return make_gram_data(b.gram, b.alpha_t);
        return make_period_data(b.period, b.hermitian, b.alpha_t);
    } catch (const std::invalid_argument& e) {
        throw ParseError("$", e.what());
    }
}

DataBlock from_ah_data(const AHData& d) {
    DataBlock b;
    b.g = d.g;
    b.alpha_t = d.alpha_t;
    if (d.period) {
        b.mode = "period";
        b.period = d.period->periods;
        b.hermitian = d.period->hermitian;
    } else {
        b.mode = "gram";
        b.gram = d.gram;
    }
    return b;
}

}  // namespace thetalat
