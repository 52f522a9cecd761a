#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qss/code.hpp"

namespace qss {

namespace {

using nlohmann::json;

// nlohmann reports a byte offset; convert it to line/column for error text.
std::pair<size_t, size_t> line_col(const std::string& text, size_t byte) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

uint32_t get_u32(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
        throw ParseError(std::string("code spec: \"") + key +
                         "\" must be a non-negative integer");
    }
    return j[key].get<uint32_t>();
}

}  // namespace

LinearCode load_code_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(json_text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("field") || !j.contains("generator")) {
            throw ParseError("code spec: expected object with \"field\" and \"generator\"");
        }
        const json& jf = j["field"];
        uint32_t p = get_u32(jf, "p");
        uint32_t m = get_u32(jf, "m");
        FieldPtr field;
        if (jf.contains("poly")) {
            if (!jf["poly"].is_array()) throw ParseError("code spec: \"poly\" must be an array");
            std::vector<uint32_t> poly;
            for (const auto& c : jf["poly"]) {
                if (!c.is_number_unsigned()) {
                    throw ParseError("code spec: polynomial coefficients must be non-negative "
                                     "integers");
                }
                poly.push_back(c.get<uint32_t>());
            }
            field = Field::make(p, m, poly);
        } else {
            field = Field::make(p, m);
        }
        const json& jg = j["generator"];
        if (!jg.is_array() || jg.empty()) {
            throw ParseError("code spec: \"generator\" must be a nonempty array of rows");
        }
        std::vector<std::vector<uint32_t>> rows;
        for (const auto& jr : jg) {
            if (!jr.is_array() || jr.empty()) {
                throw ParseError("code spec: generator rows must be nonempty arrays");
            }
            std::vector<uint32_t> row;
            for (const auto& e : jr) {
                if (!e.is_number_unsigned() || e.get<uint64_t>() >= field->q()) {
                    throw ParseError("code spec: generator entries must be integers in [0, " +
                                     std::to_string(field->q()) + ")");
                }
                row.push_back(e.get<uint32_t>());
            }
            rows.push_back(std::move(row));
        }
        return LinearCode(GFMatrix::from_rows(field, rows));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        // field/matrix construction problems are input problems here
        throw ParseError(std::string("code spec invalid: ") + e.what());
    }
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open code spec file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_code_spec(ss.str());
}

std::string code_spec_to_json(const LinearCode& code) {
    json jf;
    jf["p"] = code.field()->p();
    jf["m"] = code.field()->m();
    jf["poly"] = code.field()->modulus();
    json jg = json::array();
    for (size_t r = 0; r < code.generator().rows(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < code.generator().cols(); ++c) {
            row.push_back(code.generator().at(r, c));
        }
        jg.push_back(std::move(row));
    }
    json j;
    j["field"] = std::move(jf);
    j["generator"] = std::move(jg);
    return j.dump();
}

}  // namespace qss
