#include "zcap/sequence_file.hpp"

namespace zcap {

using nlohmann::json;

namespace {

template <typename... Fs>
struct overloaded : Fs...
{
    using Fs::operator()...;
};
template <typename... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

json vector_json(const ExponentVector& v)
{
    return json(std::vector<int>(v.data(), v.data() + v.size()));
}

json matrix_json(const ExponentMatrix& a)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        const ExponentVector row = a.row(i).transpose();
        rows.push_back(vector_json(row));
    }
    return rows;
}

int require_int(const json& doc, const char* key)
{
    if (!doc.contains(key) || !doc.at(key).is_number_integer())
        throw ParseError(std::string("sequence file: missing or non-integer \"") + key + "\"");
    return doc.at(key).get<int>();
}

ExponentVector parse_vector(const json& node, const char* key)
{
    if (!node.is_array() || node.empty())
        throw ParseError(std::string("sequence file: \"") + key + "\" must be a non-empty list");
    ExponentVector out(static_cast<Eigen::Index>(node.size()));
    for (std::size_t k = 0; k < node.size(); ++k) {
        if (!node[k].is_number_integer())
            throw ParseError(std::string("sequence file: non-integer entry in \"") + key + "\"");
        out(static_cast<Eigen::Index>(k)) = node[k].get<int>();
    }
    return out;
}

ExponentMatrix parse_matrix(const json& doc, const char* key)
{
    const int rows = require_int(doc, "rows");
    const int cols = require_int(doc, "cols");
    const json& node = doc.at(key);
    if (rows < 1 || cols < 1 || !node.is_array() || static_cast<int>(node.size()) != rows)
        throw ParseError(std::string("sequence file: \"") + key + "\" must hold \"rows\" lists");
    ExponentMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const ExponentVector row = parse_vector(node[i], key);
        if (row.size() != cols)
            throw ParseError(std::string("sequence file: row ") + std::to_string(i) + " does not have \"cols\" entries");
        out.row(i) = row.transpose();
    }
    return out;
}

} // namespace

bool SequenceFile::is_1d() const noexcept
{
    return std::holds_alternative<ZqVector>(data) || std::holds_alternative<RootVector>(data);
}

RootVector SequenceFile::as_root_vector() const
{
    return std::visit(overloaded{
                          [](const ZqVector& v) { return lift(v); },
                          [](const RootVector& v) { return v; },
                          [](const auto&) -> RootVector {
                              throw std::invalid_argument("sequence file holds a 2-D array, not a sequence");
                          },
                      },
                      data);
}

RootArray SequenceFile::as_root_array() const
{
    return std::visit(overloaded{
                          [](const ZqVector& v) { return as_row(lift(v)); },
                          [](const RootVector& v) { return as_row(v); },
                          [](const Zq2DArray& a) { return lift(a); },
                          [](const RootArray& a) { return a; },
                      },
                      data);
}

json to_json(const SequenceFile& file)
{
    json doc = std::visit(overloaded{
                              [](const ZqVector& v) { return json{{"q", v.q}, {"values", vector_json(v.values)}}; },
                              [](const Zq2DArray& a) {
                                  return json{{"q", a.q},
                                              {"rows", a.rows()},
                                              {"cols", a.cols()},
                                              {"values", matrix_json(a.values)}};
                              },
                              [](const RootVector& v) {
                                  return json{{"modulus", v.modulus}, {"exponents", vector_json(v.exponents)}};
                              },
                              [](const RootArray& a) {
                                  return json{{"modulus", a.modulus},
                                              {"rows", a.rows()},
                                              {"cols", a.cols()},
                                              {"exponents", matrix_json(a.exponents)}};
                              },
                          },
                          file.data);
    if (file.label)
        doc["label"] = *file.label;
    return doc;
}

SequenceFile sequence_file_from_json(const json& doc)
{
    if (!doc.is_object())
        throw ParseError("sequence file: document must be a JSON object");
    SequenceFile file;
    if (doc.contains("label")) {
        if (!doc.at("label").is_string())
            throw ParseError("sequence file: \"label\" must be a string");
        file.label = doc.at("label").get<std::string>();
    }
    const bool zq = doc.contains("q");
    const bool roots = doc.contains("modulus");
    if (zq == roots)
        throw ParseError("sequence file: exactly one of \"q\" or \"modulus\" is required");
    const char* key = zq ? "values" : "exponents";
    if (!doc.contains(key))
        throw ParseError(std::string("sequence file: missing \"") + key + "\"");
    const bool two_d = doc.contains("rows") || doc.contains("cols");

    try {
        if (zq) {
            const int q = require_int(doc, "q");
            require_even_modulus(q, "sequence file q");
            if (two_d)
                file.data = Zq2DArray(q, parse_matrix(doc, key));
            else
                file.data = ZqVector(q, parse_vector(doc.at(key), key));
        } else {
            const int modulus = require_int(doc, "modulus");
            if (two_d)
                file.data = RootArray(modulus, parse_matrix(doc, key));
            else
                file.data = RootVector(modulus, parse_vector(doc.at(key), key));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("sequence file: ") + e.what());
    }
    return file;
}

std::string dump(const SequenceFile& file) { return to_json(file).dump(); }

SequenceFile parse_sequence_file(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("sequence file: invalid JSON: ") + e.what());
    }
    return sequence_file_from_json(doc);
}

std::vector<SequenceFile> read_sequence_stream(std::istream& in)
{
    std::vector<SequenceFile> out;
    std::string line;
    while (std::getline(in, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            out.push_back(parse_sequence_file(line));
    return out;
}

} // namespace zcap
