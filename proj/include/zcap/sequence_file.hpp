#pragma once

#include "zcap/arrays.hpp"

#include "json.hpp"

#include <istream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace zcap {

/// One persisted sequence or array. Z_q data is written as
/// {"q", "values"} (1-D) or {"q", "rows", "cols", "values": [[...]]} (2-D);
/// root-of-unity data uses "modulus"/"exponents" in the same shapes.
struct SequenceFile
{
    std::variant<ZqVector, Zq2DArray, RootVector, RootArray> data;
    std::optional<std::string> label;

    bool is_1d() const noexcept;
    /// Common-ground views used by the verifier.
    RootVector as_root_vector() const;
    RootArray as_root_array() const;

    friend bool operator==(const SequenceFile&, const SequenceFile&) = default;
};

nlohmann::json to_json(const SequenceFile& file);
/// Throws ParseError on schema violations.
SequenceFile sequence_file_from_json(const nlohmann::json& doc);

/// Compact single-line rendering with sorted keys.
std::string dump(const SequenceFile& file);
SequenceFile parse_sequence_file(const std::string& text);

/// Reads every non-blank line of `in` as one document.
std::vector<SequenceFile> read_sequence_stream(std::istream& in);

} // namespace zcap
