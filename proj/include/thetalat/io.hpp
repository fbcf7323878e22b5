#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "thetalat/appell_humbert.hpp"

namespace thetalat {

// parse failure with the offending field path in the message
struct ParseError : std::runtime_error {
    ParseError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what) {}
};

// one datum as it appears on the wire: gram mode carries the 2g x 2g Gram
// matrix, period mode carries periods (2g x g) and the g x g Hermitian form
struct DataBlock {
    std::string mode;  // "gram" or "period"
    int g = 0;
    GaussMat gram;
    GaussMat period;
    GaussMat hermitian;
    std::vector<Rational> alpha_t;
};

struct InputDocument {
    std::optional<DataBlock> main;
    std::optional<DataBlock> pencil_base;
    std::optional<DataBlock> pencil_dominating;
};

InputDocument parse_document(const std::string& text);

// canonical serialization: sorted keys, two-space indent, trailing newline;
// rationals as "p" or "p/q"
std::string serialize_document(const InputDocument& doc);

AHData to_ah_data(const DataBlock& b);
DataBlock from_ah_data(const AHData& d);

}  // namespace thetalat
