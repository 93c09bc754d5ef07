#pragma once

#include <optional>
#include <string>

#include "exotic/qubit.hpp"

namespace exotic {

struct CodeTerm {
    long weight = 0;
    int sign = 1;
    bool exact = false;  // squared coefficient known as an exact rational
    Rat square;
    std::string decimal;  // signed, 30 significant digits
};

struct CodeFileData {
    int format_version = 1;
    long n = 0;
    std::string j;
    std::string group, irrep;
    std::vector<std::string> selector;
    std::vector<std::vector<CodeTerm>> codewords;  // [|0bar>, |1bar>]
};

CodeFileData make_codefile(const QubitCode& code);

// Deterministic serialization: fixed key order, exact integers and decimals
// carried as strings.  Byte-stable across runs.
std::string codefile_json(const CodeFileData& data);
void write_codefile(const CodeFileData& data, const std::string& path);
CodeFileData read_codefile(const std::string& path);  // throws MalformedFile

// Exact reconstruction of the code from a file.  Succeeds when every term
// carries an exact square and the cross-weight ratios are perfect squares
// (always the case for files written by this library); nullopt otherwise.
std::optional<QubitCode> codefile_to_code(const CodeFileData& data);

// Human-readable codeword display in the sqrt(p)/q style.
std::string render_display(const CodeFileData& data);

} // namespace exotic
