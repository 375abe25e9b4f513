#pragma once

// Text renderings of sequence windows. All numbers are written in full decimal.
//
//   bfile  "index value\n" per term, no header
//   csv    "index,value\n" header, then one row per term
//   json   {"schema":1,"family":...,"offset":...,"terms":["...", ...]}
//   table  aligned human-readable columns

#include "seqforge/recurrences.hpp"

#include <string>
#include <string_view>

namespace seqforge {

inline constexpr int kJsonSchemaVersion = 1;

enum class OutputFormat { table, csv, json, bfile };

/// Throws std::invalid_argument for unknown names.
OutputFormat parse_output_format(std::string_view name);
std::string_view to_string(OutputFormat format);

std::string render(const SequenceWindow& w, OutputFormat format);

std::string to_bfile(const SequenceWindow& w);
std::string to_csv(const SequenceWindow& w);
std::string to_json(const SequenceWindow& w);
std::string to_table(const SequenceWindow& w);

/// Reads a b-file. Blank lines and '#' comments are skipped; indices must be consecutive.
/// Throws std::invalid_argument on malformed input.
SequenceWindow parse_bfile(std::string_view text, std::string id = {});

/// Inverse of to_json. Throws std::invalid_argument on malformed input or a schema mismatch.
SequenceWindow parse_json(std::string_view text);

}  // namespace seqforge
