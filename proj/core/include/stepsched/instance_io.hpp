#pragma once

// JSON interchange for instances:
//   {"name": str, "seed": int|null, "jobs": [{"id","a","b","d","h"}, ...]}
// Jobs are written sorted by id; output is deterministic for a given instance.

#include <filesystem>
#include <string>

#include "stepsched/schedule.hpp"

namespace stepsched {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses and validates. Throws FormatError on malformed JSON or missing
/// fields and InvalidInstance when the data violates job invariants.
Instance instance_from_json(const std::string& text);

/// Two-space indented JSON with a trailing newline.
std::string instance_to_json(const Instance& instance);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& instance, const std::filesystem::path& path);

/// Reads a whole file. Throws std::runtime_error when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Writes `text` with LF line endings as given. Throws on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Eight-job reference instance used throughout the tests and docs.
Instance example8_instance();

}  // namespace stepsched
