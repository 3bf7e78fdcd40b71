#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nisat/formula.hpp"

namespace nisat {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Native format: a JSON array of arrays of nonzero integers.
Formula parse_native(std::string_view text);
std::string to_native(const Formula& f);

struct DimacsOptions {
  // Header clause count must match the body exactly.
  bool strict_count = false;
  // Accept empty clauses instead of rejecting the document. The formula
  // keeps only the nonempty clauses and `has_empty_clause` is set.
  bool allow_empty_clause = false;
};

struct DimacsResult {
  Formula formula;
  std::vector<std::string> warnings;
  bool has_empty_clause = false;
  std::int64_t declared_variables = 0;
  std::int64_t declared_clauses = 0;
};

DimacsResult parse_dimacs(std::string_view text, const DimacsOptions& options = {});
std::string to_dimacs(const Formula& f);

enum class InputFormat { automatic, dimacs, native };

InputFormat parse_format_name(std::string_view name);
/// Extension decides (.json native, .cnf/.dimacs DIMACS); otherwise the first
/// non-blank character does ('[' native).
InputFormat detect_format(const std::filesystem::path& path, std::string_view text);

DimacsResult load_formula(const std::filesystem::path& path, InputFormat format,
                          const DimacsOptions& options = {});

}  // namespace nisat
