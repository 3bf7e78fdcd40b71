#include "nisat/parse.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace nisat {

namespace {

using nlohmann::json;

Literal literal_from(std::int64_t v) {
  if (v == 0) throw ParseError("zero literal");
  if (v == std::numeric_limits<std::int64_t>::min()) throw ParseError("literal out of range");
  return Literal(v);
}

}  // namespace

Formula parse_native(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("top-level value must be an array of clauses");

  std::vector<Clause> clauses;
  clauses.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& c = doc[i];
    if (!c.is_array())
      throw ParseError("clause " + std::to_string(i + 1) + " is not an array");
    if (c.empty())
      throw ParseError("empty clause unsupported (clause " + std::to_string(i + 1) + ")");
    std::vector<Literal> lits;
    lits.reserve(c.size());
    for (const auto& v : c) {
      if (!v.is_number_integer())
        throw ParseError("non-integer entry in clause " + std::to_string(i + 1));
      if (v.is_number_unsigned() &&
          v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw ParseError("literal out of range");
      lits.push_back(literal_from(v.get<std::int64_t>()));
    }
    clauses.emplace_back(std::move(lits));
  }
  return Formula(std::move(clauses));
}

std::string to_native(const Formula& f) {
  json doc = json::array();
  for (const auto& c : f.clauses()) {
    json row = json::array();
    for (auto l : c.literals()) row.push_back(l.value());
    doc.push_back(std::move(row));
  }
  return doc.dump();
}

DimacsResult parse_dimacs(std::string_view text, const DimacsOptions& options) {
  DimacsResult out;
  std::vector<Clause> clauses;
  std::vector<Literal> current;
  bool header = false;
  std::size_t line_no = 0;
  std::size_t clause_terminators = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    line = line.substr(first);
    if (line.front() == 'c') continue;
    // Some generators end the file with a '%' line.
    if (line.front() == '%') break;

    std::istringstream in{std::string(line)};
    if (line.front() == 'p') {
      if (header) throw ParseError("duplicate header at line " + std::to_string(line_no));
      std::string p, fmt;
      in >> p >> fmt >> out.declared_variables >> out.declared_clauses;
      if (!in || p != "p" || fmt != "cnf" || out.declared_variables < 0 || out.declared_clauses < 0)
        throw ParseError("malformed header at line " + std::to_string(line_no));
      header = true;
      continue;
    }
    if (!header) throw ParseError("missing header: clause data before 'p cnf' line");

    std::string tok;
    while (in >> tok) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("non-integer token '" + tok + "' at line " + std::to_string(line_no));
      if (v != 0) {
        current.push_back(literal_from(v));
        if (out.declared_variables > 0 && current.back().variable() > out.declared_variables)
          out.warnings.push_back("literal " + tok + " exceeds declared variable count at line " +
                                 std::to_string(line_no));
        continue;
      }
      ++clause_terminators;
      if (current.empty()) {
        if (!options.allow_empty_clause)
          throw ParseError("empty clause unsupported (line " + std::to_string(line_no) + ")");
        out.has_empty_clause = true;
        continue;
      }
      clauses.emplace_back(std::move(current));
      current.clear();
    }
  }
  if (!header) throw ParseError("missing header: no 'p cnf' line");
  if (!current.empty()) {
    out.warnings.push_back("last clause not terminated by 0");
    ++clause_terminators;
    clauses.emplace_back(std::move(current));
  }
  if (static_cast<std::int64_t>(clause_terminators) != out.declared_clauses) {
    std::string msg = "clause count mismatch: header declares " +
                      std::to_string(out.declared_clauses) + ", found " +
                      std::to_string(clause_terminators);
    if (options.strict_count) throw ParseError(msg);
    out.warnings.push_back(msg);
  }
  out.formula = Formula(std::move(clauses));
  return out;
}

std::string to_dimacs(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.max_variable() << ' ' << f.clause_count() << '\n';
  for (const auto& c : f.clauses()) {
    for (auto l : c.literals()) out << l.value() << ' ';
    out << "0\n";
  }
  return out.str();
}

InputFormat parse_format_name(std::string_view name) {
  if (name == "dimacs" || name == "cnf") return InputFormat::dimacs;
  if (name == "json" || name == "native") return InputFormat::native;
  if (name == "auto") return InputFormat::automatic;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

InputFormat detect_format(const std::filesystem::path& path, std::string_view text) {
  auto ext = path.extension().string();
  for (auto& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (ext == ".json") return InputFormat::native;
  if (ext == ".cnf" || ext == ".dimacs") return InputFormat::dimacs;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') return InputFormat::native;
  return InputFormat::dimacs;
}

DimacsResult load_formula(const std::filesystem::path& path, InputFormat format,
                          const DimacsOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw std::runtime_error("read error on " + path.string());

  if (format == InputFormat::automatic) format = detect_format(path, text);
  if (format == InputFormat::dimacs) return parse_dimacs(text, options);
  DimacsResult r;
  r.formula = parse_native(text);
  return r;
}

}  // namespace nisat
