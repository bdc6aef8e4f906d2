#include "ellsurf/surface_spec.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "ellsurf/errors.hpp"

namespace ellsurf {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

IntMat parse_matrix(const std::string& value, const std::string& key) {
  std::vector<IntVec> rows;
  for (const std::string& row : split(value, ';'))
    rows.push_back(parse_class(row, key));
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const IntVec& row : rows)
    if (row.size() != cols)
      throw input_error(key + ": rows have unequal lengths");
  IntMat m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

int to_bounded_int(const Int& v, const std::string& key) {
  if (v < 0 || v > 1000000)
    throw input_error(key + " out of supported range");
  return static_cast<int>(v);
}

}  // namespace

ClassVector parse_class(const std::string& text, const std::string& what) {
  ClassVector v;
  for (const std::string& part : split(text, ','))
    v.push_back(parse_int(trim(part), what + " entry"));
  return v;
}

SpecDocument parse_spec_document(const std::string& text) {
  std::map<std::string, Int> scalars;
  std::optional<IntMat> gram;
  std::optional<IntVec> kappa, x;
  // Generator lines, kept in file order: (is_tau, payload).
  std::vector<std::pair<bool, std::string>> generator_lines;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw input_error("line " + std::to_string(line_no) +
                        ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "pg" || key == "m1" || key == "m2" || key == "r" ||
        key == "xsq") {
      if (scalars.count(key))
        throw input_error("duplicate key '" + key + "'");
      scalars.emplace(key, parse_int(value, key));
    } else if (key == "gram") {
      if (gram) throw input_error("duplicate key 'gram'");
      gram = parse_matrix(value, key);
    } else if (key == "kappa") {
      if (kappa) throw input_error("duplicate key 'kappa'");
      kappa = parse_class(value, key);
    } else if (key == "x") {
      if (x) throw input_error("duplicate key 'x'");
      x = parse_class(value, key);
    } else if (key == "tau") {
      generator_lines.emplace_back(true, value);
    } else if (key == "ell") {
      generator_lines.emplace_back(false, value);
    } else {
      throw input_error("unknown key '" + key + "' in surface spec");
    }
  }

  for (const char* required : {"pg", "m1", "m2", "r"})
    if (!scalars.count(required))
      throw input_error(std::string("missing required key '") + required +
                        "'");
  int pg = to_bounded_int(scalars.at("pg"), "pg");
  int r = to_bounded_int(scalars.at("r"), "r");
  Int m1 = scalars.at("m1"), m2 = scalars.at("m2");

  if (gram.has_value() != kappa.has_value() ||
      gram.has_value() != x.has_value())
    throw input_error("gram, kappa and x must be given together");

  auto build = [&]() -> SurfaceModel {
    if (gram) {
      if (scalars.count("xsq"))
        throw input_error("xsq conflicts with an explicit x class");
      return build_surface_model(pg, m1, m2, r, std::move(*gram),
                                 std::move(*kappa), std::move(*x));
    }
    Int xsq = scalars.count("xsq") ? scalars.at("xsq") : Int(1);
    if (xsq != 0 && xsq != 1) throw input_error("xsq must be 0 or 1");
    return build_surface_model(pg, m1, m2, r, static_cast<int>(xsq));
  };
  SpecDocument doc{build(), {}};

  if (!generator_lines.empty()) {
    LatticeLayout layout = layout_of(doc.model);
    for (const auto& [is_tau, payload] : generator_lines) {
      if (is_tau) {
        IntMat tau = parse_matrix(payload, "tau");
        doc.generators.push_back(build_kappa_isometry(
            layout, std::move(tau), IntVec(layout.w_rank, Int(0))));
      } else {
        IntVec ell = parse_class(payload, "ell");
        doc.generators.push_back(build_kappa_isometry(
            layout, IntMat::identity(layout.w_rank), std::move(ell)));
      }
    }
  }
  return doc;
}

SurfaceModel parse_surface_spec(const std::string& text) {
  return parse_spec_document(text).model;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ellsurf
