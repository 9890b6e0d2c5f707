#pragma once

#include "kronhwv/expansion.hpp"
#include "kronhwv/hypermatrix.hpp"
#include "kronhwv/linalg.hpp"
#include "kronhwv/report.hpp"
#include "kronhwv/table.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronhwv {

using json = nlohmann::ordered_json;

/// Bad user input (malformed JSON, inconsistent shapes, unknown names).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json to_json(const Table& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) rows.push_back(r);
  return {{"d", t.d()}, {"m", t.m()}, {"rows", rows}};
}

inline json to_json(const WeightTuple& w) {
  json parts = json::array();
  for (const auto& p : w.parts()) parts.push_back(p.parts());
  return {{"m", w.m()}, {"partitions", parts}};
}

inline json to_json(const Hypermatrix& h) {
  json entries = json::array();
  for (const auto& [idx, v] : h.entries()) entries.push_back({{"idx", idx}, {"val", v}});
  return {{"d", h.d()}, {"entries", entries}};
}

inline json to_json(const Expansion& e) {
  json terms = json::array();
  for (const auto& [t, c] : e.terms) terms.push_back({{"index", to_json(t)}, {"coeff", c.str()}});
  return {{"space", space_name(e.space)}, {"weight", to_json(e.weight)}, {"terms", terms}};
}

/// Report JSON; elapsed time only when `timing` is set so that default output
/// is reproducible byte for byte.
inline json to_json(const Report& r, bool timing = false) {
  json out = {{"claim", r.claim},
              {"pass", r.pass()},
              {"checked", std::to_string(r.checked)},
              {"violation_count", std::to_string(r.violation_count)},
              {"violations", r.violations}};
  if (!r.details.empty()) {
    json details = json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    out["details"] = details;
  }
  if (timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

inline json to_json(const CoeffMatrix& m) {
  json rows = json::array();
  for (const auto& t : m.row_index) rows.push_back(t.str());
  json cols = json::array();
  for (const auto& t : m.col_index) cols.push_back(t.str());
  json entries = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    entries.push_back(r);
  }
  return {{"kind", m.kind == CoeffKind::a ? "a" : "b"},
          {"weight", to_json(m.weight)},
          {"row_index", rows},
          {"col_index", cols},
          {"entries", entries}};
}

inline std::string to_csv(const CoeffMatrix& m) {
  std::ostringstream os;
  os << "index";
  for (const auto& t : m.col_index) os << ',' << t.str();
  os << '\n';
  for (std::size_t i = 0; i < m.row_index.size(); ++i) {
    os << m.row_index[i].str();
    for (const auto& v : m.entries[i]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

inline std::string to_csv(const Expansion& e) {
  std::ostringstream os;
  os << "index,coeff\n";
  for (const auto& [t, c] : e.terms) os << t.str() << ',' << c << '\n';
  return os.str();
}

/// Parses JSON text; syntax errors become InputError with line and column.
inline json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON (" + e.what() + ")");
  }
}

inline std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + ": expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

inline Table table_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("rows")) throw InputError("table: missing \"rows\"");
    std::vector<Word> rows;
    for (const auto& r : j.at("rows")) rows.push_back(int_list(r, "table row"));
    Table t = Table::from_rows(rows);
    if (j.contains("d") && j.at("d").get<int>() != t.d()) throw InputError("table: d mismatch");
    if (j.contains("m") && j.at("m").get<int>() != t.m()) throw InputError("table: m mismatch");
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("table: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("table: ") + e.what());
  }
}

inline WeightTuple weight_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("partitions"))
      throw InputError("weight: missing \"partitions\"");
    std::vector<Partition> ps;
    for (const auto& p : j.at("partitions")) ps.emplace_back(int_list(p, "partition"));
    WeightTuple w(ps);
    if (j.contains("m") && j.at("m").get<int>() != w.m()) throw InputError("weight: m mismatch");
    return w;
  } catch (const json::exception& e) {
    throw InputError(std::string("weight: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("weight: ") + e.what());
  }
}

inline Hypermatrix hypermatrix_from_json(const json& j) {
  try {
    Hypermatrix h(j.at("d").get<int>());
    for (const auto& e : j.at("entries")) h.add(int_list(e.at("idx"), "idx"), e.at("val").get<int>());
    return h;
  } catch (const json::exception& e) {
    throw InputError(std::string("hypermatrix: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("hypermatrix: ") + e.what());
  }
}

/// Parses "2,2|2,2|2,2" into a weight tuple.
inline WeightTuple parse_weight_shorthand(const std::string& s) {
  std::vector<Partition> ps;
  std::stringstream rows(s);
  std::string part;
  try {
    while (std::getline(rows, part, '|')) {
      std::vector<int> parts;
      std::stringstream items(part);
      std::string item;
      while (std::getline(items, item, ','))
        if (!item.empty()) parts.push_back(std::stoi(item));
      ps.emplace_back(parts);
    }
    return WeightTuple(ps);
  } catch (const std::exception& e) {
    throw InputError("weight shorthand '" + s + "': " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// A --weight argument: a file with weight JSON, inline JSON, or shorthand.
inline WeightTuple weight_from_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return weight_from_json(parse_json(arg, "<weight>"));
  if (std::filesystem::is_regular_file(arg)) return weight_from_json(parse_json(read_file(arg), arg));
  return parse_weight_shorthand(arg);
}

/// A --table argument: a file with table JSON, inline JSON, or shorthand.
inline Table table_from_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return table_from_json(parse_json(arg, "<table>"));
  if (std::filesystem::is_regular_file(arg)) return table_from_json(parse_json(read_file(arg), arg));
  try {
    return parse_table_shorthand(arg);
  } catch (const std::exception& e) {
    throw InputError("table shorthand '" + arg + "': " + e.what());
  }
}

}  // namespace kronhwv
