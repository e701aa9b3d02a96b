#include "sincov/io.hpp"

#include <fstream>
#include <sstream>

namespace sincov {

std::string_view to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw UsageError("unknown format '" + std::string(text) + "'");
}

Format format_from_path(std::string_view path, Format fallback) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".json")) return Format::json;
  if (ends_with(".csv")) return Format::csv;
  return fallback;
}

namespace {

[[noreturn]] void fail(const ReadOptions& opts, std::size_t line, std::size_t col,
                       const std::string& msg) {
  throw InputError(opts.source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                   msg);
}

struct Field {
  std::string text;
  std::size_t line = 0, col = 0;
};

using Row = std::vector<Field>;

std::vector<Row> split_csv(std::string_view text, const ReadOptions& opts) {
  std::vector<Row> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    Row row;
    std::size_t i = 0;
    for (;;) {
      Field f;
      f.line = line_no;
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      f.col = i + 1;
      if (i < line.size() && line[i] == '"') {
        ++i;
        bool closed = false;
        while (i < line.size()) {
          if (line[i] == '"') {
            if (i + 1 < line.size() && line[i + 1] == '"') {
              f.text += '"';
              i += 2;
              continue;
            }
            ++i;
            closed = true;
            break;
          }
          f.text += line[i++];
        }
        if (!closed) fail(opts, line_no, f.col, "unterminated quoted field");
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i < line.size() && line[i] != ',') fail(opts, line_no, i + 1, "expected ','");
      } else {
        std::size_t j = line.find(',', i);
        if (j == std::string_view::npos) j = line.size();
        std::string_view raw = line.substr(i, j - i);
        while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t')) raw.remove_suffix(1);
        f.text = std::string(raw);
        i = j;
      }
      row.push_back(std::move(f));
      if (i >= line.size()) break;
      ++i;  // the comma
    }
    rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  return rows;
}

template <class T>
T parse_value(std::string_view text) {
  if constexpr (kIsExact<T>) {
    return parse_rational(text);
  } else {
    return parse_double(text);
  }
}

template <class T>
T field_value(const Field& f, const ReadOptions& opts) {
  try {
    T v = parse_value<T>(f.text);
    if constexpr (!kIsExact<T>) {
      if (!std::isfinite(v)) fail(opts, f.line, f.col, "non-finite value '" + f.text + "'");
    }
    return v;
  } catch (const InputError& e) {
    if (std::string_view(e.what()).starts_with(opts.source + ":")) throw;
    fail(opts, f.line, f.col, e.what());
  }
}

struct Table {
  std::vector<std::string> labels;
  std::vector<std::string> row_names;
  std::vector<std::vector<Field>> cells;
};

Table read_table(std::string_view text, const ReadOptions& opts) {
  auto rows = split_csv(text, opts);
  if (rows.empty()) fail(opts, 1, 1, "empty input");
  Table t;
  const Row& head = rows.front();
  if (head.size() < 2) fail(opts, head.front().line, 1, "header needs a corner cell and labels");
  for (std::size_t k = 1; k < head.size(); ++k) t.labels.push_back(head[k].text);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (row.size() != head.size()) {
      fail(opts, row.front().line, row.back().col,
           "expected " + std::to_string(head.size()) + " fields, found " +
               std::to_string(row.size()));
    }
    t.row_names.push_back(row.front().text);
    t.cells.emplace_back(row.begin() + 1, row.end());
  }
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos && s.find_first_of(" \t") != 0 &&
      (s.empty() || (s.back() != ' ' && s.back() != '\t'))) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(double v) { return format_double(v); }
std::string scalar_text(const Rational& v) { return format_rational(v); }

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Json parse_json(std::string_view text, const ReadOptions& opts) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    fail(opts, line, col, msg);
  }
}

[[noreturn]] void fail_json(const ReadOptions& opts, const std::string& where,
                            const std::string& msg) {
  throw InputError(opts.source + ": " + where + ": " + msg);
}

template <class T>
T json_value(const Json& j, const ReadOptions& opts, const std::string& where) {
  try {
    if (j.is_string()) return parse_value<T>(j.get<std::string>());
    if (j.is_number_integer()) {
      std::string s = j.is_number_unsigned() ? std::to_string(j.get<std::uint64_t>())
                                             : std::to_string(j.get<std::int64_t>());
      return parse_value<T>(s);
    }
    if (j.is_number_float()) {
      double d = j.get<double>();
      if constexpr (kIsExact<T>) {
        return parse_rational(format_double(d));
      } else {
        return d;
      }
    }
  } catch (const InputError& e) {
    fail_json(opts, where, e.what());
  }
  fail_json(opts, where, "expected a number or a \"p/q\" string");
}

std::vector<std::string> json_labels(const Json& doc, const ReadOptions& opts) {
  if (!doc.contains("labels") || !doc["labels"].is_array()) {
    fail_json(opts, "labels", "missing or not an array");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["labels"].size(); ++i) {
    const Json& l = doc["labels"][i];
    if (!l.is_string()) fail_json(opts, "labels[" + std::to_string(i) + "]", "not a string");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

Mode json_mode(const Json& doc, const ReadOptions& opts) {
  if (opts.mode) return *opts.mode;
  if (!doc.contains("mode")) return Mode::multiplicative;
  if (!doc["mode"].is_string()) fail_json(opts, "mode", "not a string");
  try {
    return parse_mode(doc["mode"].get<std::string>());
  } catch (const UsageError& e) {
    fail_json(opts, "mode", e.what());
  }
}

template <class T>
std::vector<std::vector<T>> json_rows(const Json& doc, const char* key, std::size_t width,
                                      const ReadOptions& opts) {
  if (!doc.contains(key) || !doc[key].is_array()) fail_json(opts, key, "missing or not an array");
  std::vector<std::vector<T>> rows;
  for (std::size_t r = 0; r < doc[key].size(); ++r) {
    const Json& row = doc[key][r];
    std::string where = std::string(key) + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != width) {
      fail_json(opts, where, "expected an array of " + std::to_string(width) + " values");
    }
    std::vector<T> values;
    for (std::size_t c = 0; c < width; ++c) {
      values.push_back(json_value<T>(row[c], opts, where + "[" + std::to_string(c) + "]"));
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

template <class T>
BasicInstance<T> build(std::vector<std::string> labels, std::vector<T> entries, Mode mode,
                       const ReadOptions& opts) {
  try {
    return BasicInstance<T>(std::move(labels), std::move(entries), mode);
  } catch (const InputError& e) {
    throw InputError(opts.source + ": " + e.what());
  }
}

}  // namespace

Json scalar_json(double v) { return v; }
Json scalar_json(const Rational& v) { return format_rational(v); }

template <class T>
BasicInstance<T> parse_instance(std::string_view text, Format format, const ReadOptions& opts) {
  if (format == Format::json) {
    Json doc = parse_json(text, opts);
    if (!doc.is_object()) fail(opts, 1, 1, "top level must be an object");
    auto labels = json_labels(doc, opts);
    auto rows = json_rows<T>(doc, "matrix", labels.size(), opts);
    if (rows.size() != labels.size()) {
      fail_json(opts, "matrix", "expected " + std::to_string(labels.size()) + " rows");
    }
    std::vector<T> entries;
    for (auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
    return build<T>(std::move(labels), std::move(entries), json_mode(doc, opts), opts);
  }

  Table t = read_table(text, opts);
  const std::size_t n = t.labels.size();
  if (t.cells.size() != n) {
    fail(opts, t.cells.empty() ? 1 : t.cells.back().front().line, 1,
         "expected " + std::to_string(n) + " data rows, found " + std::to_string(t.cells.size()));
  }
  std::vector<T> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (t.row_names[r] != t.labels[r]) {
      fail(opts, t.cells[r].front().line, 1,
           "row label '" + t.row_names[r] + "' does not match column label '" + t.labels[r] + "'");
    }
    for (const Field& f : t.cells[r]) entries.push_back(field_value<T>(f, opts));
  }
  return build<T>(std::move(t.labels), std::move(entries), opts.mode.value_or(opts.csv_mode),
                  opts);
}

template <class T>
Json instance_json(const BasicInstance<T>& inst) {
  Json matrix = Json::array();
  for (std::size_t r = 0; r < inst.size(); ++r) {
    Json row = Json::array();
    for (const T& v : inst.row(r)) row.push_back(scalar_json(v));
    matrix.push_back(std::move(row));
  }
  Json j;
  j["labels"] = inst.labels();
  j["mode"] = std::string(to_string(inst.mode()));
  j["matrix"] = std::move(matrix);
  return j;
}

template <class T>
Json family_json(const BasicPotentialFamily<T>& family) {
  Json members = Json::array();
  for (const auto& m : family.members) {
    Json row = Json::array();
    for (const T& v : m.values) row.push_back(scalar_json(v));
    members.push_back(std::move(row));
  }
  Json j;
  j["labels"] = family.labels;
  j["mode"] = std::string(to_string(family.mode));
  j["members"] = std::move(members);
  return j;
}

template <class T>
std::string format_instance(const BasicInstance<T>& inst, Format format) {
  if (format == Format::json) return instance_json(inst).dump(2) + "\n";
  std::ostringstream os;
  for (const auto& l : inst.labels()) os << ',' << csv_field(l);
  os << '\n';
  for (std::size_t r = 0; r < inst.size(); ++r) {
    os << csv_field(inst.label(r));
    for (const T& v : inst.row(r)) os << ',' << scalar_text(v);
    os << '\n';
  }
  return os.str();
}

template <class T>
BasicPotentialFamily<T> parse_family(std::string_view text, Format format,
                                     const ReadOptions& opts) {
  BasicPotentialFamily<T> fam;
  if (format == Format::json) {
    Json doc = parse_json(text, opts);
    if (!doc.is_object()) fail(opts, 1, 1, "top level must be an object");
    fam.labels = json_labels(doc, opts);
    fam.mode = json_mode(doc, opts);
    for (auto& row : json_rows<T>(doc, "members", fam.labels.size(), opts)) {
      fam.members.push_back({std::move(row)});
    }
  } else {
    Table t = read_table(text, opts);
    fam.labels = t.labels;
    fam.mode = opts.mode.value_or(opts.csv_mode);
    for (const auto& cells : t.cells) {
      BasicPotential<T> p;
      for (const Field& f : cells) p.values.push_back(field_value<T>(f, opts));
      fam.members.push_back(std::move(p));
    }
  }
  if (fam.labels.empty()) throw InputError(opts.source + ": family has no labels");
  return fam;
}

template <class T>
std::string format_family(const BasicPotentialFamily<T>& family, Format format) {
  if (format == Format::json) return family_json(family).dump(2) + "\n";
  std::ostringstream os;
  for (const auto& l : family.labels) os << ',' << csv_field(l);
  os << '\n';
  for (std::size_t k = 0; k < family.members.size(); ++k) {
    os << 'f' << k;
    for (const T& v : family.members[k].values) os << ',' << scalar_text(v);
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("error while writing '" + path + "'");
}

#define SINCOV_INSTANTIATE(T)                                                                  \
  template BasicInstance<T> parse_instance(std::string_view, Format, const ReadOptions&);     \
  template std::string format_instance(const BasicInstance<T>&, Format);                      \
  template BasicPotentialFamily<T> parse_family(std::string_view, Format, const ReadOptions&); \
  template std::string format_family(const BasicPotentialFamily<T>&, Format);                 \
  template Json instance_json(const BasicInstance<T>&);                                       \
  template Json family_json(const BasicPotentialFamily<T>&);

SINCOV_INSTANTIATE(double)
SINCOV_INSTANTIATE(Rational)

#undef SINCOV_INSTANTIATE

}  // namespace sincov
