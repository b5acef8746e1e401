#include "rdematel/study.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace rdematel {

using Json = nlohmann::ordered_json;

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Internal: return "internal";
    case Category::External: return "external";
    case Category::Custom: return "custom";
  }
  return "custom";
}

std::string_view to_string(Role r) {
  return r == Role::Practitioner ? "practitioner" : "academic";
}

namespace {

std::optional<Category> category_from(std::string_view s) {
  if (s == "internal") return Category::Internal;
  if (s == "external") return Category::External;
  if (s == "custom") return Category::Custom;
  return std::nullopt;
}

std::optional<Role> role_from(std::string_view s) {
  if (s == "practitioner") return Role::Practitioner;
  if (s == "academic") return Role::Academic;
  return std::nullopt;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

/// Accumulates diagnostics while walking the document.
class Checker {
 public:
  void fail(std::string location, std::string message) {
    diags_.push_back({std::move(location), std::move(message)});
  }
  bool ok() const { return diags_.empty(); }
  std::vector<Diagnostic> take() { return std::move(diags_); }

  std::optional<std::string> string_field(const Json& obj, const char* key,
                                          const std::string& where, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(where, std::string("missing field '") + key + "'");
      return std::nullopt;
    }
    if (!it->is_string()) {
      fail(where + "." + key, "expected a string");
      return std::nullopt;
    }
    return it->get<std::string>();
  }

 private:
  std::vector<Diagnostic> diags_;
};

std::string cell_where(const std::string& base, std::size_t i, std::size_t j) {
  return base + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

void parse_scale(const Json& doc, StudyBundle& b, Checker& c) {
  auto it = doc.find("scale");
  if (it == doc.end()) return;  // default 0..4
  if (!it->is_object()) {
    c.fail("scale", "expected an object with integer 'min' and 'max'");
    return;
  }
  const auto& s = *it;
  bool good = true;
  for (const char* k : {"min", "max"}) {
    if (!s.contains(k) || !s[k].is_number_integer()) {
      c.fail(std::string("scale.") + k, "expected an integer");
      good = false;
    }
  }
  if (!good) return;
  b.scale.min = s["min"].get<int>();
  b.scale.max = s["max"].get<int>();
  if (b.scale.min < 0) c.fail("scale.min", "scale must be nonnegative");
  if (b.scale.min >= b.scale.max) c.fail("scale", "min must be below max");
}

void parse_criteria(const Json& doc, StudyBundle& b, Checker& c) {
  auto it = doc.find("criteria");
  if (it == doc.end() || !it->is_array()) {
    c.fail("criteria", "expected an array of criteria");
    return;
  }
  if (it->empty()) c.fail("criteria", "at least one criterion is required");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& e = (*it)[i];
    const auto where = "criteria[" + std::to_string(i) + "]";
    if (!e.is_object()) {
      c.fail(where, "expected an object");
      continue;
    }
    CriterionMeta m;
    auto id = c.string_field(e, "id", where, true);
    if (id) {
      if (id->empty()) c.fail(where + ".id", "criterion id must be non-empty");
      if (!seen.insert(*id).second) c.fail(where + ".id", "duplicate criterion id '" + *id + "'");
      m.id = *id;
    }
    m.name = c.string_field(e, "name", where, false).value_or("");
    m.description = c.string_field(e, "description", where, false).value_or("");
    if (auto cat = c.string_field(e, "category", where, false)) {
      if (auto parsed = category_from(*cat)) {
        m.category = *parsed;
      } else {
        c.fail(where + ".category", "unknown category '" + *cat + "'");
      }
    }
    b.criteria.push_back(std::move(m));
  }
}

void parse_respondents(const Json& doc, StudyBundle& b, Checker& c) {
  auto it = doc.find("respondents");
  if (it == doc.end()) return;
  if (!it->is_array()) {
    c.fail("respondents", "expected an array");
    return;
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto& e = (*it)[i];
    const auto where = "respondents[" + std::to_string(i) + "]";
    if (!e.is_object()) {
      c.fail(where, "expected an object");
      continue;
    }
    RespondentMeta r;
    if (auto id = c.string_field(e, "id", where, true)) {
      if (id->empty()) c.fail(where + ".id", "respondent id must be non-empty");
      if (!seen.insert(*id).second) c.fail(where + ".id", "duplicate respondent id '" + *id + "'");
      r.id = *id;
    }
    if (auto role = c.string_field(e, "role", where, true)) {
      if (auto parsed = role_from(*role)) {
        r.role = *parsed;
      } else {
        c.fail(where + ".role", "unknown role '" + *role + "'");
      }
    }
    r.description = c.string_field(e, "description", where, false).value_or("");
    b.respondents.push_back(std::move(r));
  }
}

/// Checks an n x n array-of-arrays shape; returns false (with diagnostics)
/// when the shape is wrong.
bool check_square(const Json& m, std::size_t n, const std::string& where, Checker& c) {
  if (!m.is_array()) {
    c.fail(where, "expected an array of rows");
    return false;
  }
  bool good = true;
  if (m.size() != n) {
    c.fail(where, "expected " + std::to_string(n) + " rows, found " + std::to_string(m.size()));
    good = false;
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_array() || m[i].size() != n) {
      c.fail(where + "[" + std::to_string(i) + "]",
             "expected a row of " + std::to_string(n) + " cells");
      good = false;
    }
  }
  return good;
}

void parse_matrices(const Json& mats, StudyBundle& b, Checker& c) {
  if (!mats.is_object()) {
    c.fail("matrices", "expected an object mapping respondent id to matrix");
    return;
  }
  const auto n = b.criteria.size();
  std::set<std::string> respondent_ids;
  for (const auto& r : b.respondents) respondent_ids.insert(r.id);
  std::set<std::string> covered;

  for (const auto& [key, m] : mats.items()) {
    const auto where = "matrices." + key;
    if (!respondent_ids.count(key)) c.fail(where, "no respondent with id '" + key + "'");
    covered.insert(key);
    if (!check_square(m, n, where, c)) continue;

    ExpertMatrix e;
    e.expert_id = key;
    e.criteria = b.criterion_ids();
    e.judgments = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& v = m[i][j];
        const auto cw = cell_where(where, i, j);
        if (!v.is_number_integer()) {
          c.fail(cw, "judgment must be an integer");
          continue;
        }
        auto x = v.get<long long>();
        if (x < b.scale.min || x > b.scale.max) {
          c.fail(cw, "judgment " + std::to_string(x) + " outside scale [" +
                         std::to_string(b.scale.min) + ", " + std::to_string(b.scale.max) + "]");
          continue;
        }
        if (i == j && x != 0) {
          c.fail(cw, "diagonal judgment must be 0");
          continue;
        }
        e.judgments(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<int>(x);
      }
    }
    b.matrices.push_back(std::move(e));
  }
  for (const auto& r : b.respondents) {
    if (!covered.count(r.id)) c.fail("matrices", "respondent '" + r.id + "' has no matrix");
  }
}

void parse_rough_group(const Json& g, StudyBundle& b, Checker& c) {
  const auto n = b.criteria.size();
  if (!check_square(g, n, "rough_group", c)) return;
  Matrix<double> lo(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  Matrix<double> hi(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  bool good = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = g[i][j];
      const auto cw = cell_where("rough_group", i, j);
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        c.fail(cw, "expected a [lower, upper] pair of numbers");
        good = false;
        continue;
      }
      double l = v[0].get<double>(), u = v[1].get<double>();
      if (!std::isfinite(l) || !std::isfinite(u)) {
        c.fail(cw, "bounds must be finite");
        good = false;
      } else if (l > u) {
        c.fail(cw, "lower bound exceeds upper bound");
        good = false;
      } else if (l < 0) {
        c.fail(cw, "bounds must be nonnegative");
        good = false;
      } else if (i == j && (l != 0 || u != 0)) {
        c.fail(cw, "diagonal must be [0, 0]");
        good = false;
      }
      lo(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = l;
      hi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = u;
    }
  }
  if (good) b.rough_group = RoughMatrix<double>(std::move(lo), std::move(hi));
}

void parse_defaults(const Json& doc, StudyBundle& b, Checker& c) {
  auto it = doc.find("defaults");
  if (it == doc.end()) return;
  if (!it->is_object()) {
    c.fail("defaults", "expected an object");
    return;
  }
  b.defaults.tau = c.string_field(*it, "tau", "defaults", false);
  b.defaults.crispify = c.string_field(*it, "crispify", "defaults", false);
  b.defaults.threshold = c.string_field(*it, "threshold", "defaults", false);
  try {
    if (b.defaults.tau) parse_tau_strategy(*b.defaults.tau);
  } catch (const Error& e) {
    c.fail("defaults.tau", e.what());
  }
  try {
    if (b.defaults.crispify) parse_crispify_mode(*b.defaults.crispify);
  } catch (const Error& e) {
    c.fail("defaults.crispify", e.what());
  }
  try {
    if (b.defaults.threshold) ThresholdRule::parse(*b.defaults.threshold);
  } catch (const Error& e) {
    c.fail("defaults.threshold", e.what());
  }
}

}  // namespace

std::vector<std::string> StudyBundle::criterion_ids() const {
  std::vector<std::string> ids;
  ids.reserve(criteria.size());
  for (const auto& c : criteria) ids.push_back(c.id);
  return ids;
}

bool operator==(const StudyBundle& a, const StudyBundle& b) {
  if (!(a.scale == b.scale && a.criteria == b.criteria && a.respondents == b.respondents &&
        a.defaults == b.defaults && a.rough_group == b.rough_group &&
        a.matrices.size() == b.matrices.size())) {
    return false;
  }
  for (std::size_t k = 0; k < a.matrices.size(); ++k) {
    const auto& x = a.matrices[k];
    const auto& y = b.matrices[k];
    if (x.expert_id != y.expert_id || x.criteria != y.criteria ||
        x.judgments.rows() != y.judgments.rows() || x.judgments.cols() != y.judgments.cols() ||
        x.judgments != y.judgments) {
      return false;
    }
  }
  return true;
}

BundleParseResult try_parse_study_bundle(std::string_view text) {
  Checker c;
  Json doc;
  try {
    doc = Json::parse(normalize_newlines(text));
  } catch (const Json::exception& e) {
    c.fail("document", std::string("not a valid JSON document: ") + e.what());
    return {std::nullopt, c.take()};
  }
  if (!doc.is_object()) {
    c.fail("document", "top level must be an object");
    return {std::nullopt, c.take()};
  }

  StudyBundle b;
  try {
    parse_scale(doc, b, c);
    parse_criteria(doc, b, c);
    parse_respondents(doc, b, c);
    parse_defaults(doc, b, c);

    const bool has_raw = doc.contains("matrices");
    const bool has_group = doc.contains("rough_group");
    if (has_raw == has_group) {
      c.fail("document", "exactly one of 'matrices' or 'rough_group' is required");
    } else if (has_raw) {
      parse_matrices(doc["matrices"], b, c);
    } else {
      parse_rough_group(doc["rough_group"], b, c);
    }
  } catch (const std::exception& e) {
    c.fail("document", std::string("unexpected structure: ") + e.what());
  }

  if (!c.ok()) return {std::nullopt, c.take()};
  return {std::move(b), {}};
}

StudyBundle parse_study_bundle(std::string_view text) {
  auto r = try_parse_study_bundle(text);
  if (!r.bundle) throw ValidationError(std::move(r.diagnostics));
  return std::move(*r.bundle);
}

std::string write_bundle(const StudyBundle& b) {
  Json doc;
  doc["scale"] = {{"min", b.scale.min}, {"max", b.scale.max}};
  Json criteria = Json::array();
  for (const auto& c : b.criteria) {
    criteria.push_back({{"id", c.id},
                        {"name", c.name},
                        {"category", to_string(c.category)},
                        {"description", c.description}});
  }
  doc["criteria"] = std::move(criteria);
  Json respondents = Json::array();
  for (const auto& r : b.respondents) {
    respondents.push_back({{"id", r.id}, {"role", to_string(r.role)}, {"description", r.description}});
  }
  doc["respondents"] = std::move(respondents);

  if (!b.defaults.empty()) {
    Json d = Json::object();
    if (b.defaults.tau) d["tau"] = *b.defaults.tau;
    if (b.defaults.crispify) d["crispify"] = *b.defaults.crispify;
    if (b.defaults.threshold) d["threshold"] = *b.defaults.threshold;
    doc["defaults"] = std::move(d);
  }

  if (b.rough_group) {
    const auto& g = *b.rough_group;
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < g.size(); ++j) row.push_back({g.lower()(i, j), g.upper()(i, j)});
      rows.push_back(std::move(row));
    }
    doc["rough_group"] = std::move(rows);
  } else {
    Json mats = Json::object();
    for (const auto& m : b.matrices) {
      Json rows = Json::array();
      for (Eigen::Index i = 0; i < m.judgments.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.judgments.cols(); ++j) row.push_back(m.judgments(i, j));
        rows.push_back(std::move(row));
      }
      mats[m.expert_id] = std::move(rows);
    }
    doc["matrices"] = std::move(mats);
  }
  return doc.dump(2, ' ', false) + "\n";
}

std::string normalize_newlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

std::vector<std::string> split_csv_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

ExpertMatrix parse_expert_csv(std::string_view text, std::string expert_id, Scale scale) {
  std::vector<Diagnostic> diags;
  auto fail = [&](std::size_t line, std::size_t col, std::string msg) {
    std::string where = "line " + std::to_string(line);
    if (col) where += ", column " + std::to_string(col);
    diags.push_back({std::move(where), std::move(msg)});
  };

  // (line number, record) for every non-blank line
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::istringstream in(normalize_newlines(text));
    std::string l;
    std::size_t no = 0;
    while (std::getline(in, l)) {
      ++no;
      if (!trim(l).empty()) lines.emplace_back(no, l);
    }
  }
  if (lines.empty()) throw ValidationError(std::vector<Diagnostic>{{"line 1", "empty expert matrix file"}});

  const auto n = lines.size() - 1;
  auto header = split_csv_record(lines[0].second);
  for (auto& h : header) h = trim(h);
  // A header with one extra cell carries a corner label before the ids.
  if (header.size() == n + 1) header.erase(header.begin());
  if (n == 0 || header.size() != n) {
    fail(lines[0].first, 0,
         "header has " + std::to_string(header.size()) + " criterion ids but the file has " +
             std::to_string(n) + " data rows; the matrix must be square");
    throw ValidationError(std::move(diags));
  }
  {
    std::set<std::string> seen;
    for (std::size_t j = 0; j < n; ++j) {
      if (header[j].empty()) fail(lines[0].first, j + 1, "empty criterion id in header");
      else if (!seen.insert(header[j]).second)
        fail(lines[0].first, j + 1, "duplicate criterion id '" + header[j] + "'");
    }
  }

  ExpertMatrix m;
  m.expert_id = std::move(expert_id);
  m.criteria = header;
  m.judgments = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [line_no, record] = lines[i + 1];
    auto cells = split_csv_record(record);
    if (cells.size() != n + 1) {
      fail(line_no, 0,
           "expected a row id and " + std::to_string(n) + " values, found " +
               std::to_string(cells.size()) + " cells");
      continue;
    }
    auto row_id = trim(cells[0]);
    if (row_id != header[i]) {
      fail(line_no, 1, "row id '" + row_id + "' does not match header id '" + header[i] + "'");
    }
    for (std::size_t j = 0; j < n; ++j) {
      auto cell = trim(cells[j + 1]);
      const auto col = j + 2;
      int v = 0;
      std::size_t used = 0;
      try {
        v = std::stoi(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (cell.empty() || used != cell.size()) {
        fail(line_no, col, "cell (" + header[i] + ", " + header[j] + ") '" + cell +
                               "' is not an integer");
        continue;
      }
      if (!scale.contains(v)) {
        fail(line_no, col, "cell (" + header[i] + ", " + header[j] + ") value " +
                               std::to_string(v) + " outside scale [" + std::to_string(scale.min) +
                               ", " + std::to_string(scale.max) + "]");
        continue;
      }
      if (i == j && v != 0) {
        fail(line_no, col, "diagonal cell (" + header[i] + ", " + header[j] + ") must be 0");
        continue;
      }
      m.judgments(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  if (!diags.empty()) throw ValidationError(std::move(diags));
  return m;
}

std::string write_expert_csv(const ExpertMatrix& m) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += "\"\"";
      else q.push_back(ch);
    }
    return q + "\"";
  };
  const auto n = m.judgments.rows();
  std::vector<std::string> ids = m.criteria;
  if (ids.empty()) {
    for (Eigen::Index i = 0; i < n; ++i) ids.push_back("C" + std::to_string(i + 1));
  }
  std::string out;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j) out += ',';
    out += quote(ids[static_cast<std::size_t>(j)]);
  }
  out += '\n';
  for (Eigen::Index i = 0; i < n; ++i) {
    out += quote(ids[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < n; ++j) out += ',' + std::to_string(m.judgments(i, j));
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error while writing '" + path + "'");
}

StudyBundle load_study_bundle(const std::string& path) { return parse_study_bundle(read_file(path)); }

RoughMatrix<double> group_matrix(const StudyBundle& bundle) {
  if (bundle.rough_group) return *bundle.rough_group;
  return rough_group_matrix<double>(collect_group(bundle.matrices, bundle.scale));
}

}  // namespace rdematel
