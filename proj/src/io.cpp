#include "fusioncox/io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

#include "fusioncox/ring_builders.hpp"

namespace fusioncox {

using ordered_json = nlohmann::ordered_json;

namespace {

int parse_positive_int(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size() || value <= 0) throw std::invalid_argument(what);
    return value;
  } catch (const std::exception&) {
    throw StructuralError("expected a positive integer for " + what + ", got '" + text + "'");
  }
}

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

ordered_json ring_to_json_obj(const FusionRing& ring) {
  ordered_json j;
  j["schema"] = 1;
  j["name"] = ring.name();
  j["basis"] = ring.basis_labels();
  j["unit"] = ring.unit();
  j["involution"] = ring.involution();
  ordered_json mult = ordered_json::array();
  const int n = ring.rank();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i)
        if (ring.c(a, b, i) != 0) mult.push_back({a, b, i, ring.c(a, b, i)});
  j["mult"] = std::move(mult);
  return j;
}

RingPtr ring_from_json_obj(const ordered_json& j) {
  if (!j.is_object()) throw StructuralError("ring JSON must be an object");
  if (!j.contains("basis") || !j["basis"].is_array())
    throw StructuralError("ring JSON needs a 'basis' array");
  const std::vector<std::string> basis = j["basis"].get<std::vector<std::string>>();
  const int n = static_cast<int>(basis.size());
  if (n == 0) throw StructuralError("ring JSON basis is empty");
  if (!j.contains("unit") || !j["unit"].is_number_integer())
    throw StructuralError("ring JSON needs an integer 'unit'");
  const int unit = j["unit"].get<int>();
  if (!j.contains("involution") || !j["involution"].is_array())
    throw StructuralError("ring JSON needs an 'involution' array");
  const std::vector<int> involution = j["involution"].get<std::vector<int>>();
  if (!j.contains("mult") || !j["mult"].is_array())
    throw StructuralError("ring JSON needs a 'mult' array");

  std::vector<Int> mult(static_cast<size_t>(n) * n * n, 0);
  std::vector<char> assigned(mult.size(), 0);
  for (const auto& entry : j["mult"]) {
    if (!entry.is_array() || entry.size() != 4)
      throw StructuralError("ring JSON mult entries must be [j, k, i, c]");
    const int a = entry[0].get<int>();
    const int b = entry[1].get<int>();
    const int i = entry[2].get<int>();
    const Int c = entry[3].get<Int>();
    if (a < 0 || a >= n || b < 0 || b >= n || i < 0 || i >= n)
      throw StructuralError("ring JSON mult index out of range");
    if (c < 0) throw StructuralError("ring JSON has a negative structure constant");
    const size_t index = (static_cast<size_t>(a) * n + b) * n + i;
    if (assigned[index]) throw StructuralError("ring JSON repeats a mult entry");
    assigned[index] = 1;
    mult[index] = c;
  }
  const std::string name = j.contains("name") ? j["name"].get<std::string>() : "ring";
  return FusionRing::create(name, basis, unit, involution, std::move(mult));
}

ordered_json coxeter_to_json_obj(const CoxeterMatrix& coxeter) {
  ordered_json j;
  j["schema"] = 1;
  j["labels"] = coxeter.generator_names();
  ordered_json rows = ordered_json::array();
  for (int s = 0; s < coxeter.rank(); ++s) {
    ordered_json row = ordered_json::array();
    for (int t = 0; t < coxeter.rank(); ++t) row.push_back(coxeter.label(s, t));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

CoxeterMatrix coxeter_from_json_obj(const ordered_json& j) {
  const ordered_json* matrix = nullptr;
  std::vector<std::string> labels;
  if (j.is_array()) {
    matrix = &j;
  } else if (j.is_object() && j.contains("matrix")) {
    matrix = &j["matrix"];
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  } else {
    throw StructuralError("Coxeter JSON must be a matrix or an object with 'matrix'");
  }
  if (!matrix->is_array() || matrix->empty())
    throw StructuralError("Coxeter JSON matrix must be a non-empty array of rows");
  const int n = static_cast<int>(matrix->size());
  Eigen::MatrixXi entries(n, n);
  for (int s = 0; s < n; ++s) {
    const auto& row = (*matrix)[s];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw StructuralError("Coxeter JSON matrix must be square");
    for (int t = 0; t < n; ++t) entries(s, t) = row[t].get<int>();
  }
  return CoxeterMatrix(entries, std::move(labels));
}

// --- minimal DOT tokenizer --------------------------------------------------

struct DotToken {
  std::string text;
  bool quoted = false;
};

std::vector<DotToken> dot_tokenize(const std::string& text) {
  std::vector<DotToken> tokens;
  size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '"') {
      std::string value;
      ++i;
      while (i < text.size() && text[i] != '"') value.push_back(text[i++]);
      if (i == text.size()) throw StructuralError("unterminated quote in DOT input");
      ++i;
      tokens.push_back({std::move(value), true});
    } else if (ch == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      tokens.push_back({"--", false});
      i += 2;
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.') {
      std::string value;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_' || text[i] == '.'))
        value.push_back(text[i++]);
      tokens.push_back({std::move(value), false});
    } else {
      tokens.push_back({std::string(1, ch), false});
      ++i;
    }
  }
  return tokens;
}

int parse_dot_label(const std::string& value) {
  if (value == "inf") return CoxeterMatrix::kInfinity;
  const int m = parse_positive_int(value, "edge label");
  if (m < 2) throw StructuralError("edge label must be at least 2");
  return m;
}

}  // namespace

// --- rings -------------------------------------------------------------------

bool looks_like_ring_spec(const std::string& spec) {
  for (const char* prefix : {"verlinde:", "verlinde_even:", "group_ring:", "tambara_yamagami:"})
    if (spec.rfind(prefix, 0) == 0) return true;
  return spec == "rep_s3" || spec.rfind("tensor(", 0) == 0;
}

RingPtr parse_ring_spec(const std::string& spec) {
  if (spec == "rep_s3") return build_rep_s3();
  if (spec.rfind("tensor(", 0) == 0) {
    if (spec.back() != ')') throw StructuralError("tensor spec must end with ')'");
    const std::string inner = spec.substr(7, spec.size() - 8);
    const std::vector<std::string> parts = split_top_level(inner);
    if (parts.size() != 2)
      throw StructuralError("tensor spec needs exactly two comma-separated factors");
    return build_tensor_product(parse_ring_spec(parts[0]), parse_ring_spec(parts[1]));
  }
  const size_t colon = spec.find(':');
  if (colon == std::string::npos) throw StructuralError("unknown ring spec '" + spec + "'");
  const std::string head = spec.substr(0, colon);
  const std::string tail = spec.substr(colon + 1);
  if (head == "verlinde") return build_verlinde(parse_positive_int(tail, "verlinde order"));
  if (head == "verlinde_even")
    return build_verlinde_even(parse_positive_int(tail, "verlinde order"));
  if (head == "group_ring" || head == "tambara_yamagami") {
    CayleyTable table;
    if (tail == "s3") {
      table = symmetric_group3_table();
    } else if (tail.size() > 1 && tail[0] == 'z') {
      table = cyclic_group_table(parse_positive_int(tail.substr(1), "cyclic group order"));
    } else {
      throw StructuralError("unknown group '" + tail + "' (use zN or s3)");
    }
    if (head == "group_ring") return build_group_ring(table, {}, spec);
    return build_tambara_yamagami(table, {}, spec);
  }
  throw StructuralError("unknown ring spec '" + spec + "'");
}

std::string ring_to_json(const FusionRing& ring) { return ring_to_json_obj(ring).dump(2) + "\n"; }

RingPtr ring_from_json_text(const std::string& text) { return ring_from_json_obj(parse_json(text)); }

RingPtr load_ring(const std::string& spec) {
  if (looks_like_ring_spec(spec)) return parse_ring_spec(spec);
  return ring_from_json_text(read_text_file(spec));
}

// --- Coxeter matrices -----------------------------------------------------------

std::string coxeter_to_json(const CoxeterMatrix& coxeter) {
  return coxeter_to_json_obj(coxeter).dump(2) + "\n";
}

CoxeterMatrix coxeter_from_json_text(const std::string& text) {
  return coxeter_from_json_obj(parse_json(text));
}

std::string coxeter_to_dot(const CoxeterMatrix& coxeter) {
  std::ostringstream out;
  for (const auto& name : coxeter.generator_names())
    if (name.find('"') != std::string::npos)
      throw StructuralError("vertex names must not contain quotes");
  out << "graph coxeter {\n";
  for (int s = 0; s < coxeter.rank(); ++s) out << "  \"" << coxeter.generator_name(s) << "\";\n";
  for (int s = 0; s < coxeter.rank(); ++s) {
    for (int t = s + 1; t < coxeter.rank(); ++t) {
      const int m = coxeter.label(s, t);
      if (m == 2) continue;
      out << "  \"" << coxeter.generator_name(s) << "\" -- \"" << coxeter.generator_name(t)
          << "\"";
      if (m == CoxeterMatrix::kInfinity)
        out << " [label=\"inf\"]";
      else if (m != 3)
        out << " [label=\"" << m << "\"]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

CoxeterMatrix coxeter_from_dot(const std::string& text) {
  const std::vector<DotToken> tokens = dot_tokenize(text);
  size_t pos = 0;
  auto next_is = [&](const std::string& t) { return pos < tokens.size() && !tokens[pos].quoted && tokens[pos].text == t; };
  if (!next_is("graph")) throw StructuralError("DOT input must start with 'graph'");
  ++pos;
  while (pos < tokens.size() && !next_is("{")) ++pos;  // optional graph name
  if (!next_is("{")) throw StructuralError("DOT input is missing '{'");
  ++pos;

  std::vector<std::string> names;
  std::vector<std::tuple<int, int, int>> edges;  // (s, t, label)
  auto vertex_id = [&names](const std::string& name) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    names.push_back(name);
    return static_cast<int>(names.size() - 1);
  };
  auto skip_attributes = [&]() {
    if (!next_is("[")) return std::string();
    ++pos;
    std::string label;
    while (pos < tokens.size() && !next_is("]")) {
      if (!tokens[pos].quoted && tokens[pos].text == "label") {
        ++pos;
        if (!next_is("=")) throw StructuralError("DOT label attribute is missing '='");
        ++pos;
        if (pos == tokens.size()) throw StructuralError("DOT label attribute is missing a value");
        label = tokens[pos].text;
        ++pos;
      } else {
        ++pos;
      }
    }
    if (!next_is("]")) throw StructuralError("DOT attribute list is missing ']'");
    ++pos;
    return label;
  };

  while (pos < tokens.size() && !next_is("}")) {
    if (next_is(";")) {
      ++pos;
      continue;
    }
    if (next_is("node") || next_is("edge") || next_is("graph")) {
      ++pos;
      skip_attributes();
      continue;
    }
    const DotToken head = tokens[pos++];
    if (next_is("--")) {
      ++pos;
      if (pos == tokens.size()) throw StructuralError("DOT edge is missing its target");
      const DotToken tail = tokens[pos++];
      const std::string label = skip_attributes();
      const int s = vertex_id(head.text);
      const int t = vertex_id(tail.text);
      if (s == t) throw StructuralError("DOT edge connects a vertex to itself");
      edges.emplace_back(s, t, label.empty() ? 3 : parse_dot_label(label));
    } else {
      skip_attributes();
      vertex_id(head.text);
    }
  }
  if (!next_is("}")) throw StructuralError("DOT input is missing '}'");
  if (names.empty()) throw StructuralError("DOT graph has no vertices");

  const int n = static_cast<int>(names.size());
  Eigen::MatrixXi entries = Eigen::MatrixXi::Constant(n, n, 2);
  for (int i = 0; i < n; ++i) entries(i, i) = 1;
  for (const auto& [s, t, label] : edges) {
    if (entries(s, t) != 2 && entries(s, t) != label)
      throw StructuralError("DOT input repeats an edge with a different label");
    entries(s, t) = label;
    entries(t, s) = label;
  }
  return CoxeterMatrix(entries, std::move(names));
}

CoxeterMatrix load_coxeter(const std::string& spec) {
  if (looks_like_coxeter_builtin(spec)) return parse_coxeter_builtin(spec);
  const std::string text = read_text_file(spec);
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text.compare(first, 5, "graph") == 0)
    return coxeter_from_dot(text);
  return coxeter_from_json_text(text);
}

// --- realisations ------------------------------------------------------------------

std::string realisation_to_json(const GeometricRealisation& real) {
  ordered_json j;
  j["schema"] = 1;
  j["ring"] = ring_to_json_obj(*real.ring);
  j["coxeter"] = coxeter_to_json_obj(real.coxeter);
  ordered_json cartan = ordered_json::array();
  const int n = real.rank();
  const int q = real.ring->rank();
  for (int s = 0; s < n; ++s) {
    ordered_json row = ordered_json::array();
    for (int t = 0; t < n; ++t) {
      ordered_json coeffs = ordered_json::array();
      for (int b = 0; b < q; ++b) coeffs.push_back(real.r(s, t).coeff(b));
      row.push_back(std::move(coeffs));
    }
    cartan.push_back(std::move(row));
  }
  j["cartan"] = std::move(cartan);
  return j.dump(2) + "\n";
}

GeometricRealisation realisation_from_json_text(const std::string& text) {
  const ordered_json j = parse_json(text);
  if (!j.is_object()) throw StructuralError("realisation JSON must be an object");
  if (!j.contains("ring") || !j.contains("coxeter") || !j.contains("cartan"))
    throw StructuralError("realisation JSON needs 'ring', 'coxeter' and 'cartan'");

  RingPtr ring;
  if (j["ring"].is_string())
    ring = load_ring(j["ring"].get<std::string>());
  else
    ring = ring_from_json_obj(j["ring"]);

  const CoxeterMatrix coxeter = coxeter_from_json_obj(j["coxeter"]);
  const int n = coxeter.rank();
  const int q = ring->rank();

  const auto& cartan_json = j["cartan"];
  if (!cartan_json.is_array() || static_cast<int>(cartan_json.size()) != n)
    throw StructuralError("realisation JSON cartan must have one row per generator");
  std::vector<RingElement> cartan;
  cartan.reserve(static_cast<size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    const auto& row = cartan_json[s];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw StructuralError("realisation JSON cartan must be square");
    for (int t = 0; t < n; ++t) {
      const auto& coeffs = row[t];
      if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != q)
        throw StructuralError("realisation JSON cartan entries must list one coefficient per basis element");
      IntVector v(q);
      for (int b = 0; b < q; ++b) v[b] = coeffs[b].get<Int>();
      cartan.push_back(make_element(ring, std::move(v)));
    }
  }
  return make_realisation(std::move(ring), coxeter, std::move(cartan));
}

GeometricRealisation load_realisation(const std::string& path) {
  return realisation_from_json_text(read_text_file(path));
}

// --- unfolded systems ------------------------------------------------------------

std::string unfolded_to_json(const UnfoldedSystem& u) {
  ordered_json j;
  j["schema"] = 1;
  ordered_json vertices = ordered_json::array();
  for (int v = 0; v < u.vertex_count(); ++v) {
    ordered_json entry;
    entry["basis"] = u.source.ring->basis_labels()[static_cast<size_t>(u.vertices[v].first)];
    entry["generator"] = u.source.coxeter.generator_name(u.vertices[v].second);
    entry["name"] = u.vertex_name(v);
    vertices.push_back(std::move(entry));
  }
  j["vertices"] = std::move(vertices);

  auto int_matrix_rows = [](const auto& read, int n) {
    ordered_json rows = ordered_json::array();
    for (int a = 0; a < n; ++a) {
      ordered_json row = ordered_json::array();
      for (int b = 0; b < n; ++b) row.push_back(read(a, b));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["graph"] = int_matrix_rows([&u](int a, int b) { return u.graph.label(a, b); }, u.vertex_count());
  j["cartan"] =
      int_matrix_rows([&u](int a, int b) { return u.cartan_z(a, b); }, u.vertex_count());
  j["fibers"] = u.fibers;
  j["basis_fpdim"] = u.basis_fpdim;
  return j.dump(2) + "\n";
}

std::string unfolded_to_dot(const UnfoldedSystem& u) { return coxeter_to_dot(u.graph); }

// --- partitions --------------------------------------------------------------------

NamedPartition partition_from_json_text(const std::string& text, const CoxeterMatrix& graph) {
  const ordered_json j = parse_json(text);
  if (!j.is_object())
    throw StructuralError("partition JSON must be an object mapping vertex names to labels");
  NamedPartition named;
  named.partition.fiber_of.assign(static_cast<size_t>(graph.rank()), -1);
  for (const auto& [vertex, label] : j.items()) {
    const int v = graph.generator_index(vertex);
    if (v < 0) throw StructuralError("unknown vertex name '" + vertex + "'");
    if (!label.is_string()) throw StructuralError("fiber labels must be strings");
    const std::string name = label.get<std::string>();
    int fiber = -1;
    for (size_t f = 0; f < named.fiber_names.size(); ++f)
      if (named.fiber_names[f] == name) fiber = static_cast<int>(f);
    if (fiber < 0) {
      fiber = static_cast<int>(named.fiber_names.size());
      named.fiber_names.push_back(name);
    }
    if (named.partition.fiber_of[static_cast<size_t>(v)] >= 0)
      throw StructuralError("vertex '" + vertex + "' appears twice in the partition");
    named.partition.fiber_of[static_cast<size_t>(v)] = fiber;
  }
  for (int v = 0; v < graph.rank(); ++v)
    if (named.partition.fiber_of[static_cast<size_t>(v)] < 0)
      throw StructuralError("vertex '" + graph.generator_name(v) +
                            "' is missing from the partition");
  named.partition.fiber_count = static_cast<int>(named.fiber_names.size());
  return named;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write file '" + path + "'");
  out << text;
  if (!out.flush()) throw StructuralError("failed writing file '" + path + "'");
}

}  // namespace fusioncox
