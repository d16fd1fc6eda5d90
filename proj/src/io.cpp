#include "fpres/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "fpres/catalog.hpp"
#include "fpres/green.hpp"

namespace fpres {

using Json = nlohmann::ordered_json;

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string const& text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, line});
      cur.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '#') {
      flush();
      while (i < text.size() && text[i] != '\n') {
        ++i;
      }
      ++line;
      continue;
    }
    if (c == '\n') {
      flush();
      ++line;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

struct Cursor {
  std::vector<Token> tokens;
  std::size_t pos = 0;

  bool done() const { return pos >= tokens.size(); }
  std::size_t line() const {
    return done() ? (tokens.empty() ? 1 : tokens.back().line) : tokens[pos].line;
  }
  std::string const& peek() const {
    static std::string const empty;
    return done() ? empty : tokens[pos].text;
  }
  std::string next(std::string const& what) {
    if (done()) {
      throw ParseError(line(), "expected " + what + " but reached end of input");
    }
    return tokens[pos++].text;
  }
  void expect(std::string const& word) {
    std::string got = next("'" + word + "'");
    if (got != word) {
      throw ParseError(tokens[pos - 1].line, "expected '" + word + "', got '" + got + "'");
    }
  }
  long long integer(std::string const& what) {
    std::string tok = next(what);
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) {
        throw std::invalid_argument(tok);
      }
      return v;
    } catch (std::exception const&) {
      throw ParseError(tokens[pos - 1].line, "expected " + what + ", got '" + tok + "'");
    }
  }
};

// semigroup block: n, then n*n 1-based entries, optional `identity = k`
FiniteSemigroup parse_semigroup_block(Cursor& cur, bool allow_identity_line) {
  long long n = cur.integer("the order");
  if (n <= 0) {
    throw ParseError(cur.line(), "order must be positive");
  }
  std::vector<Elem> table;
  table.reserve(static_cast<std::size_t>(n * n));
  for (long long k = 0; k < n * n; ++k) {
    long long v = cur.integer("a table entry");
    if (v < 1 || v > n) {
      throw ParseError(cur.line(), "table entry out of range");
    }
    table.push_back(static_cast<Elem>(v - 1));
  }
  std::optional<Elem> identity;
  if (allow_identity_line && cur.peek() == "identity") {
    cur.expect("identity");
    cur.expect("=");
    long long v = cur.integer("the identity index");
    if (v < 1 || v > n) {
      throw ParseError(cur.line(), "identity index out of range");
    }
    identity = static_cast<Elem>(v - 1);
  }
  try {
    return FiniteSemigroup(static_cast<std::size_t>(n), std::move(table), identity);
  } catch (Error const& err) {
    throw ParseError(cur.line(), err.what());
  }
}

Elem parse_group_entry(Cursor& cur, FiniteSemigroup const& g) {
  std::string tok = cur.next("a structure matrix entry");
  // 1-based index or an element name
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used == tok.size()) {
      if (v < 1 || v > static_cast<long long>(g.order())) {
        throw ParseError(cur.line(), "matrix entry out of range");
      }
      return static_cast<Elem>(v - 1);
    }
  } catch (std::invalid_argument const&) {
  } catch (std::out_of_range const&) {
  }
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.name(x) == tok) {
      return x;
    }
  }
  throw ParseError(cur.line(), "unknown group element '" + tok + "'");
}

}  // namespace

FiniteSemigroup parse_semigroup_text(std::string const& text) {
  Cursor cur{tokenize(text)};
  FiniteSemigroup s = parse_semigroup_block(cur, true);
  if (!cur.done()) {
    throw ParseError(cur.line(), "trailing content after the table");
  }
  return s;
}

std::string write_semigroup_text(FiniteSemigroup const& s) {
  std::ostringstream os;
  os << s.order() << "\n";
  for (Elem i = 0; i < s.order(); ++i) {
    for (Elem j = 0; j < s.order(); ++j) {
      os << (j ? " " : "") << s.product(i, j) + 1;
    }
    os << "\n";
  }
  if (s.identity().has_value()) {
    os << "identity = " << *s.identity() + 1 << "\n";
  }
  return os.str();
}

ReesMatrixData parse_rees_text(std::string const& text) {
  Cursor cur{tokenize(text)};
  cur.expect("group");
  FiniteSemigroup g = parse_semigroup_block(cur, true);
  cur.expect("end");
  cur.expect("I");
  cur.expect("=");
  long long num_i = cur.integer("|I|");
  cur.expect("Omega");
  cur.expect("=");
  long long num_omega = cur.integer("|Omega|");
  if (num_i <= 0 || num_omega <= 0) {
    throw ParseError(cur.line(), "index sets must be nonempty");
  }
  cur.expect("P");
  ReesMatrixData data{std::move(g), static_cast<std::size_t>(num_i),
                      static_cast<std::size_t>(num_omega), {}};
  for (long long k = 0; k < num_i * num_omega; ++k) {
    data.p.push_back(parse_group_entry(cur, data.group));
  }
  cur.expect("end");
  if (!cur.done()) {
    throw ParseError(cur.line(), "trailing content after P");
  }
  return data;
}

std::string write_rees_text(ReesMatrixData const& data) {
  std::ostringstream os;
  os << "group\n" << write_semigroup_text(data.group) << "end\n";
  os << "I = " << data.num_i << "\n";
  os << "Omega = " << data.num_omega << "\n";
  os << "P\n";
  for (std::size_t w = 0; w < data.num_omega; ++w) {
    for (std::size_t i = 0; i < data.num_i; ++i) {
      os << (i ? " " : "") << data.p_at(w, i) + 1;
    }
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

StrongSemilatticeData parse_semilattice_text(std::string const& text) {
  Cursor cur{tokenize(text)};
  cur.expect("semilattice");
  cur.expect("Y");
  cur.expect("=");
  long long size = cur.integer("|Y|");
  if (size <= 0) {
    throw ParseError(cur.line(), "|Y| must be positive");
  }
  StrongSemilatticeData data;
  data.size = static_cast<std::size_t>(size);
  std::map<std::size_t, FiniteSemigroup> components;
  while (!cur.done()) {
    std::string word = cur.next("a section keyword");
    if (word == "le") {
      long long b = cur.integer("the smaller index");
      long long a = cur.integer("the larger index");
      if (a < 1 || a > size || b < 1 || b > size) {
        throw ParseError(cur.line(), "order pair out of range");
      }
      data.le_pairs.emplace_back(static_cast<std::size_t>(b - 1),
                                 static_cast<std::size_t>(a - 1));
    } else if (word == "component") {
      long long idx = cur.integer("the component index");
      if (idx < 1 || idx > size) {
        throw ParseError(cur.line(), "component index out of range");
      }
      FiniteSemigroup comp = parse_semigroup_block(cur, true);
      cur.expect("end");
      components.emplace(static_cast<std::size_t>(idx - 1), std::move(comp));
    } else if (word == "hom") {
      long long a = cur.integer("the source index");
      long long b = cur.integer("the target index");
      if (a < 1 || a > size || b < 1 || b > size) {
        throw ParseError(cur.line(), "hom indices out of range");
      }
      auto it = components.find(static_cast<std::size_t>(a - 1));
      if (it == components.end()) {
        throw ParseError(cur.line(), "hom listed before its source component");
      }
      std::vector<Elem> map;
      for (std::size_t k = 0; k < it->second.order(); ++k) {
        long long v = cur.integer("a hom image");
        if (v < 1) {
          throw ParseError(cur.line(), "hom image out of range");
        }
        map.push_back(static_cast<Elem>(v - 1));
      }
      cur.expect("end");
      data.homs[{static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)}] =
          std::move(map);
    } else {
      throw ParseError(cur.line(), "unknown section '" + word + "'");
    }
  }
  for (std::size_t i = 0; i < data.size; ++i) {
    auto it = components.find(i);
    if (it == components.end()) {
      throw ParseError(1, "missing component " + std::to_string(i + 1));
    }
    data.components.push_back(it->second);
  }
  return data;
}

std::string write_semilattice_text(StrongSemilatticeData const& data) {
  std::ostringstream os;
  os << "semilattice\nY = " << data.size << "\n";
  for (auto const& [b, a] : data.le_pairs) {
    os << "le " << b + 1 << " " << a + 1 << "\n";
  }
  for (std::size_t i = 0; i < data.components.size(); ++i) {
    os << "component " << i + 1 << "\n"
       << write_semigroup_text(data.components[i]) << "end\n";
  }
  for (auto const& [key, map] : data.homs) {
    os << "hom " << key.first + 1 << " " << key.second + 1 << "\n";
    for (std::size_t k = 0; k < map.size(); ++k) {
      os << (k ? " " : "") << map[k] + 1;
    }
    os << "\nend\n";
  }
  return os.str();
}

// --- JSON ---------------------------------------------------------------------

namespace {

FiniteSemigroup semigroup_from_json(Json const& j) {
  if (!j.contains("order") || !j.contains("table")) {
    throw ParseError(1, "semigroup JSON needs 'order' and 'table'");
  }
  std::size_t n = j.at("order").get<std::size_t>();
  std::vector<Elem> table;
  for (auto const& row : j.at("table")) {
    for (auto const& v : row) {
      table.push_back(v.get<Elem>());
    }
  }
  std::optional<Elem> identity;
  if (j.contains("identity") && !j.at("identity").is_null()) {
    identity = j.at("identity").get<Elem>();
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    names = j.at("names").get<std::vector<std::string>>();
  }
  try {
    return FiniteSemigroup(n, std::move(table), identity, std::move(names));
  } catch (Error const& err) {
    throw ParseError(1, err.what());
  }
}

Json semigroup_to_json(FiniteSemigroup const& s) {
  Json j;
  j["order"] = s.order();
  Json table = Json::array();
  for (Elem i = 0; i < s.order(); ++i) {
    Json row = Json::array();
    for (Elem k = 0; k < s.order(); ++k) {
      row.push_back(s.product(i, k));
    }
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  if (s.identity().has_value()) {
    j["identity"] = *s.identity();
  } else {
    j["identity"] = nullptr;
  }
  j["names"] = s.names();
  return j;
}

Json parse_json_or_throw(std::string const& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError(1, "invalid JSON");
  }
  return j;
}

}  // namespace

FiniteSemigroup parse_semigroup_json(std::string const& text) {
  return semigroup_from_json(parse_json_or_throw(text));
}

std::string write_semigroup_json(FiniteSemigroup const& s) {
  return semigroup_to_json(s).dump(2) + "\n";
}

ReesMatrixData parse_rees_json(std::string const& text) {
  Json j = parse_json_or_throw(text);
  if (!j.contains("group") || !j.contains("P")) {
    throw ParseError(1, "Rees JSON needs 'group' and 'P'");
  }
  ReesMatrixData data{semigroup_from_json(j.at("group")), 0, 0, {}};
  data.num_i = j.at("I").get<std::size_t>();
  data.num_omega = j.at("Omega").get<std::size_t>();
  for (auto const& row : j.at("P")) {
    for (auto const& v : row) {
      data.p.push_back(v.get<Elem>());
    }
  }
  return data;
}

StrongSemilatticeData parse_semilattice_json(std::string const& text) {
  Json j = parse_json_or_throw(text);
  StrongSemilatticeData data;
  data.size = j.at("size").get<std::size_t>();
  for (auto const& pair : j.at("le")) {
    data.le_pairs.emplace_back(pair.at(0).get<std::size_t>(),
                               pair.at(1).get<std::size_t>());
  }
  for (auto const& comp : j.at("components")) {
    data.components.push_back(semigroup_from_json(comp));
  }
  if (j.contains("homs")) {
    for (auto const& h : j.at("homs")) {
      data.homs[{h.at("from").get<std::size_t>(), h.at("to").get<std::size_t>()}] =
          h.at("map").get<std::vector<Elem>>();
    }
  }
  return data;
}

FiniteSemigroup ParsedInput::as_semigroup() const {
  switch (kind) {
    case Kind::Semigroup:
      return *semigroup;
    case Kind::Rees:
      return make_rees(*rees).semigroup;
    case Kind::Semilattice:
      return make_strong_semilattice(*semilattice).semigroup;
  }
  throw Error("BadInput", "unreachable");
}

ParsedInput parse_input(std::string const& text) {
  // JSON content?
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j = parse_json_or_throw(text);
    if (j.contains("P")) {
      return ParsedInput{ParsedInput::Kind::Rees, std::nullopt, parse_rees_json(text),
                         std::nullopt};
    }
    if (j.contains("components")) {
      return ParsedInput{ParsedInput::Kind::Semilattice, std::nullopt, std::nullopt,
                         parse_semilattice_json(text)};
    }
    return ParsedInput{ParsedInput::Kind::Semigroup, parse_semigroup_json(text),
                       std::nullopt, std::nullopt};
  }
  Cursor cur{tokenize(text)};
  std::string const& head = cur.peek();
  if (head == "group") {
    return ParsedInput{ParsedInput::Kind::Rees, std::nullopt, parse_rees_text(text),
                       std::nullopt};
  }
  if (head == "semilattice") {
    return ParsedInput{ParsedInput::Kind::Semilattice, std::nullopt, std::nullopt,
                       parse_semilattice_text(text)};
  }
  return ParsedInput{ParsedInput::Kind::Semigroup, parse_semigroup_text(text),
                     std::nullopt, std::nullopt};
}

ParsedInput load_input_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("IoError", "cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

// --- DOT ----------------------------------------------------------------------

std::string egg_box_dot(FiniteSemigroup const& s) {
  GreenStructure g = green_classes(s);
  std::ostringstream os;
  os << "digraph eggbox {\n  node [shape=plaintext];\n  box [label=<\n";
  os << "    <TABLE BORDER=\"1\" CELLBORDER=\"1\" CELLSPACING=\"0\">\n";
  for (auto const& r_class : g.r_classes) {
    os << "      <TR>";
    for (auto const& l_class : g.l_classes) {
      // H-class = intersection
      std::string cell;
      bool has_idem = false;
      for (Elem x : r_class) {
        if (g.l_of[x] == g.l_of[l_class.front()]) {
          if (!cell.empty()) {
            cell += " ";
          }
          cell += s.name(x);
          has_idem = has_idem || s.is_idempotent(x);
        }
      }
      os << "<TD>" << cell << (has_idem ? " *" : "") << "</TD>";
    }
    os << "</TR>\n";
  }
  os << "    </TABLE>\n  >];\n}\n";
  return os.str();
}

std::string cayley_dot(FiniteSemigroup const& s, ElemSet const& a) {
  CayleyGraph g = right_cayley_graph(s, a);
  std::ostringstream os;
  os << "digraph cayley {\n";
  for (Elem x = 0; x < s.order(); ++x) {
    os << "  n" << x << " [label=\"" << s.name(x) << "\"];\n";
  }
  for (auto const& arc : g.arcs) {
    os << "  n" << arc.source << " -> n" << arc.target << " [label=\""
       << s.name(arc.label) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// --- reports ------------------------------------------------------------------

namespace {

Json names_of(FiniteSemigroup const& s, ElemSet const& xs) {
  Json arr = Json::array();
  for (Elem x : xs) {
    arr.push_back(s.name(x));
  }
  return arr;
}

Json analyze_json(FiniteSemigroup const& s) {
  GreenStructure g = green_classes(s);
  Json j;
  j["schema"] = 1;
  j["order"] = s.order();
  j["monoid"] = s.is_monoid();
  j["identity"] = s.identity().has_value() ? Json(s.name(*s.identity())) : Json(nullptr);
  ElemSet idems = idempotents(s);
  j["idempotent_count"] = idems.size();
  j["idempotents"] = names_of(s, idems);
  Json green;
  green["r_classes"] = g.num_r();
  green["l_classes"] = g.num_l();
  green["h_classes"] = g.h_classes.size();
  green["d_classes"] = g.d_classes.size();
  j["green"] = std::move(green);
  j["simple"] = is_simple(s);
  j["completely_simple"] = is_completely_simple(s);
  j["minimal_ideal_size"] = minimal_ideal(s).size();
  return j;
}

Json exactness_json(Resolution const& res, ExactnessReport const& rep) {
  Json degrees = Json::array();
  for (auto const& d : rep.degrees) {
    Json v;
    v["degree"] = d.degree;
    v["rank"] = d.rank;
    v["x_size"] =
        d.degree < res.kernel_gens.size() ? Json(res.kernel_gens[d.degree].size()) : Json(nullptr);
    v["exact"] = d.exact;
    v["composition_zero"] = d.composition_zero;
    v["kernel_rank"] = d.kernel_rank;
    v["image_rank"] = d.image_rank;
    degrees.push_back(std::move(v));
  }
  Json j;
  j["schema"] = 1;
  j["monoid_order"] = res.monoid->order();
  j["length"] = res.length();
  j["top_rank"] = res.modules.back()->rank();
  j["augmentation_surjective"] = rep.augmentation_surjective;
  j["degrees"] = std::move(degrees);
  j["all_pass"] = rep.all_pass();
  return j;
}

Json bundle_json(TransferBundle const& bundle) {
  Json j;
  j["schema"] = 1;
  j["construction"] = bundle.report.construction;
  Json ctx;
  for (auto const& [k, v] : bundle.report.context) {
    ctx[k] = v;
  }
  j["context"] = std::move(ctx);
  Json degrees = Json::array();
  for (std::size_t i = 0; i < bundle.output.modules.size(); ++i) {
    Json v;
    v["degree"] = i;
    v["rank_in"] =
        i < bundle.input.modules.size() ? Json(bundle.input.modules[i]->rank()) : Json(nullptr);
    v["rank_out"] = bundle.output.modules[i]->rank();
    bool exact = true;
    for (auto const& d : bundle.report.output_exactness.degrees) {
      if (d.degree == i) {
        exact = d.exact && d.composition_zero;
      }
    }
    v["exact"] = exact;
    v["y_size"] = i < bundle.y_sets.size() ? Json(bundle.y_sets[i].size()) : Json(nullptr);
    degrees.push_back(std::move(v));
  }
  j["degrees"] = std::move(degrees);
  Json checks;
  for (auto const& c : bundle.report.checks) {
    checks[c.name] = c.pass;
  }
  j["lemma_checks"] = std::move(checks);
  j["all_pass"] = bundle.report.all_pass();
  return j;
}

}  // namespace

std::string analyze_report_json(FiniteSemigroup const& s) {
  return analyze_json(s).dump(2) + "\n";
}

std::string analyze_report_text(FiniteSemigroup const& s) {
  Json j = analyze_json(s);
  std::ostringstream os;
  os << "order " << j["order"].get<std::size_t>() << ", "
     << (j["monoid"].get<bool>() ? "monoid" : "semigroup") << "\n"
     << "idempotents: " << j["idempotent_count"].get<std::size_t>() << "\n"
     << "R/L/H/D classes: " << j["green"]["r_classes"].get<std::size_t>() << "/"
     << j["green"]["l_classes"].get<std::size_t>() << "/"
     << j["green"]["h_classes"].get<std::size_t>() << "/"
     << j["green"]["d_classes"].get<std::size_t>() << "\n"
     << "simple: " << (j["simple"].get<bool>() ? "yes" : "no")
     << ", completely simple: " << (j["completely_simple"].get<bool>() ? "yes" : "no")
     << "\n";
  return os.str();
}

std::string resolution_report_json(Resolution const& res, ExactnessReport const& rep) {
  return exactness_json(res, rep).dump(2) + "\n";
}

std::string resolution_report_text(Resolution const& res, ExactnessReport const& rep) {
  std::ostringstream os;
  os << "resolution of length " << res.length() << " over monoid of order "
     << res.monoid->order() << "\n";
  os << "augmentation surjective: " << (rep.augmentation_surjective ? "yes" : "no") << "\n";
  for (auto const& d : rep.degrees) {
    os << "degree " << d.degree << ": rank " << d.rank << ", exact "
       << (d.exact && d.composition_zero ? "yes" : "NO") << " (image rank " << d.image_rank
       << ", kernel rank " << d.kernel_rank << ")\n";
  }
  os << (rep.all_pass() ? "ALL DEGREES EXACT\n" : "EXACTNESS FAILURE\n");
  return os.str();
}

std::string bundle_report_json(TransferBundle const& bundle) {
  return bundle_json(bundle).dump(2) + "\n";
}

std::string bundle_report_text(TransferBundle const& bundle) {
  std::ostringstream os;
  os << bundle.report.construction << "\n";
  for (auto const& [k, v] : bundle.report.context) {
    os << "  " << k << " = " << v << "\n";
  }
  for (auto const& c : bundle.report.checks) {
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << "\n";
  }
  os << "  [" << (bundle.report.output_exactness.all_pass() ? "ok" : "FAIL")
     << "] output exactness\n";
  return os.str();
}

std::string pipeline_report_json(PipelineReport const& rep) {
  Json j;
  j["schema"] = 1;
  j["u_order"] = rep.u_order;
  j["h_order"] = rep.h_order;
  j["right_ideal_count"] = rep.r_class_count;
  j["left_ideal_count"] = rep.l_class_count;
  j["h_ranks"] = rep.h_ranks;
  j["lift_ranks"] = rep.lift_ranks;
  j["s_ranks"] = rep.s_ranks;
  j["descent_ranks"] = rep.descent_ranks;
  j["lift_pass"] = rep.lift_pass;
  j["descent_pass"] = rep.descent_pass;
  j["all_pass"] = rep.all_pass();
  return j.dump(2) + "\n";
}

std::string fp1_report_json(FiniteSemigroup const& monoid, FP1Witness const& w,
                            std::optional<std::pair<std::size_t, ElemSet>> const& minimal,
                            CsFp1Report const* cs) {
  Json j;
  j["schema"] = 1;
  j["order"] = monoid.order();
  Json witness;
  witness["set"] = names_of(monoid, w.a);
  witness["connected"] = w.connected;
  witness["closure_is_all"] = w.closure_is_all;
  witness["agrees"] = w.agrees();
  j["kobayashi"] = std::move(witness);
  if (minimal.has_value()) {
    Json m;
    m["size"] = minimal->first;
    m["set"] = names_of(monoid, minimal->second);
    j["minimal_right_unitary_genset"] = std::move(m);
  }
  if (cs != nullptr) {
    Json c;
    c["right_ideal_count"] = cs->r_class_count;
    c["left_ideal_count"] = cs->l_class_count;
    c["h_order"] = cs->h_order;
    c["k_order"] = cs->k_order;
    c["relative_rank"] = cs->rank;
    c["witness_size"] = cs->witness.size();
    c["passes"] = cs->passes();
    j["completely_simple_certificate"] = std::move(c);
  }
  return j.dump(2) + "\n";
}

std::string semilattice_report_json(SemilatticeFpReport const& rep) {
  Json j;
  j["schema"] = 1;
  j["minimum"] = rep.minimum;
  j["bottom_ranks"] = rep.bottom_ranks;
  j["lifted_ranks"] = rep.lifted_ranks;
  j["direct_ranks"] = rep.direct_ranks;
  j["lift_pass"] = rep.lift_pass;
  j["direct_pass"] = rep.direct_pass;
  j["all_pass"] = rep.all_pass();
  return j.dump(2) + "\n";
}

std::string bi_report_json(BiFpReport const& rep) {
  Json j;
  j["schema"] = 1;
  j["left_ranks"] = rep.left_ranks;
  j["right_ranks"] = rep.right_ranks;
  j["left_pass"] = rep.left_pass;
  j["right_pass"] = rep.right_pass;
  j["bi_pass"] = rep.bi_pass();
  return j.dump(2) + "\n";
}

void write_file_atomic(std::string const& path, std::string const& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error("IoError", "cannot write " + tmp);
    }
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

// --- corpus -------------------------------------------------------------------

CorpusSummary corpus_run(std::optional<std::string> const& directory,
                         std::size_t length_budget) {
  std::map<std::string, std::string> results;  // case name -> PASS / FAIL reason
  auto record = [&results](std::string const& name, bool pass, std::string const& why = "") {
    results[name] = pass ? "PASS" : ("FAIL " + why);
  };

  for (auto const& entry : catalog_monoids()) {
    std::string name = "resolve:" + entry.name;
    try {
      SgPtr m = std::make_shared<const FiniteSemigroup>(entry.semigroup);
      Resolution res = augmentation_resolution(m);
      extend_resolution(res, length_budget);
      record(name, verify_exact(res).all_pass());
    } catch (std::exception const& err) {
      record(name, false, err.what());
    }
  }
  for (auto const& entry : catalog_completely_simple()) {
    std::string name = "fp1cert:" + entry.name;
    try {
      record(name, cs_fp1_certificate(entry.semigroup).passes());
    } catch (std::exception const& err) {
      record(name, false, err.what());
    }
  }
  for (auto const& [name, data] :
       std::vector<std::pair<std::string, StrongSemilatticeData>>{
           {"two_chain_z2", two_chain_z2()}, {"diamond", diamond_semilattice()}}) {
    try {
      record("semilattice:" + name,
             semilattice_fp_report(data, length_budget).all_pass());
    } catch (std::exception const& err) {
      record("semilattice:" + name, false, err.what());
    }
  }
  if (directory.has_value()) {
    std::vector<std::filesystem::path> files;
    for (auto const& p : std::filesystem::directory_iterator(*directory)) {
      if (p.is_regular_file()) {
        files.push_back(p.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (auto const& path : files) {
      std::string name = "file:" + path.filename().string();
      try {
        ParsedInput input = load_input_file(path.string());
        FiniteSemigroup s = monoid_completion(input.as_semigroup());
        SgPtr m = std::make_shared<const FiniteSemigroup>(std::move(s));
        Resolution res = augmentation_resolution(m);
        extend_resolution(res, length_budget);
        record(name, verify_exact(res).all_pass());
      } catch (std::exception const& err) {
        record(name, false, err.what());
      }
    }
  }

  CorpusSummary summary;
  std::size_t passed = 0;
  std::ostringstream os;
  for (auto const& [name, verdict] : results) {
    os << verdict.substr(0, 4) << " " << name;
    if (verdict.size() > 5) {
      os << " (" << verdict.substr(5) << ")";
    }
    os << "\n";
    passed += verdict == "PASS";
  }
  os << "total: " << passed << "/" << results.size() << " passed\n";
  summary.text = os.str();
  summary.all_pass = passed == results.size();
  return summary;
}

}  // namespace fpres
