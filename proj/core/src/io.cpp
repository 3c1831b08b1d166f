#include "efalg/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace efalg {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw InputError("line " + std::to_string(line) + ": " + why);
}

std::size_t number(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || end != tok.data() + tok.size()) fail(line, "expected a number, got '" + std::string(tok) + "'");
  return v;
}

bool default_names(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] != std::to_string(i)) return false;
  }
  return true;
}

std::string render(const PartialAlgebra& p, std::string_view header, std::optional<ElementId> one) {
  std::ostringstream out;
  out << header << " 1\n";
  out << "order " << p.order() << "\n";
  out << "zero " << p.zero() << "\n";
  if (one) out << "one " << *one << "\n";
  if (!default_names(p.names())) {
    for (std::size_t i = 0; i < p.names().size(); ++i) {
      const std::string& label = p.names()[i];
      if (label.empty() || label.find_first_of(" \t\r\n#") != std::string::npos) {
        throw InputError("element name '" + label + "' cannot be written");
      }
      if (label != std::to_string(i)) out << "name " << i << " " << label << "\n";
    }
  }
  const auto n = static_cast<ElementId>(p.order());
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = i; j < n; ++j) {
      if (const auto k = p.sum(i, j)) out << "sum " << i << " " << j << " " << *k << "\n";
    }
  }
  return out.str();
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  AlgebraDocument doc;
  std::optional<std::size_t> order;
  std::optional<ElementId> zero;
  bool header = false;
  std::vector<std::string> names;
  bool any_name = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;

    const std::string_view key = tok[0];
    auto expect = [&](std::size_t count) {
      if (tok.size() != count) {
        fail(line_no, "'" + std::string(key) + "' takes " + std::to_string(count - 1) + " argument(s)");
      }
    };
    auto element = [&](std::string_view t) {
      if (!order) fail(line_no, "'order' must come before '" + std::string(key) + "'");
      const std::size_t v = number(t, line_no);
      if (v >= *order) fail(line_no, "element " + std::to_string(v) + " out of range for order " + std::to_string(*order));
      return static_cast<ElementId>(v);
    };

    if (!header) {
      if (key != "efa" && key != "gea") fail(line_no, "expected header 'efa 1' or 'gea 1'");
      expect(2);
      if (tok[1] != "1") fail(line_no, "unsupported format version '" + std::string(tok[1]) + "'");
      doc.generalized = key == "gea";
      header = true;
    } else if (key == "order") {
      expect(2);
      if (order) fail(line_no, "duplicate 'order'");
      const std::size_t n = number(tok[1], line_no);
      if (n == 0 || n > kMaxOrder) fail(line_no, "order must be between 1 and " + std::to_string(kMaxOrder));
      order = n;
      doc.table = PartialOpTable(n);
      names.assign(n, {});
      for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    } else if (key == "zero") {
      expect(2);
      if (zero) fail(line_no, "duplicate 'zero'");
      zero = element(tok[1]);
    } else if (key == "one") {
      expect(2);
      if (doc.generalized) fail(line_no, "'one' is not allowed in a gea file");
      if (doc.one) fail(line_no, "duplicate 'one'");
      doc.one = element(tok[1]);
    } else if (key == "name") {
      expect(3);
      const ElementId i = element(tok[1]);
      names[i] = std::string(tok[2]);
      any_name = true;
    } else if (key == "sum") {
      expect(4);
      const ElementId i = element(tok[1]);
      const ElementId j = element(tok[2]);
      const ElementId k = element(tok[3]);
      const ElementId prev = doc.table.at(i, j);
      if (prev != kUndefined && prev != k) {
        fail(line_no, "sum " + std::to_string(i) + " " + std::to_string(j) + " already defined as " +
                          std::to_string(prev));
      }
      doc.table.set(i, j, k);
    } else {
      fail(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!header) fail(line_no, "missing header");
  if (!order) fail(line_no, "missing 'order'");
  if (!zero) fail(line_no, "missing 'zero'");
  if (!doc.generalized && !doc.one) fail(line_no, "missing 'one'");
  doc.zero = *zero;
  if (any_name) doc.names = std::move(names);
  return doc;
}

FiniteEffectAlgebra to_effect_algebra(const AlgebraDocument& doc) {
  if (doc.generalized || !doc.one) throw InputError("expected an effect algebra file (efa 1)");
  return FiniteEffectAlgebra(doc.table, doc.zero, *doc.one, doc.names);
}

FiniteEffectAlgebra parse_algebra(std::string_view text) { return to_effect_algebra(parse_document(text)); }

FiniteGeneralizedEffectAlgebra parse_generalized(std::string_view text) {
  const auto doc = parse_document(text);
  if (!doc.generalized) throw InputError("expected a generalized effect algebra file (gea 1)");
  return FiniteGeneralizedEffectAlgebra(doc.table, doc.zero, doc.names);
}

std::string serialize(const FiniteEffectAlgebra& e) { return render(e, "efa", e.one()); }
std::string serialize(const FiniteGeneralizedEffectAlgebra& g) { return render(g, "gea", std::nullopt); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("failed writing " + path.string());
}

namespace {

using nlohmann::ordered_json;

ordered_json id_list(const ElementSet& s) {
  ordered_json a = ordered_json::array();
  for (ElementId x : members(s)) a.push_back(x);
  return a;
}

ordered_json classification(const Classification& c) {
  ordered_json j;
  j["holds"] = c.holds;
  j["witness"] = c.witness;
  return j;
}

ordered_json optional_id(std::optional<ElementId> v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

std::string analyze_json(const FiniteEffectAlgebra& e, const StructureReport& r) {
  ordered_json j;
  j["schema"] = kAnalyzeSchema;
  j["order"] = e.order();
  j["zero"] = e.zero();
  j["one"] = e.one();
  j["names"] = e.names();
  j["sharp"] = id_list(r.sharp);
  j["meager"] = id_list(r.meager);
  j["hypermeager"] = id_list(r.hypermeager);
  j["principal"] = id_list(r.principal);
  j["center"] = id_list(r.center);
  ordered_json blocks = ordered_json::array();
  for (const auto& b : r.blocks) blocks.push_back(id_list(b));
  j["blocks"] = std::move(blocks);
  j["block_theory_applies"] = r.block_theory_applies;
  ordered_json props;
  props["homogeneous"] = classification(r.homogeneous);
  props["rdp"] = classification(r.rdp);
  props["lattice"] = classification(r.lattice);
  props["sharply_dominating"] = classification(r.sharply_dominating);
  props["archimedean"] = classification(r.archimedean);
  props["orthoalgebra"] = classification(r.orthoalgebra);
  j["properties"] = std::move(props);
  j["qualifies_for_triple"] = qualifies_for_triple(r);
  ordered_json elements = ordered_json::array();
  for (std::size_t x = 0; x < e.order(); ++x) {
    const auto id = static_cast<ElementId>(x);
    ordered_json el;
    el["id"] = id;
    el["supplement"] = e.orthosupplement(id);
    if (r.ord[x]) {
      el["ord"] = *r.ord[x];
    } else {
      el["ord"] = "inf";
    }
    el["tilde"] = optional_id(r.bounds.tilde(id));
    el["hat"] = optional_id(r.bounds.hat(id));
    elements.push_back(std::move(el));
  }
  j["elements"] = std::move(elements);
  return j.dump(2) + "\n";
}

std::string analyze_text(const FiniteEffectAlgebra& e, const StructureReport& r) {
  auto names_of = [&](const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (ElementId x : members(s)) {
      if (!first) out += ", ";
      out += e.name(x);
      first = false;
    }
    return out + "}";
  };
  auto yes = [&](const Classification& c) {
    if (c.holds) return std::string("yes");
    std::string out = "no (witness";
    for (ElementId x : c.witness) out += " " + e.name(x);
    return out + ")";
  };
  std::ostringstream out;
  out << "order:              " << e.order() << "\n";
  out << "sharp:              " << names_of(r.sharp) << "\n";
  out << "meager:             " << names_of(r.meager) << "\n";
  out << "hypermeager:        " << names_of(r.hypermeager) << "\n";
  out << "principal:          " << names_of(r.principal) << "\n";
  out << "center:             " << names_of(r.center) << "\n";
  out << "blocks:             " << r.blocks.size() << "\n";
  for (const auto& b : r.blocks) out << "  " << names_of(b) << "\n";
  out << "homogeneous:        " << yes(r.homogeneous) << "\n";
  out << "rdp:                " << yes(r.rdp) << "\n";
  out << "lattice:            " << yes(r.lattice) << "\n";
  out << "sharply dominating: " << yes(r.sharply_dominating) << "\n";
  out << "archimedean:        " << yes(r.archimedean) << "\n";
  out << "orthoalgebra:       " << yes(r.orthoalgebra) << "\n";
  out << "triple applies:     " << (qualifies_for_triple(r) ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace efalg
