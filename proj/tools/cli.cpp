#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "efalg/algebra.hpp"
#include "efalg/catalog.hpp"
#include "efalg/io.hpp"
#include "efalg/iso.hpp"
#include "efalg/parallel.hpp"
#include "efalg/structure.hpp"
#include "efalg/suite.hpp"
#include "efalg/triple.hpp"

namespace efalg::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

// Carries a failure report out of a command.
struct Failure {
  int code;
  ordered_json report;
};

Failure failure(int code, std::string kind, std::string message) {
  ordered_json j;
  j["status"] = code == kPropertyFailure ? "fail" : code == kHypothesisNotMet ? "hypothesis" : "error";
  j["exit"] = code;
  j["kind"] = std::move(kind);
  j["message"] = std::move(message);
  return {code, std::move(j)};
}

Failure verdict_failure(const std::string& check, const Verdict& v) {
  Failure f = failure(kPropertyFailure, check, v.violations.front().axiom + " violated");
  ordered_json list = ordered_json::array();
  for (const auto& violation : v.violations) {
    ordered_json item;
    item["axiom"] = violation.axiom;
    item["witness"] = violation.witness;
    item["detail"] = violation.detail;
    list.push_back(std::move(item));
  }
  f.report["violations"] = std::move(list);
  return f;
}

FiniteEffectAlgebra load(const std::string& path) { return parse_algebra(read_text_file(path)); }

int verify_cmd(const std::string& path, std::ostream& out) {
  const AlgebraDocument doc = parse_document(read_text_file(path));
  const Verdict v =
      doc.generalized ? verify_generalized(doc.table, doc.zero) : verify_effect_algebra(doc.table, doc.zero, *doc.one);
  if (!v.ok()) {
    out << v.to_string();
    throw verdict_failure("verify", v);
  }
  out << "ok: " << (doc.generalized ? "generalized effect algebra" : "effect algebra") << " of order "
      << doc.table.order() << "\n";
  return kPass;
}

int analyze_cmd(const std::string& path, bool json, std::ostream& out) {
  const FiniteEffectAlgebra e = load(path);
  const StructureReport r = analyze(e);
  out << (json ? analyze_json(e, r) : analyze_text(e, r));
  return kPass;
}

std::string h_file(const TripleRep& t) {
  std::ostringstream s;
  s << "triple 1\n";
  s << "sharp " << t.sharp_algebra.order() << "\n";
  s << "meager " << t.meager_algebra.order() << "\n";
  for (std::size_t i = 0; i < t.h.size(); ++i) {
    s << "h " << i;
    for (ElementId x : members(t.h[i])) s << " " << x;
    s << "\n";
  }
  return s.str();
}

int triple_cmd(const std::string& path, const std::string& dir, std::ostream& out) {
  const FiniteEffectAlgebra e = load(path);
  const TripleRep t = extract_triple(e);
  fs::create_directories(dir);
  write_text_file(fs::path(dir) / "sharp.efa", serialize(t.sharp_algebra));
  write_text_file(fs::path(dir) / "meager.gea", serialize(t.meager_algebra));
  write_text_file(fs::path(dir) / "h.txt", h_file(t));
  out << "sharp elements: " << t.sharp_algebra.order() << "\n";
  out << "meager elements: " << t.meager_algebra.order() << "\n";
  for (std::size_t s = 0; s < t.h.size(); ++s) {
    out << "h(" << e.name(t.back_maps->sharp_to_source[s]) << ") = {";
    bool first = true;
    for (ElementId x : members(t.h[s])) {
      out << (first ? "" : ", ") << e.name(t.back_maps->meager_to_source[x]);
      first = false;
    }
    out << "}\n";
  }
  out << "wrote " << dir << "\n";
  return kPass;
}

int roundtrip_cmd(const std::string& path, std::ostream& out) {
  const FiniteEffectAlgebra e = load(path);
  const TripleRep t = extract_triple(e);
  const RoundtripReport r = verify_roundtrip(e, t);
  if (!r.ok) {
    Failure f = failure(kPropertyFailure, "roundtrip", r.failure);
    f.report["witness"] = r.witness;
    throw f;
  }
  const auto& back = *t.back_maps;
  for (std::size_t x = 0; x < e.order(); ++x) {
    const auto [s, m] = r.tea->carrier[r.phi[x]];
    out << e.name(static_cast<ElementId>(x)) << " -> (" << e.name(back.sharp_to_source[s]) << ", "
        << e.name(back.meager_to_source[m]) << ")\n";
  }
  out << "roundtrip: pass (" << e.order() << " elements)\n";
  return kPass;
}

int iso_cmd(const std::string& a_path, const std::string& b_path, std::ostream& out) {
  const FiniteEffectAlgebra a = load(a_path);
  const FiniteEffectAlgebra b = load(b_path);
  const auto w = find_isomorphism(a, b);
  if (!w) throw failure(kPropertyFailure, "iso", "not isomorphic");
  for (std::size_t x = 0; x < a.order(); ++x) {
    out << a.name(static_cast<ElementId>(x)) << " -> " << b.name(w->mapping[x]) << "\n";
  }
  out << "isomorphic\n";
  return kPass;
}

int gen_cmd(const std::string& kind, std::size_t n, const std::vector<std::string>& inputs, const std::string& out_path,
            std::ostream& out) {
  FiniteEffectAlgebra e = make_chain(1);
  if (kind == "chain") {
    e = make_chain(n);
  } else if (kind == "boolean") {
    e = make_boolean(n);
  } else {
    std::vector<FiniteEffectAlgebra> parts;
    for (const auto& p : inputs) parts.push_back(load(p));
    if (kind == "hsum") {
      if (parts.empty()) throw InputError("hsum needs at least one input file");
      e = horizontal_sum(parts);
    } else {
      if (parts.size() != 2) throw InputError("product needs exactly two input files");
      e = direct_product(parts[0], parts[1]);
    }
  }
  const std::string text = serialize(e);
  if (out_path.empty()) {
    out << text;
  } else {
    write_text_file(out_path, text);
    out << "wrote " << out_path << " (order " << e.order() << ")\n";
  }
  return kPass;
}

int enumerate_cmd(std::size_t max_order, const std::string& dir, std::size_t jobs, std::size_t bound,
                  std::ostream& out) {
  if (max_order > bound) {
    throw EnumerationBoundError("order " + std::to_string(max_order) + " exceeds the enumeration bound " +
                                std::to_string(bound) + "; " + enumeration_cost(max_order));
  }
  if (!dir.empty()) fs::create_directories(dir);
  for (std::size_t n = 2; n <= max_order; ++n) {
    const auto level = enumerate_order(n, jobs, bound);
    std::size_t homogeneous = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (is_homogeneous(level[i])) ++homogeneous;
      if (!dir.empty()) {
        write_text_file(fs::path(dir) / ("order" + std::to_string(n) + "_" + std::to_string(i) + ".efa"),
                        serialize(level[i]));
      }
    }
    out << "order " << n << ": " << level.size() << " algebras, " << homogeneous << " homogeneous\n";
  }
  return kPass;
}

int suite_cmd(std::size_t max_order, std::size_t jobs, std::size_t bound, std::ostream& out) {
  if (max_order > bound) {
    throw EnumerationBoundError("order " + std::to_string(max_order) + " exceeds the enumeration bound " +
                                std::to_string(bound) + "; " + enumeration_cost(max_order));
  }
  const SuiteReport r = run_suite(suite_universe(max_order, jobs), jobs);
  out << format_suite(r);
  if (!r.ok()) {
    Failure f = failure(kPropertyFailure, "suite", "property failures");
    ordered_json list = ordered_json::array();
    for (const auto& a : r.anchors) {
      if (a.failures == 0) continue;
      ordered_json item;
      item["anchor"] = a.anchor;
      item["failures"] = a.failures;
      item["first_failure"] = a.first_failure;
      list.push_back(std::move(item));
    }
    f.report["anchors"] = std::move(list);
    throw f;
  }
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite effect algebras: analysis, triples, enumeration"};
  app.name("efalg");
  app.require_subcommand(1);
  std::size_t jobs = default_jobs();
  app.add_option("-j,--jobs", jobs, "Worker threads (default: EFALG_JOBS or hardware concurrency)")
      ->check(CLI::PositiveNumber);

  std::string file;
  std::string file2;
  std::string dir;
  bool json = false;
  std::string kind;
  std::size_t n = 0;
  std::vector<std::string> inputs;
  std::string out_path;
  std::size_t max_order = 0;
  std::size_t bound = kDefaultEnumerationBound;

  auto* verify = app.add_subcommand("verify", "Check the axioms of an algebra file");
  verify->add_option("file", file)->required();

  auto* analyze_sub = app.add_subcommand("analyze", "Structure report");
  analyze_sub->add_option("file", file)->required();
  analyze_sub->add_flag("--json", json, "Versioned JSON report");

  auto* triple = app.add_subcommand("triple", "Extract (Sh, Mea, h) into a directory");
  triple->add_option("file", file)->required();
  triple->add_option("--out", dir, "Output directory")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "Rebuild the algebra from its triple and check phi");
  roundtrip->add_option("file", file)->required();

  auto* iso = app.add_subcommand("iso", "Find an isomorphism between two algebras");
  iso->add_option("file1", file)->required();
  iso->add_option("file2", file2)->required();

  auto* gen = app.add_subcommand("gen", "Build a named construction");
  gen->add_option("--kind", kind, "chain, boolean, hsum or product")
      ->required()
      ->check(CLI::IsMember({"chain", "boolean", "hsum", "product"}));
  gen->add_option("-n,--size", n, "Chain length or number of atoms");
  gen->add_option("inputs", inputs, "Summand or factor files");
  gen->add_option("-o,--out", out_path, "Output file (default: stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "All algebras up to isomorphism");
  enumerate->add_option("--max-order", max_order)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--out", dir, "Directory for the .efa files");
  enumerate->add_option("--bound", bound, "Largest order accepted");

  auto* suite = app.add_subcommand("suite", "Run every property check on the catalog and enumerated algebras");
  suite->add_option("--max-order", max_order)->required()->check(CLI::PositiveNumber);
  suite->add_option("--bound", bound, "Largest order accepted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << failure(kInputError, "usage", e.what()).report.dump() << "\n";
    return kInputError;
  }

  try {
    if (*verify) return verify_cmd(file, out);
    if (*analyze_sub) return analyze_cmd(file, json, out);
    if (*triple) return triple_cmd(file, dir, out);
    if (*roundtrip) return roundtrip_cmd(file, out);
    if (*iso) return iso_cmd(file, file2, out);
    if (*gen) {
      if ((kind == "chain" || kind == "boolean") && gen->count("--size") == 0) {
        throw InputError("--size is required for --kind " + kind);
      }
      return gen_cmd(kind, n, inputs, out_path, out);
    }
    if (*enumerate) return enumerate_cmd(max_order, dir, jobs, bound, out);
    if (*suite) return suite_cmd(max_order, jobs, bound, out);
    return kInputError;
  } catch (const Failure& f) {
    err << f.report.dump() << "\n";
    return f.code;
  } catch (const HypothesisError& e) {
    Failure f = failure(kHypothesisNotMet, "hypothesis", e.what());
    f.report["hypothesis"] = e.hypothesis();
    f.report["witness"] = e.witness();
    err << f.report.dump() << "\n";
    return f.code;
  } catch (const AxiomError& e) {
    Failure f = verdict_failure("axioms", e.verdict());
    f.code = kInputError;
    f.report["status"] = "error";
    f.report["exit"] = kInputError;
    err << f.report.dump() << "\n";
    return f.code;
  } catch (const InputError& e) {
    err << failure(kInputError, "input", e.what()).report.dump() << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << failure(kPropertyFailure, "consistency", e.what()).report.dump() << "\n";
    return kPropertyFailure;
  } catch (const fs::filesystem_error& e) {
    err << failure(kInputError, "io", e.what()).report.dump() << "\n";
    return kInputError;
  }
}

}  // namespace efalg::cli
