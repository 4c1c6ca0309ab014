#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "proxlat/error.hpp"
#include "proxlat/fixtures.hpp"

namespace proxlat::cli {

namespace {

using io::json;

struct Options {
  std::string input;
  std::string output;
  std::string dot;
  bool sigma = false;
  bool exhaustive = false;
};

struct Result {
  std::string text;  // JSON document or DOT source
  int status = kOk;
};

enum class DocKind { proximity, morphism, space };

json load_input(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) return io::read_json_file(arg);
  if (fixtures::proximity(arg) || fixtures::space(arg)) return json(arg);
  throw Error(ErrorKind::ParseError, "no such file or fixture: " + arg);
}

DocKind classify(const json& doc) {
  if (doc.is_string()) return fixtures::space(doc.get<std::string>()) ? DocKind::space : DocKind::proximity;
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "input must be a JSON object or a fixture name");
  if (doc.contains("T")) return DocKind::morphism;
  if (doc.contains("points")) return DocKind::space;
  return DocKind::proximity;
}

json header(const std::string& verb) { return {{"schema", io::kSchema}, {"verb", verb}}; }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

Result finish(json doc, bool ok) {
  doc["status"] = ok ? "ok" : "failed";
  return {dump(doc), ok ? kOk : kPropertyFailure};
}

Result check(const Options& o) {
  auto doc = load_input(o.input);
  auto out = header("check");
  switch (classify(doc)) {
    case DocKind::proximity: {
      auto raw = io::raw_proximity_from_json(doc);
      auto mode = o.exhaustive ? QuantifierMode::exhaustive : QuantifierMode::reduced;
      auto rep = verify_axioms(raw.lattice, raw.relation, mode);
      out["kind"] = "proximity";
      out["mode"] = o.exhaustive ? "exhaustive" : "reduced";
      out["size"] = raw.lattice.size();
      out["axioms"] = io::to_json(rep);
      return finish(out, rep.proximity_lattice());
    }
    case DocKind::morphism: {
      auto m = io::morphism_from_json(doc);
      auto rep = verify_morphism(m.source, m.target, m.t);
      out["kind"] = "morphism";
      out["morphism"] = io::to_json(rep);
      return finish(out, rep.proximity() && rep.characterizations_agree());
    }
    case DocKind::space: {
      auto s = io::space_from_json(doc);
      out["kind"] = "space";
      out["points"] = s.size();
      out["opens"] = s.opens.size();
      out["t0"] = is_t0(s);
      return finish(out, true);
    }
  }
  return {};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + path);
  f << text;
}

Result canext(const Options& o) {
  auto p = io::proximity_from_json(load_input(o.input));
  auto out = header("canext");
  auto pi = pi_extension(p);
  auto pi_rep = verify_extension(pi);
  out["pi"] = io::to_json(pi);
  out["pi_report"] = io::to_json(pi_rep);
  bool ok = pi_rep.valid();
  if (o.sigma) {
    auto sigma = sigma_extension(p);
    auto sigma_rep = verify_extension(sigma);
    out["sigma"] = io::to_json(sigma);
    out["sigma_report"] = io::to_json(sigma_rep);
    ok = ok && sigma_rep.valid();
  }
  if (!o.dot.empty()) {
    ElementSet image;
    for (auto v : pi.embed.table) image.insert(v);
    write_file(o.dot, io::lattice_dot(pi.lattice, image, "pi_extension"));
  }
  return finish(out, ok);
}

Result extend(const Options& o) {
  auto doc = load_input(o.input);
  if (classify(doc) != DocKind::morphism)
    throw Error(ErrorKind::KindMismatch, "extend needs a morphism document");
  auto m = io::morphism_from_json(doc);
  auto ext = extend_pi(pi_extension(m.source), pi_extension(m.target), m.t);
  auto rep = check_preservation(ext);
  auto out = header("extend");
  out["extended"] = io::to_json(ext);
  out["preservation"] = io::to_json(rep);
  bool ok = rep.required_hold();
  const auto spectral = [](const ProximityLattice& p) { return p.flags().distributive && p.flags().join_strong; };
  if (ext.j && spectral(m.source) && spectral(m.target)) {
    auto cmp = compare_with_dual(ext);
    out["dual_comparison"] = io::to_json(cmp);
    ok = ok && cmp.ok();
  }
  return finish(out, ok);
}

Result spectrum_verb(const Options& o) {
  auto p = io::proximity_from_json(load_input(o.input));
  auto out = header("spectrum");
  out["spectrum"] = io::to_json(spectrum(p));
  return finish(out, true);
}

Result dualize(const Options& o) {
  auto doc = load_input(o.input);
  auto out = header("dualize");
  switch (classify(doc)) {
    case DocKind::space: {
      auto s = io::space_from_json(doc);
      auto d = co_compact_dual(s);
      out["space"] = io::to_json(d);
      return finish(out, co_compact_dual(d) == s);
    }
    case DocKind::proximity:
      out["proximity"] = io::to_json(opposite(io::proximity_from_json(doc)));
      return finish(out, true);
    case DocKind::morphism:
      break;
  }
  throw Error(ErrorKind::KindMismatch, "dualize needs a space or a proximity lattice");
}

Result roundtrip(const Options& o) {
  auto doc = load_input(o.input);
  auto out = header("roundtrip");
  if (classify(doc) == DocKind::space) {
    auto s = io::space_from_json(doc);
    auto spec = spectrum(open_basis_presentation(s));
    auto homeo = find_homeomorphism(s, spec.space);
    bool involution = co_compact_dual(co_compact_dual(s)) == s;
    out["kind"] = "space";
    out["homeomorphic_to_spectrum"] = homeo.has_value();
    if (homeo) {
      json table = json::object();
      for (std::size_t x = 0; x < s.size(); ++x) table[s.points[x]] = spec.space.points[(*homeo)[x]];
      out["homeomorphism"] = table;
    }
    out["dual_involution"] = involution;
    bool ok = homeo.has_value() && involution;
    out["result"] = ok ? "PASS" : "FAIL";
    return finish(out, ok);
  }
  auto p = io::proximity_from_json(doc);
  auto w = canext_via_duality(p);
  out["kind"] = "proximity";
  out["spectrum"] = io::to_json(w.spectrum);
  out["extension_report"] = io::to_json(w.report);
  if (w.iso) {
    json table = json::object();
    for (std::size_t u = 0; u < w.iso->size(); ++u)
      table[w.via_spectrum.lattice.name(u)] = w.pi.lattice.name((*w.iso)(u));
    out["isomorphism"] = table;
  } else {
    out["isomorphism"] = nullptr;
  }
  out["result"] = w.ok() ? "PASS" : "FAIL";
  return finish(out, w.ok());
}

Result export_dot(const Options& o) {
  auto doc = load_input(o.input);
  switch (classify(doc)) {
    case DocKind::space:
      return {io::space_dot(io::space_from_json(doc)), kOk};
    case DocKind::proximity:
      return {io::lattice_dot(io::raw_proximity_from_json(doc).lattice), kOk};
    case DocKind::morphism:
      break;
  }
  throw Error(ErrorKind::KindMismatch, "export-dot needs a space or a lattice");
}

json error_doc(const std::string& verb, std::string_view kind, const std::string& message) {
  auto doc = header(verb);
  doc["status"] = "error";
  doc["error"] = {{"kind", std::string(kind)}, {"message", message}};
  return doc;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite proximity lattices, canonical extensions and spectra", "proxlat"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, std::pair<std::string, std::function<Result(const Options&)>>> verbs{
      {"check", {"Verify axioms of a proximity lattice or morphism", check}},
      {"canext", {"Build and verify the pi- (and sigma-) canonical extension", canext}},
      {"extend", {"Extend a morphism to the pi-extensions and check preservation", extend}},
      {"spectrum", {"Prime round filters and the spectrum topology", spectrum_verb}},
      {"dualize", {"Co-compact dual of a space or opposite of a proximity lattice", dualize}},
      {"roundtrip", {"Check the duality round trip", roundtrip}},
      {"export-dot", {"Hasse diagram or specialization order in DOT", export_dot}},
  };
  for (const auto& [name, entry] : verbs) {
    auto* sub = app.add_subcommand(name, entry.first);
    sub->add_option("input", o.input, "JSON file or fixture name")->required();
    sub->add_option("-o,--output", o.output, "Write the result here instead of stdout");
    if (name == "check") sub->add_flag("--exhaustive", o.exhaustive, "Quantify over every subset");
    if (name == "canext") {
      sub->add_flag("--sigma", o.sigma, "Also build the sigma-extension");
      sub->add_option("--dot", o.dot, "Write the pi-extension Hasse diagram here");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << dump(error_doc("", "UsageError", e.what()));
    err << "proxlat: " << e.what() << "\n";
    return kParseError;
  }

  const auto verb = app.get_subcommands().front()->get_name();
  Result result;
  try {
    result = verbs.at(verb).second(o);
  } catch (const Error& e) {
    const int status = e.kind() == ErrorKind::ParseError ? kParseError : kPropertyFailure;
    out << dump(error_doc(verb, to_string(e.kind()), e.what()));
    err << "proxlat " << verb << ": " << e.what() << "\n";
    return status;
  } catch (const json::exception& e) {
    out << dump(error_doc(verb, to_string(ErrorKind::ParseError), e.what()));
    err << "proxlat " << verb << ": " << e.what() << "\n";
    return kParseError;
  }

  if (o.output.empty()) {
    out << result.text;
  } else {
    try {
      write_file(o.output, result.text);
    } catch (const Error& e) {
      err << "proxlat " << verb << ": " << e.what() << "\n";
      return kParseError;
    }
  }
  return result.status;
}

}  // namespace proxlat::cli
