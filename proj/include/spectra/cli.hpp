#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spectra/spectra.hpp"

namespace spectra::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

class InputError : public SpectraError {
 public:
  using SpectraError::SpectraError;
};

/// Parses {"vertices": [[int, ...], ...]} with rows of equal length 2..4.
inline std::vector<IntVector> parsePolytopeDoc(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("input must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "vertices") throw InputError("unexpected key '" + key + "'");
  if (!doc.contains("vertices") || !doc["vertices"].is_array() || doc["vertices"].empty())
    throw InputError("'vertices' must be a non-empty array");
  std::vector<IntVector> out;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array()) throw InputError("each vertex must be an array of integers");
    IntVector v;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InputError("vertex coordinates must be integers");
      v.push_back(x.get<std::int64_t>());
    }
    if (v.size() < 2 || v.size() > 4) throw InputError("vertex length must be between 2 and 4");
    if (!out.empty() && v.size() != out.front().size()) throw InputError("vertices have different lengths");
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<std::int64_t> parseWeights(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("bad weight '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("no weights given");
  return out;
}

inline Json spectrumJson(const SpectrumPoly& s, int n) {
  const auto st = spectrumStats(s, n);
  Json terms = Json::array();
  for (const auto& [e, m] : s.terms()) terms.push_back({{"exponent", e.str()}, {"multiplicity", m}});
  return {{"n", n}, {"mu", st.mu}, {"terms", terms}, {"variance", st.variance.str()}};
}

inline std::string spectrumText(const SpectrumPoly& s, int n) {
  const auto st = spectrumStats(s, n);
  std::ostringstream os;
  os << "n: " << n << "\nmu: " << st.mu << "\nspectrum: " << s.str() << "\nvariance: " << st.variance << "\n";
  return os.str();
}

inline Json reportJson(const VerificationReport& r) {
  Json ctx = Json::object();
  for (const auto& [k, v] : r.context) ctx[k] = v;
  Json j = {{"name", r.checkName}, {"kind", toString(r.kind)}, {"status", toString(r.status)}};
  if (r.status != CheckStatus::Skipped) {
    j["lhs"] = r.lhs.str();
    j["rhs"] = r.rhs.str();
  }
  if (!r.note.empty()) j["note"] = r.note;
  j["context"] = ctx;
  return j;
}

inline std::set<std::string> checksFor(const std::string& group) {
  if (group == "variance") return {"variance"};
  if (group == "noether") return {"noether"};
  if (group == "hertling") return {"hertling"};
  if (group == "symmetry") return {"symmetry"};
  if (group == "oracle") return {"oracle", "algebraic_2d", "stringy_2d"};
  throw InputError("unknown check '" + group + "'");
}

struct Options {
  std::string input;
  std::string format = "text";
  int oracleCutoff = 0;
  std::string expectedMuHat;
  std::string checks = "all";
  std::string weights;
  int m = 0;
};

inline std::string readInput(const std::string& path, std::istream& in) {
  if (path.empty()) throw InputError("--input is required");
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline int runCommand(const std::string& cmd, const Options& opt, std::istream& in, std::ostream& out) {
  const bool json = opt.format == "json";
  auto emitSpectrum = [&](const SpectrumPoly& s, int n) {
    if (json) out << spectrumJson(s, n).dump(2) << "\n";
    else out << spectrumText(s, n);
  };

  if (cmd == "wps") {
    const WpsWeights w(parseWeights(opt.weights));
    emitSpectrum(wpsSpectrum(w), w.dimension());
    return kExitOk;
  }
  if (cmd == "hirzebruch") {
    const auto P = ghvNewtonPolytope(HirzebruchModel{opt.m});
    emitSpectrum(algebraicSpectrum2D(P), 2);
    return kExitOk;
  }
  if (cmd == "ghv") {
    const auto P = ghvNewtonPolytope(WpsWeights(parseWeights(opt.weights)));
    Json verts = Json::array();
    for (const auto& v : P.vertices()) verts.push_back(v);
    const auto mu = normalizedVolume(P);
    if (json) {
      out << Json{{"n", P.dimension()}, {"vertices", verts}, {"mu", toInt64(mu)}}.dump(2) << "\n";
    } else {
      out << "n: " << P.dimension() << "\nvertices: " << verts.dump() << "\nmu: " << mu.get_str() << "\n";
    }
    return kExitOk;
  }

  const LatticePolytope P = buildPolytope(parsePolytopeDoc(readInput(opt.input, in)));
  const int n = P.dimension();

  if (cmd == "spectrum") {
    emitSpectrum(geometricSpectrum(P), n);
    return kExitOk;
  }
  if (cmd == "ehrhart") {
    const auto e = ehrhartDelta(P);
    const bool pal = isPalindromic(e.deltaVector);
    if (json) {
      out << Json{{"n", n},
                  {"delta", e.deltaVector},
                  {"dilate_counts", e.dilateCounts},
                  {"palindromic", pal},
                  {"reflexive", classifyPolytope(P).isReflexive}}
                 .dump(2)
          << "\n";
    } else {
      out << "n: " << n << "\ndelta: " << Json(e.deltaVector).dump() << "\ndilate_counts: "
          << Json(e.dilateCounts).dump() << "\npalindromic: " << (pal ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }
  if (cmd == "polar") {
    const auto polar = polarPolytope(P);
    Json verts = Json::array();
    for (const auto& u : polar.vertices) {
      Json row = Json::array();
      for (const auto& x : u) row.push_back(x.str());
      verts.push_back(row);
    }
    if (json) {
      out << Json{{"n", n}, {"vertices", verts}, {"normalized_volume", polar.normalizedVolume.str()}}.dump(2) << "\n";
    } else {
      out << "n: " << n << "\nvertices: " << verts.dump() << "\nnormalized_volume: " << polar.normalizedVolume
          << "\n";
    }
    return kExitOk;
  }
  if (cmd == "resolve" || cmd == "muhat" || cmd == "stringy") {
    const auto res = resolveFan2D(P);
    if (cmd == "stringy") {
      emitSpectrum(stringyE2D(res), n);
      return kExitOk;
    }
    if (cmd == "muhat") {
      const Rational mh = muHat2D(res);
      if (json) {
        out << Json{{"muhat", mh.str()}, {"r", res.r}, {"c1_squared", res.c1Squared}}.dump(2) << "\n";
      } else {
        out << "muhat: " << mh << "\nr: " << res.r << "\nc1_squared: " << res.c1Squared << "\n";
      }
      return kExitOk;
    }
    Json rays = Json::array();
    std::ostringstream text;
    for (int i = 0; i < res.r; ++i) {
      rays.push_back({{"vector", res.fan.rays[i]},
                      {"nu", res.fan.nu[i].str()},
                      {"inserted", static_cast<bool>(res.inserted[i])},
                      {"self_intersection", res.selfIntersections[i]}});
      text << Json(res.fan.rays[i]).dump() << " nu=" << res.fan.nu[i] << " D^2=" << res.selfIntersections[i]
           << (res.inserted[i] ? " inserted" : "") << "\n";
    }
    if (json) {
      out << Json{{"rays", rays}, {"r", res.r}, {"c1_squared", res.c1Squared}}.dump(2) << "\n";
    } else {
      out << text.str() << "r: " << res.r << "\nc1_squared: " << res.c1Squared << "\n";
    }
    return kExitOk;
  }
  if (cmd == "verify") {
    std::set<std::string> wanted;
    bool all = false;
    std::stringstream ss(opt.checks);
    std::string group;
    while (std::getline(ss, group, ',')) {
      if (group == "all") all = true;
      else wanted.merge(checksFor(group));
    }
    VerifyOptions vo;
    vo.oracleCutoff = opt.oracleCutoff;
    if (!opt.expectedMuHat.empty()) vo.expectedMuHat = Rational::parse(opt.expectedMuHat);
    if (vo.oracleCutoff != 0 && vo.oracleCutoff < n + 2) throw ParameterError("--oracle-cutoff must be at least n+2");
    std::vector<VerificationReport> reports;
    for (auto& r : verifyAll(P, vo))
      if (all || wanted.count(r.checkName)) reports.push_back(std::move(r));
    const bool ok = allPassed(reports);
    if (json) {
      Json checks = Json::array();
      for (const auto& r : reports) checks.push_back(reportJson(r));
      out << Json{{"n", n}, {"checks", checks}, {"all_passed", ok}}.dump(2) << "\n";
    } else {
      for (const auto& r : reports) {
        out << toString(r.status) << "  " << r.checkName;
        if (r.status != CheckStatus::Skipped) out << "  " << r.lhs << (r.kind == CheckKind::Inequality ? " >= " : " = ") << r.rhs;
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << "\n";
      }
      out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return ok ? kExitOk : kExitVerificationFailed;
  }
  throw InputError("unknown command '" + cmd + "'");
}

/// Entry point of the `spectra` tool. Returns the process exit code.
inline int runCli(const std::vector<std::string>& args, std::istream& in = std::cin, std::ostream& out = std::cout,
                  std::ostream& err = std::cerr) {
  CLI::App app{"Spectra of lattice polytopes and stacky invariants", "spectra"};
  Options opt;
  app.add_option("--input", opt.input, "Polytope JSON file, or - for stdin");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--oracle-cutoff", opt.oracleCutoff, "Truncation for the twisted Ehrhart oracle (default n+2)");
  app.add_option("--expected-muhat", opt.expectedMuHat, "Expected mu-hat as p/q (dimension >= 3 comparisons)");
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {{"spectrum", "Geometric spectrum"},
                      {"ehrhart", "Ehrhart delta-vector"},
                      {"polar", "Polar polytope and its normalized volume"},
                      {"resolve", "Smooth resolution of the face fan (2D)"},
                      {"muhat", "Stacky Chern number mu-hat (2D)"},
                      {"stringy", "Stacky E-function via a resolution (2D)"},
                      {"verify", "Run the verification checks"},
                      {"wps", "Spectrum of a weighted projective space"},
                      {"hirzebruch", "Spectrum of the Hirzebruch mirror model"},
                      {"ghv", "Newton polytope of the weighted projective mirror model"}};
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    const std::string name = s.name;
    if (name == "verify")
      sub->add_option("--checks", opt.checks, "variance,noether,hertling,symmetry,oracle,all");
    if (name == "wps" || name == "ghv") sub->add_option("--weights", opt.weights, "Weights 1,l1,...,ln")->required();
    if (name == "hirzebruch") sub->add_option("--m", opt.m, "Hirzebruch parameter")->required();
  }

  std::vector<std::string> storage;
  storage.push_back("spectra");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return runCommand(app.get_subcommands().front()->get_name(), opt, in, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const SpectraError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace spectra::cli
