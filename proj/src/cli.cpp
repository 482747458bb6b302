#include "knotsig/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "knotsig/error.hpp"

namespace knotsig {

namespace {

Json input_json(const CatalogueRecord& r) {
  return Json{{"kind", r.kind == InputKind::kPd ? "pd" : "braid"}, {"payload", r.payload}};
}

// Runs fn(i) for i < n on up to `jobs` threads. Results are indexed, so the
// caller sees them in input order whatever the scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t n, int jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failure(n);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          out[i] = fn(i);
        } catch (...) {
          failure[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  // Rethrow the first failure in input order, as the serial loop would.
  for (const auto& f : failure)
    if (f) std::rethrow_exception(f);
  return out;
}

}  // namespace

Json compute_record(const CatalogueRecord& r, const std::vector<UnitCirclePoint>& omegas) {
  Json j{{"name", r.name}, {"input", input_json(r)}};
  const LinkDiagram d = record_diagram(r);
  j["stats"] = diagram_stats(d);
  j["components"] = d.component_count();
  j["positive"] = d.is_positive();
  j["split"] = is_split(d);
  if (d.crossing_count() == 0) {
    // Crossingless diagrams are unlinks: every invariant below is zero.
    j["sigma"] = 0;
  } else {
    try {
      j["checkerboard"] = checkerboard_json(d);
      j["sigma"] = j["checkerboard"]["signature"];
    } catch (const PreconditionError& e) {
      j["checkerboard_error"] = e.what();
    }
  }
  if (r.kind == InputKind::kBraid) {
    const BraidWord b = parse_braid(r.payload);
    const IntMatrix a = seifert_matrix(b).matrix;
    Json sigs = Json::array();
    for (const auto& w : omegas) {
      Json s = to_json(levine_tristram(a, w));
      s["omega"] = w.to_string();
      sigs.push_back(std::move(s));
    }
    // The closure surface of a split braid is disconnected; the Alexander
    // polynomial of a split link is zero.
    const IntPolynomial delta = j["split"].get<bool>() ? IntPolynomial() : alexander(a);
    j["seifert"] = Json{{"matrix", to_json(a)}, {"alexander", to_json(delta)}, {"signatures", sigs}};
  }
  return j;
}

Json verify_record(const CatalogueRecord& r) {
  Json j{{"name", r.name}, {"line", r.line}, {"input", input_json(r)}};
  try {
    if (r.positive && !*r.positive) throw PreconditionError("record is marked as not positive");
    const BoundReport rep = certify_bound(record_diagram(r), r.name);
    j["certificate"] = to_json(rep);
    std::vector<std::string> problems;
    if (rep.verdict == Verdict::kFailed) problems.push_back("an inequality of the certificate fails");
    if (rep.betti > 0 && rep.sigma <= 0) problems.push_back("non-trivial positive link with sigma <= 0");
    if (r.expected_sigma && *r.expected_sigma != rep.sigma)
      problems.push_back("expected sigma " + std::to_string(*r.expected_sigma) + ", got " + std::to_string(rep.sigma));
    if (r.expected_b1 && *r.expected_b1 != rep.betti)
      problems.push_back("expected b1 " + std::to_string(*r.expected_b1) + ", got " + std::to_string(rep.betti));
    j["problems"] = problems;
    j["status"] = problems.empty() ? to_string(rep.verdict) : "FAILED";
  } catch (const PreconditionError& e) {
    j["status"] = "REJECTED";
    j["error"] = e.what();
  } catch (const ParseError& e) {
    j["status"] = "REJECTED";
    j["error"] = e.what();
  }
  return j;
}

namespace {

struct Options {
  std::string pd, braid, catalogue, rotation = "ccw";
  std::vector<std::string> omegas;
  int pos = 0, nmax = 8, jobs = 1;
  bool json = false;
};

// Records from --pd, --braid or --catalogue; catalogue errors are returned
// alongside so the caller can decide whether they are fatal.
std::vector<CatalogueEntry> gather(const Options& o) {
  const int given = !o.pd.empty() + !o.braid.empty() + !o.catalogue.empty();
  if (given != 1) throw ParseError("give exactly one of --pd, --braid and --catalogue");
  if (!o.catalogue.empty()) {
    std::ifstream in(o.catalogue);
    if (!in) throw ParseError("cannot open catalogue '" + o.catalogue + "'");
    return read_catalogue(in);
  }
  Json line{{"name", !o.pd.empty() ? o.pd : o.braid}, {"rotation", o.rotation}};
  line[!o.pd.empty() ? "pd" : "braid"] = !o.pd.empty() ? o.pd : o.braid;
  std::vector<CatalogueEntry> out;
  out.emplace_back(parse_catalogue_line(line.dump(), 1));
  return out;
}

std::string compute_text(const Json& j) {
  std::ostringstream s;
  const Json& st = j["stats"];
  s << j["name"].get<std::string>() << ": c=" << st["c"] << " s=" << st["s"] << " b1=" << st["b1"] << " faces=" << st["faces"]
    << " reduced=" << st["reduced"];
  if (j.contains("checkerboard")) {
    const Json& cb = j["checkerboard"];
    s << " fw=" << cb["fw"] << " fb=" << cb["fb"] << " mu=" << cb["mu"][0] << "," << cb["mu"][1];
  }
  if (j.contains("sigma")) s << " sigma=" << j["sigma"];
  if (j.contains("checkerboard_error")) s << " (no checkerboard data: " << j["checkerboard_error"].get<std::string>() << ")";
  if (j.contains("seifert")) {
    const Json& se = j["seifert"];
    s << "\n  alexander offset " << se["alexander"]["offset"] << " coefficients " << se["alexander"]["coefficients"];
    for (const auto& w : se["signatures"])
      s << "\n  sigma(" << w["omega"].get<std::string>() << ") = " << w["signature"] << " nullity " << w["nullity"];
  }
  return s.str();
}

int cmd_compute(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<UnitCirclePoint> omegas;
  for (const auto& w : o.omegas) omegas.push_back(UnitCirclePoint::parse(w));
  if (omegas.empty()) omegas.emplace_back(1, 1);
  const auto entries = gather(o);
  bool input_error = false;
  const auto results = parallel_map<Json>(entries.size(), o.jobs, [&](std::size_t i) -> Json {
    if (const auto* e = std::get_if<CatalogueError>(&entries[i])) return Json{{"line", e->line}, {"error", e->message}};
    const auto& r = std::get<CatalogueRecord>(entries[i]);
    try {
      return compute_record(r, omegas);
    } catch (const std::runtime_error& e) {
      return Json{{"line", r.line}, {"name", r.name}, {"error", e.what()}};
    }
  });
  for (const auto& j : results) input_error = input_error || j.contains("error");
  if (o.json) {
    out << (o.catalogue.empty() ? results[0] : Json(results)).dump(2) << "\n";
  } else {
    for (const auto& j : results) {
      if (j.contains("error")) err << "line " << j["line"] << ": " << j["error"].get<std::string>() << "\n";
      else out << compute_text(j) << "\n";
    }
  }
  return input_error ? kExitInputError : kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto entries = gather(o);
  const auto results = parallel_map<Json>(entries.size(), o.jobs, [&](std::size_t i) -> Json {
    if (const auto* e = std::get_if<CatalogueError>(&entries[i]))
      return Json{{"line", e->line}, {"status", "REJECTED"}, {"error", e->message}};
    return verify_record(std::get<CatalogueRecord>(entries[i]));
  });
  std::map<std::string, int> counts{{"HOLDS", 0}, {"DEGRADED", 0}, {"FAILED", 0}, {"REJECTED", 0}};
  for (const auto& j : results) ++counts[j["status"].get<std::string>()];
  const Json summary{{"records", results.size()},
                     {"holds", counts["HOLDS"]},
                     {"degraded", counts["DEGRADED"]},
                     {"failed", counts["FAILED"]},
                     {"rejected", counts["REJECTED"]}};
  if (o.json) {
    out << Json{{"records", results}, {"summary", summary}}.dump(2) << "\n";
  } else {
    for (const auto& j : results) {
      const std::string status = j["status"].get<std::string>();
      const std::string name = j.value("name", "line " + std::to_string(j["line"].get<int>()));
      if (status == "REJECTED") {
        err << name << ": REJECTED: " << j["error"].get<std::string>() << "\n";
        continue;
      }
      const Json& c = j["certificate"];
      out << name << ": " << status << " sigma=" << c["sigma"] << " b1=" << c["b1"] << " c=" << c["crossings"]
          << " reduced_c=" << c["reduced_crossings"] << "\n";
      for (const auto& p : j["problems"]) out << "  " << p.get<std::string>() << "\n";
    }
    out << "records " << results.size() << ": HOLDS " << counts["HOLDS"] << ", DEGRADED " << counts["DEGRADED"] << ", FAILED "
        << counts["FAILED"] << ", rejected " << counts["REJECTED"] << "\n";
  }
  if (counts["FAILED"] > 0) return kExitVerificationFailed;
  return counts["REJECTED"] > 0 ? kExitInputError : kExitOk;
}

std::string twist_summary(const TwistFamilyReport& r) {
  const auto n0 = [](const std::optional<int>& n) { return n ? std::to_string(*n) : std::string("none"); };
  std::ostringstream s;
  s << "omega0 = " << r.omega0.to_string() << "; braid family N0 = " << n0(r.n0) << (r.monotone ? " (monotone)" : " (NOT monotone)")
    << "; band family N0 = " << n0(r.band_n0) << (r.band_monotone ? " (monotone)" : " (NOT monotone)") << "; det S_N = "
    << r.affine_intercept.get_str() << (r.affine_slope < 0 ? " - " : " + ") << mpz_class(abs(r.affine_slope)).get_str() << " N"
    << (r.affine_exact ? " (exact)" : " (NOT affine)");
  return s.str();
}

int cmd_twist(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.braid.empty()) throw ParseError("twist needs --braid");
  const TwistFamilyReport r = twist_family_experiment(parse_braid(o.braid), o.pos, o.nmax);
  const std::string summary = twist_summary(r);
  if (o.json) {
    Json j = to_json(r);
    j["summary"] = summary;
    out << j.dump(2) << "\n";
    err << summary << "\n";
  } else {
    out << "N  sigma(K(N))  sigma(S_N)  det(S_N)\n";
    for (int n = 0; n <= r.nmax; ++n) {
      const auto k = static_cast<std::size_t>(n);
      out << n << "  " << r.sigma[k] << "  " << r.band_sigma[k] << "  " << r.det[k].get_str() << "\n";
    }
    out << summary << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signature bounds for positive links"};
  app.require_subcommand(1);
  Options o;
  const auto add_input = [&](CLI::App* sub, bool catalogue) {
    sub->add_option("--pd", o.pd, "PD code, e.g. \"X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\"");
    sub->add_option("--braid", o.braid, "braid word \"N: l1 l2 ...\"");
    if (catalogue) sub->add_option("--catalogue", o.catalogue, "line-delimited JSON catalogue");
    sub->add_option("--pd-rotation", o.rotation, "ccw (default) or cw")->check(CLI::IsMember({"ccw", "cw"}));
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  CLI::App* compute = app.add_subcommand("compute", "invariants of a diagram or braid closure");
  add_input(compute, true);
  compute->add_option("--omega", o.omegas, "angle piAngle:p/q for omega = exp(i pi p/q); repeatable");
  CLI::App* verify = app.add_subcommand("verify", "certify b1/48 <= sigma <= b1 for positive links");
  add_input(verify, true);
  CLI::App* twist = app.add_subcommand("twist", "twist-family experiment on a braid letter");
  twist->add_option("--braid", o.braid, "positive braid word")->required();
  twist->add_option("--pos", o.pos, "letter position (0-based)");
  twist->add_option("--nmax", o.nmax, "largest number of full twists");
  twist->add_flag("--json", o.json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }
  try {
    if (compute->parsed()) return cmd_compute(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    return cmd_twist(o, out, err);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitInputError;
}

}  // namespace knotsig
