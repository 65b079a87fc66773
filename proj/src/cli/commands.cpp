#include <algorithm>
#include <functional>
#include <sstream>

#include "gmlat/catalog.hpp"
#include "gmlat/cli.hpp"
#include "gmlat/counting.hpp"

namespace gmlat::cli {

namespace {

constexpr std::int64_t kDiscSuiteBound = 400;
constexpr std::int64_t kFormSuiteBound = 120;
constexpr std::int64_t kSurjectivityBound = 60;

const std::vector<std::string> kSuites = {"disc-structure", "marking-group", "glue-extension",
                                          "k3-association", "surjectivity",  "mukai"};

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json integers_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

json rationals_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

json signature_json(const Signature& s) { return json::array({s.positive, s.negative}); }

std::string group_string(const IntVector& factors) {
  if (factors.empty()) return "0";
  std::string s;
  for (const auto& f : factors) s += (s.empty() ? "" : " + ") + std::string("Z/") + f.get_str();
  return s;
}

// "lambda1 + lambda2 - tau" for coefficients (1, 1, -1).
std::string combination(const IntVector& c) {
  static const char* names[] = {"lambda1", "lambda2", "tau"};
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const Integer a = abs(c[i]);
    if (s.empty())
      s += c[i] < 0 ? "-" : "";
    else
      s += c[i] < 0 ? " - " : " + ";
    if (a != 1) s += a.get_str() + "*";
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

gm::Variant to_variant(int v) {
  if (v != 1 && v != 2) throw InvalidInput("variant must be 1 or 2, got " + std::to_string(v));
  return static_cast<gm::Variant>(v);
}

// Runs body and maps library exceptions onto the exit-code contract.
Outcome guarded(Report report, const std::function<int(Report&)>& body) {
  Outcome out{std::move(report), kOk};
  try {
    out.exit_code = body(out.report);
  } catch (const InvalidInput& e) {
    out.exit_code = kUsageError;
    out.report.message = e.what();
  } catch (const EnumerationLimit& e) {
    out.exit_code = kUsageError;
    out.report.message = e.what();
  } catch (const PostconditionFailure& e) {
    out.exit_code = kPropertyFailure;
    out.report.message = e.what();
  }
  out.report.status = out.exit_code == kOk ? "ok" : "error";
  return out;
}

std::string rat_text(const json& j) { return to_string(rational_from_json(j)); }

std::string scalar_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

json verify_cell(const std::string& suite, std::int64_t d, gm::Variant v, const EnumerationOptions& opts) {
  json cell = {{"d", d}, {"variant", static_cast<int>(v)}};
  bool passed = false;
  try {
    if (suite == "disc-structure") {
      const auto check = gm::check_closed_form(d, v);
      const Lattice l = gm::gram_Ld(d, v);
      cell["invariant_factors"] = integers_json(discriminant_form(l).invariant_factors());
      passed = check.passed() && l.determinant() == d;
    } else if (suite == "marking-group") {
      cell["order"] = gm::marking_group(d, v, opts).size();
      passed = true;
    } else if (suite == "glue-extension") {
      const auto rep = gm::verify_marked_equals_labelled(d, v, opts);
      cell["glue_order"] = integer_json(rep.glue_order);
      cell["glue_total"] = rep.glue_total;
      cell["glue_reverses_bilinear"] = rep.glue_reverses_bilinear;
      cell["extends_with_minus_id"] = rep.extends_with_minus_id;
      passed = rep.verdict();
    } else if (suite == "surjectivity") {
      const auto rep = counting::disc_surjectivity_report(gm::gram_Ld(d, v), opts);
      cell["isometry_group_order"] = rep.isometry_group_order;
      cell["image_order"] = rep.image_order;
      cell["form_automorphism_order"] = rep.form_automorphism_order;
      passed = rep.surjective;
    }
  } catch (const PostconditionFailure& e) {
    cell["detail"] = e.what();
  }
  cell["passed"] = passed;
  return cell;
}

json k3_cell(std::int64_t d) {
  const auto rep = gm::k3_association_report(d);
  json cell = {{"d", d},
               {"complement_signature", signature_json(rep.complement_signature)},
               {"target_signature", signature_json(rep.target_signature)},
               {"forms_isomorphic", rep.forms_isomorphic},
               {"lattice_verdict", rep.lattice_verdict},
               {"star_star", rep.predicate},
               {"passed", rep.agrees()}};
  return cell;
}

json mukai_cell() {
  const auto rep = gm::mukai_checks();
  return {{"complement_signature", signature_json(rep.complement_signature)},
          {"complement_primitive", rep.complement_primitive},
          {"bilinear_anti_isometric", rep.bilinear_anti_isometric},
          {"quadratic_anti_isometric", rep.quadratic_anti_isometric},
          {"glue_total", rep.glue_total},
          {"reflection_trivial_on_disc", rep.reflection_trivial_on_disc},
          {"reflection_orientation", rep.reflection_orientation},
          {"passed", rep.passed()}};
}

}  // namespace

json integer_json(const Integer& x) {
  if (fits_int64(x)) return json(to_int64(x));
  return json(x.get_str());
}

json rational_json(const Rational& x) {
  Rational r = x;
  r.canonicalize();
  return {{"num", integer_json(r.get_num())}, {"den", integer_json(r.get_den())}};
}

Rational rational_from_json(const json& j) {
  auto part = [](const json& v) { return v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<long>()); };
  return make_rational(part(j.at("num")), part(j.at("den")));
}

json Report::to_json() const {
  return {{"command", command}, {"inputs", inputs}, {"results", results}, {"status", status}, {"message", message}};
}

Report Report::from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.results = j.at("results");
  r.status = j.at("status").get<std::string>();
  r.message = j.at("message").get<std::string>();
  if (r.status != "ok" && r.status != "error") throw InvalidInput("report status must be ok or error");
  return r;
}

Outcome cmd_disc(std::int64_t d, std::optional<int> variant, const EnumerationOptions& opts) {
  Report report;
  report.command = "disc";
  report.inputs = {{"d", d}};
  if (variant) report.inputs["variant"] = *variant;
  return guarded(std::move(report), [&](Report& r) {
    const gm::GMDiscriminant gd(d);
    const gm::Variant v = to_variant(variant.value_or(1));
    gd.require_variant(v);
    const Lattice l = gm::gram_Ld(d, v);
    const FiniteQuadraticForm disc = discriminant_form(l);

    json res;
    res["d"] = d;
    res["variant"] = static_cast<int>(v);
    res["residue_class"] = gd.residue_class();
    res["even"] = l.even();
    res["gram"] = matrix_json(l.gram());
    res["determinant"] = integer_json(l.determinant());
    res["group"] = group_string(disc.invariant_factors());
    res["invariant_factors"] = integers_json(disc.invariant_factors());
    res["value_kind"] = l.even() ? "q" : "b";
    res["generators"] = json::array();
    for (std::size_t i = 0; i < disc.generator_count(); ++i) {
      const Element g = disc.generator(i);
      res["generators"].push_back({{"order", integer_json(disc.invariant_factors()[i])},
                                   {"lift", rationals_json(disc.presentation()->generators[i])},
                                   {"value", rational_json(l.even() ? disc.q(g) : disc.b(g, g))}});
    }

    const gm::ClosedFormDisc closed = gm::closed_form_disc(d, v);
    const gm::ClosedFormCheck check = gm::check_closed_form(d, v);
    json closed_json = json::array();
    for (std::size_t i = 0; i < closed.orders.size(); ++i)
      closed_json.push_back({{"label", closed.labels[i]},
                             {"order", integer_json(closed.orders[i])},
                             {"lift", rationals_json(closed.generators[i])}});
    res["closed_form"] = {{"group", group_string(closed.orders)}, {"generators", closed_json}, {"matches", check.passed()}};

    const std::vector<Isometry> group = gm::marking_group(d, v, opts);
    const Isometry gamma = gm::marking_generator(d, v, opts);
    const IntVector tau_image = gamma.matrix().col(2);
    res["marking_group"] = {{"order", group.size()},
                            {"generator", matrix_json(gamma.matrix())},
                            {"tau_image", "tau -> " + combination(tau_image)},
                            {"acts_as_minus_identity", gm::acts_as_minus_identity(disc, disc_action(gamma, disc))}};
    const bool passed = check.passed() && res["marking_group"]["acts_as_minus_identity"].get<bool>();
    res["verdict"] = passed ? "pass" : "fail";
    if (!passed) r.message = "closed-form or -id check failed";
    r.results = std::move(res);
    return passed ? kOk : kPropertyFailure;
  });
}

Outcome cmd_count(std::int64_t d) {
  Report report;
  report.command = "count";
  report.inputs = {{"d", d}};
  return guarded(std::move(report), [&](Report& r) {
    const counting::CountReport c = counting::untwisted_counts(d);
    r.results = {{"d", c.d},
                 {"satisfies_star_star", c.satisfies_star_star},
                 {"tau", c.tau},
                 {"m", c.m},
                 {"fiber_count", c.fiber_count},
                 {"multiplicity_factor", c.multiplicity_factor}};
    return kOk;
  });
}

Outcome cmd_twisted(std::int64_t d_prime, bool include_r1) {
  Report report;
  report.command = "twisted";
  report.inputs = {{"d_prime", d_prime}, {"include_r1", include_r1}};
  return guarded(std::move(report), [&](Report& r) {
    const counting::TwistedReport t = counting::twisted_report(d_prime, {.include_r1 = include_r1});
    json decomps = json::array();
    for (const auto& dec : t.decompositions) decomps.push_back({{"d", dec.d}, {"r", dec.r}});
    json counts = json::array();
    for (const auto& c : t.per_decomposition)
      counts.push_back({{"d", c.d}, {"r", c.r}, {"m_prime", c.m_prime}, {"fiber_lower_bound", c.fiber_lower_bound}});
    json unsupported = json::array();
    for (const auto& dec : t.unsupported) unsupported.push_back({{"d", dec.d}, {"r", dec.r}});
    r.results = {{"d_prime", t.d_prime},
                 {"satisfies_star_star_prime", t.satisfies_star_star_prime},
                 {"decompositions", decomps},
                 {"counts", counts},
                 {"unsupported", unsupported}};
    if (!t.unsupported.empty()) counting::twisted_counts(2, 2);  // raises the degeneracy message
    return kOk;
  });
}

Outcome cmd_verify(std::int64_t start, std::int64_t end, const std::string& suite, const EnumerationOptions& opts) {
  Report report;
  report.command = "verify";
  report.inputs = {{"start", start}, {"end", end}, {"suite", suite}};
  return guarded(std::move(report), [&](Report& r) {
    if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
      throw InvalidInput("unknown suite '" + suite +
                         "' (expected disc-structure, marking-group, glue-extension, k3-association, surjectivity "
                         "or mukai)");
    if (start < 0 || end < start)
      throw InvalidInput("invalid range [" + std::to_string(start) + ", " + std::to_string(end) + "]");
    const std::int64_t bound =
        suite == "k3-association" ? kFormSuiteBound : suite == "surjectivity" ? kSurjectivityBound : kDiscSuiteBound;
    if (suite != "mukai" && end > bound)
      throw InvalidInput("range end " + std::to_string(end) + " exceeds the feasibility bound " +
                         std::to_string(bound) + " for suite " + suite);

    json cells = json::array();
    if (suite == "mukai") {
      cells.push_back(mukai_cell());
    } else if (suite == "k3-association") {
      for (const auto& [d, v] : gm::admissible_range(start, end))
        if (v == gm::Variant::first) cells.push_back(k3_cell(d));
    } else {
      for (const auto& [d, v] : gm::admissible_range(start, end)) cells.push_back(verify_cell(suite, d, v, opts));
    }
    std::size_t failed = 0;
    for (const auto& c : cells) failed += c["passed"].get<bool>() ? 0 : 1;
    r.results = {{"suite", suite}, {"cells", cells}, {"checked", cells.size()}, {"failed", failed}};
    if (suite == "surjectivity")
      r.results["note"] = "run on the rank-3 lattices L_d, which share the discriminant-group shapes of S_w";
    if (failed > 0) {
      r.message = std::to_string(failed) + " of " + std::to_string(cells.size()) + " checks failed";
      return kPropertyFailure;
    }
    return kOk;
  });
}

std::string render(const Report& report, Format format) {
  if (format == Format::json) return report.to_json().dump(2) + "\n";
  const json& res = report.results;
  std::ostringstream os;
  if (report.status != "ok" && res.empty()) return "";

  if (format == Format::csv) {
    if (report.command == "disc") {
      os << "index,order,value_kind,value\n";
      for (std::size_t i = 0; i < res["generators"].size(); ++i) {
        const json& g = res["generators"][i];
        os << i + 1 << "," << scalar_text(g["order"]) << "," << res["value_kind"].get<std::string>() << ","
           << rat_text(g["value"]) << "\n";
      }
    } else if (report.command == "count") {
      os << "d,satisfies_star_star,tau,m,fiber_count,multiplicity_factor\n"
         << res["d"] << "," << res["satisfies_star_star"] << "," << res["tau"] << "," << res["m"] << ","
         << res["fiber_count"] << "," << res["multiplicity_factor"] << "\n";
    } else if (report.command == "twisted") {
      os << "d_prime,d,r,m_prime,fiber_lower_bound\n";
      for (const auto& c : res["counts"])
        os << res["d_prime"] << "," << c["d"] << "," << c["r"] << "," << c["m_prime"] << ","
           << c["fiber_lower_bound"] << "\n";
    } else if (report.command == "verify") {
      os << "suite,d,variant,passed\n";
      for (const auto& c : res["cells"])
        os << res["suite"].get<std::string>() << "," << (c.contains("d") ? c["d"].dump() : "") << ","
           << (c.contains("variant") ? c["variant"].dump() : "") << "," << c["passed"] << "\n";
    }
    return os.str();
  }

  if (report.command == "disc") {
    os << "d = " << res["d"] << " (" << res["residue_class"] << " mod 8), variant " << res["variant"] << "\n";
    os << "Gram:\n";
    for (const auto& row : res["gram"]) {
      os << "  [";
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << scalar_text(row[j]);
      os << "]\n";
    }
    os << "determinant " << scalar_text(res["determinant"]) << ", " << (res["even"].get<bool>() ? "even" : "odd")
       << "\n";
    os << "Disc = " << res["group"].get<std::string>();
    if (res["closed_form"]["group"] != res["group"]) os << " = " << res["closed_form"]["group"].get<std::string>();
    os << "\n";
    const std::string kind = res["value_kind"];
    for (std::size_t i = 0; i < res["generators"].size(); ++i) {
      const json& g = res["generators"][i];
      os << "  g" << i + 1 << ": order " << scalar_text(g["order"]) << ", lift (";
      for (std::size_t k = 0; k < g["lift"].size(); ++k) os << (k ? ", " : "") << rat_text(g["lift"][k]);
      os << "), " << kind << " = " << rat_text(g["value"]) << "\n";
    }
    os << "closed form:";
    for (const auto& g : res["closed_form"]["generators"])
      os << " " << g["label"].get<std::string>() << " (order " << scalar_text(g["order"]) << ")";
    os << (res["closed_form"]["matches"].get<bool>() ? ", matches" : ", MISMATCH") << "\n";
    const json& mg = res["marking_group"];
    os << "G'(L_d): order " << mg["order"] << ", generator " << mg["tau_image"].get<std::string>() << "\n";
    os << "acts as -id on Disc: " << (mg["acts_as_minus_identity"].get<bool>() ? "yes" : "no") << "\n";
    os << "verdict: " << res["verdict"].get<std::string>() << "\n";
  } else if (report.command == "count") {
    os << "d = " << res["d"] << ": tau = " << res["tau"] << ", m = " << res["m"] << ", fibers = " << res["fiber_count"]
       << ", multiplicity factor " << res["multiplicity_factor"] << "\n";
  } else if (report.command == "twisted") {
    os << "d' = " << res["d_prime"] << ": (**') " << (res["satisfies_star_star_prime"].get<bool>() ? "holds" : "fails")
       << "\n";
    if (res["decompositions"].empty()) os << "no decompositions d' = d*r^2 with d satisfying (**)\n";
    for (const auto& c : res["counts"])
      os << "  (d, r) = (" << c["d"] << ", " << c["r"] << "): m' = " << c["m_prime"] << ", fibers >= "
         << c["fiber_lower_bound"] << "\n";
    for (const auto& dec : res["decompositions"])
      if (dec["r"] == 1) os << "  (d, r) = (" << dec["d"] << ", 1): untwisted\n";
    for (const auto& c : res["unsupported"])
      os << "  (d, r) = (" << c["d"] << ", " << c["r"] << "): unsupported\n";
  } else if (report.command == "verify") {
    for (const auto& c : res["cells"]) {
      if (c.contains("d"))
        os << "d = " << c["d"] << (c.contains("variant") ? " v" + c["variant"].dump() : "") << ": ";
      else
        os << res["suite"].get<std::string>() << ": ";
      os << (c["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
    if (res.contains("note")) os << "note: " << res["note"].get<std::string>() << "\n";
    os << res["checked"] << " checked, " << res["failed"] << " failed\n";
  }
  return os.str();
}

}  // namespace gmlat::cli
