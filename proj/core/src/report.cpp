#include "thq/report.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "thq/errors.hpp"

namespace thq {

bool Pi1Certificate::issued() const {
  if (steps.empty()) return false;
  for (const CertificateStep& s : steps)
    if (!s.cited && !s.pass) return false;
  return true;
}

Pi1Certificate pi1_certificate(const WeightData& wd) {
  Pi1Certificate cert;
  const int n = wd.n;
  const int d = wd.d;
  auto computed = [&](std::string name, std::string claim, bool pass) {
    cert.steps.push_back({std::move(name), std::move(claim), "", false, pass});
  };
  auto cited = [&](std::string name, std::string claim, std::string citation) {
    cert.steps.push_back({std::move(name), std::move(claim), std::move(citation), true, true});
  };

  {
    std::ostringstream c;
    c << "n = " << n << ", d = " << d << ", and n >= d + 2";
    computed("shape", c.str(), n >= d + 2);
  }

  const int fiber_dim = 2 * n - d;
  {
    std::ostringstream c;
    c << "the moment fiber has dim 2n - d = " << fiber_dim << " >= 3, cut out by d = " << d
      << " quadrics in C^" << 2 * n;
    computed("fiber_complete_intersection", c.str(), fiber_dim >= 3);
  }

  const SingularLocus sing = singular_strata(wd);
  int max_stratum = 0;
  for (const Stratum& s : sing.strata) max_stratum = std::max(max_stratum, s.dimension);
  if (d == 1) {
    std::ostringstream c;
    c << "the fiber is a hypersurface of dim " << fiber_dim
      << " and its singular locus is the origin alone (strata: " << sing.strata.size()
      << ", max dim " << max_stratum << ")";
    computed("isolated_singularity", c.str(),
             sing.strata.size() == 1 && max_stratum == 0 && fiber_dim >= 3);
    cited("local_pi1_vanishing",
          "an isolated hypersurface singularity of complex dimension >= 3 has simply "
          "connected link",
          "Milnor, Singular Points of Complex Hypersurfaces (1968), Theorem 5.2");
  } else {
    const int codim = fiber_dim - (d - 1);
    std::ostringstream c;
    c << "the singular locus has dim d - 1 = " << d - 1 << " (strata max dim " << max_stratum
      << "), of codim 2(n - d) + 1 = " << codim << " >= 5 in the fiber";
    computed("singular_codimension", c.str(), max_stratum == d - 1 && codim >= 5);
    cited("local_pi1_vanishing",
          "a local complete intersection whose singular locus has codimension >= 3 has "
          "simply connected smooth-locus link",
          "Hamm & Le, Rectified homotopical depth and Grothendieck conjectures (1990), "
          "Corollary 3.2.2");
  }

  cited("scaling_contraction",
        "the dilation action contracts the fiber onto the origin, so the fundamental group "
        "of its smooth locus agrees with the local one at 0",
        "conical contraction (standard)");

  if (d == 1) {
    const int codim = n - 1;
    std::ostringstream c;
    c << "the preimage of the cone point is {z = 0} union {w = 0}, of codim n - 1 = " << codim
      << " >= 2 in the fiber";
    computed("central_fiber_codimension", c.str(), codim >= 2);
  } else {
    const int codim = n - d;
    std::ostringstream c;
    c << "the preimage of the cone point has dim <= n = " << n << ", hence codim >= n - d = "
      << codim << " >= 2 in the fiber";
    computed("central_fiber_codimension", c.str(), codim >= 2);
  }

  cited("quotient_surjection",
        "removing a closed subset of codimension >= 2 preserves the fundamental group, and "
        "away from it the quotient map is a torus fibration, so pi_1 of the fiber surjects "
        "onto pi_1 of the quotient",
        "fibration exact sequence (standard)");

  bool all = true;
  for (const CertificateStep& s : cert.steps)
    if (!s.cited) all = all && s.pass;
  computed("conclusion", "pi_1 of the smooth locus of Y is trivial", all);
  return cert;
}

namespace {

Int parse_weight(const nlohmann::json& v) {
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError("weight out of range");
  if (!v.is_number_integer()) throw ParseError("weights must be integers");
  return Int(static_cast<long>(v.get<std::int64_t>()));
}

}  // namespace

InputDocument InputDocument::parse_text(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("input must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "a" && it.key() != "A") throw ParseError("unknown key: " + it.key());
  if (j.contains("a") == j.contains("A"))
    throw ParseError("provide exactly one of \"a\" or \"A\"");

  InputDocument doc;
  if (j.contains("a")) {
    if (!j["a"].is_array()) throw ParseError("\"a\" must be an array of integers");
    IntVec a;
    for (const auto& v : j["a"]) a.push_back(parse_weight(v));
    doc.a = std::move(a);
  } else {
    if (!j["A"].is_array() || j["A"].empty())
      throw ParseError("\"A\" must be a non-empty array of rows");
    std::vector<IntVec> rows;
    for (const auto& r : j["A"]) {
      if (!r.is_array()) throw ParseError("matrix rows must be arrays of integers");
      IntVec row;
      for (const auto& v : r) row.push_back(parse_weight(v));
      rows.push_back(std::move(row));
    }
    for (const IntVec& r : rows)
      if (r.size() != rows.front().size()) throw ParseError("matrix rows must have equal length");
    doc.matrix = IntMatrix::from_rows(rows);
  }
  return doc;
}

InputDocument InputDocument::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

WeightData InputDocument::build() const {
  return a ? thq::build(*a) : thq::build(*matrix);
}

namespace {

ordered_json json_int(const Int& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

ordered_json json_vec(const IntVec& v) {
  ordered_json out = ordered_json::array();
  for (const Int& x : v) out.push_back(json_int(x));
  return out;
}

ordered_json one_based(const std::vector<int>& idx) {
  ordered_json out = ordered_json::array();
  for (int i : idx) out.push_back(i + 1);
  return out;
}

}  // namespace

ordered_json InputDocument::echo() const {
  ordered_json j;
  if (a) {
    j["a"] = json_vec(*a);
  } else {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < matrix->rows(); ++i) rows.push_back(json_vec(matrix->row(i)));
    j["A"] = rows;
  }
  return j;
}

AnalysisReport analyze(const InputDocument& doc, int safety_cap) {
  AnalysisReport r;
  r.wd = doc.build();  // ValidationError propagates to the caller
  r.input_echo = doc.echo();
  r.sing = singular_strata(r.wd);
  r.generators = hilbert_basis(r.wd, safety_cap);
  r.grading_info = grading(r.wd, r.generators);
  r.diagonal = diagonal_relation(r.wd, r.generators);
  r.chamber_decomp = chambers(r.wd);
  if (r.wd.d == 1) r.fiber = exceptional_fiber(r.wd, Side::Plus);
  r.certificate = pi1_certificate(r.wd);

  if (r.wd.d == 1 && r.diagonal.all_diagonals_present) {
    std::ostringstream os;
    os << "the " << r.wd.n << " diagonal generators z_i*w_i satisfy one linear relation with "
       << "coefficients " << to_string(r.wd.tuple()) << " on the fiber, so any one of them is "
       << "redundant";
    r.remarks.push_back(os.str());
  }
  if (r.fiber) {
    r.remarks.push_back("both sides of the wall crossing contract to the same central fiber " +
                        r.fiber->to_string());
  }
  r.remarks.push_back(
      "the quotient is non-Q-factorial; chamber characters give small partial resolutions");
  r.remarks.push_back("generator weights refer to the dilation grading only");
  r.remarks.push_back(
      "central fiber codimensions rest on the bound dim <= n; for d = 1 the value is exact");
  if (!r.chamber_decomp.enumerated)
    r.remarks.push_back(
        "chambers are not enumerated for three or more torus factors; the wall arrangement "
        "is complete");
  return r;
}

ordered_json to_json(const ValidationVerdict& verdict) {
  ordered_json j;
  j["ok"] = verdict.ok;
  ordered_json fails = ordered_json::array();
  for (const ValidationFailure& f : verdict.failures) {
    ordered_json e;
    e["condition"] = f.condition;
    e["columns"] = one_based(f.columns);
    e["value"] = json_int(f.value);
    fails.push_back(std::move(e));
  }
  j["failures"] = std::move(fails);
  return j;
}

std::string to_text(const ValidationVerdict& verdict) {
  std::ostringstream os;
  os << "validation: " << (verdict.ok ? "ok" : "FAILED") << "\n";
  for (const ValidationFailure& f : verdict.failures) os << "  - " << f.message() << "\n";
  return os.str();
}

ordered_json to_json(const Pi1Certificate& cert) {
  ordered_json steps = ordered_json::array();
  for (const CertificateStep& s : cert.steps) {
    ordered_json e;
    e["name"] = s.name;
    e["claim"] = s.claim;
    e["citation"] = s.cited ? ordered_json(s.citation) : ordered_json(nullptr);
    e["role"] = s.cited ? "cited" : "computed";
    e["pass"] = s.pass;
    steps.push_back(std::move(e));
  }
  return steps;
}

ordered_json to_json(const AnalysisReport& r) {
  const int n = r.wd.n, d = r.wd.d;
  ordered_json j;

  ordered_json input = r.input_echo;
  input["d"] = d;
  input["n"] = n;
  if (r.wd.canon) {
    input["canonical_a"] = json_vec(r.wd.tuple());
    ordered_json c;
    c["order"] = one_based(r.wd.canon->source);
    std::vector<int> flips;
    for (std::size_t k = 0; k < r.wd.canon->flipped.size(); ++k)
      if (r.wd.canon->flipped[k]) flips.push_back(r.wd.canon->source[k]);
    std::sort(flips.begin(), flips.end());
    c["sign_flips"] = one_based(flips);
    input["canonicalization"] = std::move(c);
  }
  j["input"] = std::move(input);

  j["validation"] = ordered_json{{"ok", true}, {"failures", ordered_json::array()}};

  ordered_json dims;
  dims["Y"] = 2 * (n - d);
  dims["mu_fiber"] = 2 * n - d;
  dims["sing"] = d - 1;
  ordered_json codims;
  codims["sing_in_mu_fiber"] = 2 * (n - d) + 1;
  codims["central_fiber_min"] = n - d;
  codims["central_fiber_exact"] = d == 1 ? ordered_json(n - 1) : ordered_json(nullptr);
  dims["codims"] = std::move(codims);
  j["dimensions"] = std::move(dims);

  ordered_json gens = ordered_json::array();
  for (const InvariantMonomial& g : r.generators) {
    ordered_json e;
    e["u"] = g.u;
    e["v"] = g.v;
    e["weight"] = g.weight();
    gens.push_back(std::move(e));
  }
  j["generators"] = std::move(gens);

  ordered_json grad;
  grad["maximal_weight"] = r.grading_info.maximal_weight;
  grad["half_gradable"] = r.grading_info.half_gradable;
  grad["half_maximal_weight"] = r.grading_info.half_maximal_weight
                                    ? ordered_json(*r.grading_info.half_maximal_weight)
                                    : ordered_json(nullptr);
  grad["omega_weight"] = r.grading_info.omega_weight;
  j["grading"] = std::move(grad);

  ordered_json ch;
  ch["count"] = r.chamber_decomp.enumerated
                    ? ordered_json(static_cast<int>(r.chamber_decomp.chambers.size()))
                    : ordered_json(nullptr);
  ordered_json samples = ordered_json::array();
  for (const Chamber& c : r.chamber_decomp.chambers) samples.push_back(json_vec(c.sample));
  ch["samples"] = std::move(samples);
  ordered_json walls = ordered_json::array();
  for (const Wall& w : r.chamber_decomp.walls) {
    ordered_json e;
    e["normal"] = json_vec(w.normal);
    e["columns"] = one_based(w.columns);
    walls.push_back(std::move(e));
  }
  ch["walls"] = std::move(walls);
  j["chambers"] = std::move(ch);

  ordered_json fibers;
  if (r.fiber) {
    ordered_json f;
    f["name"] = r.fiber->to_string();
    f["weights"] = json_vec(r.fiber->weights);
    fibers["plus"] = f;
    fibers["minus"] = f;
  } else {
    fibers["plus"] = nullptr;
    fibers["minus"] = nullptr;
  }
  j["fibers"] = std::move(fibers);

  j["pi1_certificate"] = to_json(r.certificate);
  j["remarks"] = r.remarks;
  return j;
}

std::string to_text(const AnalysisReport& r) {
  const int n = r.wd.n, d = r.wd.d;
  std::ostringstream os;
  os << "weight data: d = " << d << ", n = " << n << "\n";
  if (r.wd.canon) os << "  canonical weights: " << to_string(r.wd.tuple()) << "\n";
  os << "validation: ok\n\n";

  os << "dimensions\n";
  os << "  Y = " << 2 * (n - d) << ", moment fiber = " << 2 * n - d
     << ", singular locus = " << d - 1 << "\n";
  os << "  codim of singular locus in fiber = " << 2 * (n - d) + 1 << "\n";
  os << "  codim of central fiber >= " << n - d;
  if (d == 1) os << " (exact: " << n - 1 << ")";
  os << "\n\n";

  os << "generators (" << r.generators.size() << ", maximal weight "
     << r.grading_info.maximal_weight << ")\n";
  for (const InvariantMonomial& g : r.generators)
    os << "  [weight " << g.weight() << "] " << g.to_string() << "\n";
  if (r.grading_info.half_gradable)
    os << "grading: halvable, omega weight 1, half maximal weight "
       << *r.grading_info.half_maximal_weight << "\n\n";
  else
    os << "grading: not halvable, omega weight 2\n\n";

  os << "chambers: ";
  if (r.chamber_decomp.enumerated) {
    os << r.chamber_decomp.chambers.size() << "\n";
    os << "  samples:";
    for (const Chamber& c : r.chamber_decomp.chambers) os << " " << to_string(c.sample);
    os << "\n";
  } else {
    os << "not enumerated (d >= 3)\n";
  }
  os << "  walls:\n";
  for (const Wall& w : r.chamber_decomp.walls) {
    os << "    normal " << to_string(w.normal) << ", columns {";
    for (std::size_t i = 0; i < w.columns.size(); ++i)
      os << (i ? "," : "") << w.columns[i] + 1;
    os << "}\n";
  }
  os << "\n";

  if (r.fiber)
    os << "central fiber (both sides): " << r.fiber->to_string() << "\n\n";

  os << "pi1 certificate: " << (r.certificate.issued() ? "ISSUED" : "NOT ISSUED") << "\n";
  for (const CertificateStep& s : r.certificate.steps) {
    os << "  [" << (s.pass ? "ok" : "FAIL") << "] " << s.name << ": " << s.claim;
    if (s.cited) os << " (" << s.citation << ")";
    os << "\n";
  }
  os << "\nremarks\n";
  for (const std::string& m : r.remarks) os << "  - " << m << "\n";
  return os.str();
}

}  // namespace thq
