#include "oscoh/commands.hpp"

#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscoh/arrangement_file.hpp"
#include "oscoh/catalog.hpp"
#include "oscoh/errors.hpp"
#include "oscoh/lattice.hpp"
#include "oscoh/linalg.hpp"
#include "oscoh/orlik_solomon.hpp"
#include "oscoh/resonance.hpp"

namespace oscoh {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string input;
  std::string format = "text";
  unsigned jobs = 1;
  bool essentialize = false;
};

Arrangement load(const Common& c) {
  if (auto arr = catalog_lookup(c.input)) {
    if (c.essentialize) throw InvalidArgumentError("--essentialize applies only to files");
    return *arr;
  }
  if (!std::filesystem::exists(c.input)) {
    throw InvalidArgumentError("'" + c.input + "' is neither a catalog name nor a file (see `oscoh catalog`)");
  }
  return read_arrangement_file(c.input, c.essentialize);
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string set_string(const std::vector<int>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "}";
}

std::string describe(const Arrangement& arr) {
  std::string s = "n = " + std::to_string(arr.size()) + ", rank " + std::to_string(arr.rank()) + ", ";
  s += arr.central() ? "central" : "affine";
  if (const auto& r = arr.realization()) s += ", over " + r->field->describe();
  else s += ", matroid";
  return s;
}

std::vector<Integer> integral_numerators(const WeightVector& w) { return w.numerators(); }

Json cohomology_json(const CohomologyReport& r) {
  Json j;
  j["ring"] = r.ring_name();
  j["poincare"] = r.poincare();
  j["dims"] = r.dims;
  j["boundary_ranks"] = r.boundary_ranks;
  if (!r.invariant_factors.empty()) j["invariant_factors"] = r.invariant_factors;
  j["notes"] = r.notes;
  return j;
}

void cohomology_text(std::ostream& out, const CohomologyReport& r) {
  out << "ring: " << r.ring_name() << "\n";
  out << "poincare: " << r.poincare() << "\n";
  for (std::size_t q = 0; q < r.dims.size(); ++q) out << "H^" << q << ": " << r.dims[q] << "\n";
  out << "ranks of mu^q:";
  for (auto x : r.boundary_ranks) out << " " << x;
  out << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
}

int cmd_lattice(const Common& c, std::ostream& out) {
  const Arrangement arr = load(c);
  const auto lattice = intersection_lattice(arr);
  std::vector<Mask> dense;
  for (const auto& f : dense_edges(projective_closure(arr).arrangement)) dense.push_back(f.hyperplanes);
  auto is_dense = [&](const Flat& f) {
    return f.codim > 0 && std::find(dense.begin(), dense.end(), f.hyperplanes) != dense.end();
  };
  if (c.format == "json") {
    Json j;
    j["n"] = arr.size();
    j["rank"] = arr.rank();
    j["central"] = arr.central();
    j["betti"] = lattice.betti();
    Json flats = Json::array();
    for (const auto& f : lattice.flats()) {
      flats.push_back({{"codim", f.codim}, {"hyperplanes", f.indices()}, {"moebius", f.moebius},
                       {"dense", is_dense(f)}});
    }
    j["flats"] = std::move(flats);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << describe(arr) << "\n";
  out << "betti: " << join(lattice.betti()) << "\n";
  out << "flats: " << lattice.flats().size() << "\n";
  out << "codim  moebius  dense  hyperplanes\n";
  for (const auto& f : lattice.flats()) {
    std::ostringstream row;
    row << std::left << std::setw(7) << f.codim << std::setw(9) << f.moebius << std::setw(7)
        << (is_dense(f) ? "yes" : "no") << set_string(f.indices());
    out << row.str() << "\n";
  }
  return kExitOk;
}

int cmd_oscohom(const Common& c, const std::string& weights, std::ostream& out) {
  const Arrangement arr = load(c);
  const auto report = os_cohomology_dims(aomoto_complex(arr), WeightVector(parse_weight_list(weights)));
  if (c.format == "json") out << cohomology_json(report).dump(2) << "\n";
  else cohomology_text(out, report);
  return kExitOk;
}

int cmd_modn(const Common& c, const std::string& k, std::uint64_t modulus, std::ostream& out) {
  const Arrangement arr = load(c);
  const auto report = modN_cohomology_ranks(aomoto_complex(arr), parse_integer_list(k), modulus);
  if (c.format == "json") out << cohomology_json(report).dump(2) << "\n";
  else cohomology_text(out, report);
  return kExitOk;
}

int cmd_bounds(const Common& c, const std::string& weights, const BoundsOptions& options, std::ostream& out) {
  const Arrangement arr = load(c);
  const auto r = betti_bounds(arr, WeightVector(parse_weight_list(weights)), options);
  const std::string modulus = r.modulus.get_str();
  if (c.format == "json") {
    Json j;
    Json degrees = Json::array();
    for (const auto& d : r.degrees) {
      Json dj;
      dj["degree"] = d.degree;
      dj["lower"] = d.lower;
      dj["upper"] = d.upper;
      dj["exact"] = d.exact;
      dj["box"] = r.box;
      dj["N"] = modulus;
      dj["convention_notes"] = r.notes;
      dj["witness"] = d.witness;
      degrees.push_back(std::move(dj));
    }
    j["degrees"] = std::move(degrees);
    j["betti"] = r.betti;
    j["factors"] = r.factors;
    j["translates"] = r.translates;
    j["evaluated"] = r.evaluated;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << describe(arr) << "\n";
  out << "box: " << r.box << "\nN: " << modulus << "\n";
  out << "betti: " << join(r.betti) << "\n";
  out << "q  lower  upper  exact  witness\n";
  for (const auto& d : r.degrees) {
    std::ostringstream row;
    row << std::left << std::setw(3) << d.degree << std::setw(7) << d.lower << std::setw(7) << d.upper << std::setw(7)
        << (d.exact ? "yes" : "no") << "(" << join(d.witness, ",") << ")";
    out << row.str() << "\n";
  }
  for (const auto& d : r.degrees) {
    if (d.exact) out << "certified: dim H^" << d.degree << "(M;L) = " << d.lower << "\n";
  }
  out << "translates: " << r.translates << " in " << r.factors << " factor(s), " << r.evaluated << " evaluated\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return kExitOk;
}

int cmd_nonres(const Common& c, const std::string& weights, std::ostream& out) {
  const Arrangement arr = load(c);
  const WeightVector w(parse_weight_list(weights));
  const Integer& modulus = w.denominator();
  if (modulus > kMaxModulus || !is_prime(modulus.get_ui())) {
    throw NotPrimeError("the common denominator " + modulus.get_str() + " of the weights must be a prime");
  }
  const auto cert = yuzvinsky_vanishing(arr, integral_numerators(w), modulus.get_ui());
  const bool w_member = in_W(arr, w);
  const bool v_member = in_V(arr, w);
  const int code = cert.holds && cert.verified ? kExitOk : kExitCertificateFails;
  if (c.format == "json") {
    Json j;
    j["prime"] = cert.prime;
    j["k"] = Json::array();
    for (const auto& k : w.numerators()) j["k"].push_back(k.get_str());
    j["in_W"] = w_member;
    j["in_V"] = v_member;
    j["holds"] = cert.holds;
    Json wit = Json::array();
    for (const auto& e : cert.witnesses) {
      wit.push_back({{"hyperplanes", e.flat.indices()}, {"k_X", to_string(e.value)}, {"at_infinity", e.at_infinity}});
    }
    j["witnesses"] = std::move(wit);
    j["claimed_dims"] = cert.claimed_dims;
    j["computed"] = cohomology_json(cert.computed);
    j["verified"] = cert.verified;
    j["convention_notes"] = {kInfinityConvention};
    out << j.dump(2) << "\n";
    return code;
  }
  out << describe(arr) << "\n";
  out << "prime: " << cert.prime << "\n";
  out << "in W: " << (w_member ? "yes" : "no") << "\nin V: " << (v_member ? "yes" : "no") << "\n";
  out << "certificate: " << (cert.holds ? "holds" : "fails") << "\n";
  for (const auto& e : cert.witnesses) {
    out << "witness: dense edge " << set_string(e.flat.indices()) << (e.at_infinity ? " (contains H_inf)" : "")
        << " k_X = " << to_string(e.value) << ", divisible by " << cert.prime << "\n";
  }
  out << "claimed: " << join(cert.claimed_dims) << "\n";
  out << "computed over " << cert.computed.ring_name() << ": " << join(cert.computed.dims) << "\n";
  out << "verified: " << (cert.verified ? "yes" : "no") << "\n";
  out << "note: " << kInfinityConvention << "\n";
  return code;
}

int cmd_resonance(const Common& c, const std::string& weights, int q, int m, std::ostream& out) {
  const Arrangement arr = load(c);
  const auto complex = aomoto_complex(arr);
  const WeightVector w(parse_weight_list(weights));
  const bool member = resonance_membership(complex, w, q, m);
  const auto dims = os_cohomology_dims(complex, w).dims;
  const auto b = complex.dimensions();
  if (c.format == "json") {
    Json j{{"q", q}, {"m", m}, {"member", member}, {"dim", dims[static_cast<std::size_t>(q)]},
           {"betti", b[static_cast<std::size_t>(q)]}};
    out << j.dump(2) << "\n";
  } else {
    out << "lambda " << (member ? "lies" : "does not lie") << " in R^" << q << "_" << m << "\n";
    out << "dim H^" << q << " = " << dims[static_cast<std::size_t>(q)] << ", b_" << q << " = "
        << b[static_cast<std::size_t>(q)] << "\n";
  }
  return kExitOk;
}

int cmd_aomoto(const Common& c, int q, std::ostream& out) {
  const Arrangement arr = load(c);
  if (q < -1 || q >= arr.rank()) throw InvalidArgumentError("degree must be in 0.." + std::to_string(arr.rank() - 1));
  const int lo = q < 0 ? 0 : q;
  const int hi = q < 0 ? arr.rank() - 1 : q;
  if (c.format == "json") {
    Json all = Json::array();
    for (int d = lo; d <= hi; ++d) {
      const auto mat = aomoto_matrix(arr, d);
      Json rows = Json::array();
      std::size_t next = 0;
      for (std::size_t r = 0; r < mat.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t col = 0; col < mat.cols(); ++col) {
          if (next < mat.entries.size() && mat.entries[next].row == r && mat.entries[next].col == col) {
            row.push_back(format_linear_form(mat.entries[next++].form));
          } else {
            row.push_back("0");
          }
        }
        rows.push_back(std::move(row));
      }
      all.push_back({{"degree", d}, {"rows", mat.rows()}, {"cols", mat.cols()}, {"entries", std::move(rows)}});
    }
    out << all.dump(2) << "\n";
    return kExitOk;
  }
  for (int d = lo; d <= hi; ++d) out << aomoto_matrix(arr, d).dump();
  return kExitOk;
}

int cmd_catalog(const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json all = Json::array();
    for (const auto& e : catalog()) all.push_back({{"name", e.name}, {"description", e.description}});
    out << all.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& e : catalog()) {
    std::ostringstream row;
    row << std::left << std::setw(18) << e.name << e.description;
    out << row.str() << "\n";
  }
  return kExitOk;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("OSCOH_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

std::vector<Rational> parse_weight_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  for (const auto& r : parse_weight_list(text)) {
    if (r.get_den() != 1) throw ParseError("expected integers, got " + to_string(r));
    out.push_back(r.get_num());
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orlik-Solomon cohomology and local system bounds for hyperplane arrangements", "oscoh"};
  app.require_subcommand(1);
  Common common;
  common.jobs = default_jobs();
  std::string weights, k;
  std::uint64_t modulus = 0;
  int q = -1, m = 1;
  BoundsOptions bounds;

  auto add_common = [&](CLI::App* sub, bool input = true) {
    if (input) sub->add_option("input", common.input, "catalog name or arrangement file")->required();
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto* lattice = app.add_subcommand("lattice", "intersection lattice with Moebius values and dense flags");
  add_common(lattice);
  lattice->add_flag("--essentialize", common.essentialize, "project a non-essential input onto its essential part");
  auto* oscohom = app.add_subcommand("oscohom", "cohomology of the Orlik-Solomon complex over Q");
  add_common(oscohom);
  oscohom->add_option("--weights", weights, "comma-separated rationals")->required();
  oscohom->add_flag("--essentialize", common.essentialize, "project a non-essential input onto its essential part");
  auto* modn = app.add_subcommand("modn", "ranks of the Orlik-Solomon complex over Z/N");
  add_common(modn);
  modn->add_option("--k", k, "comma-separated integers")->required();
  modn->add_option("--N", modulus, "modulus")->required()->check(CLI::Range(std::uint64_t{2}, kMaxModulus));
  modn->add_flag("--essentialize", common.essentialize, "project a non-essential input onto its essential part");
  auto* bnd = app.add_subcommand("bounds", "lower and upper bounds for dim H^q(M;L) at rational weights");
  add_common(bnd);
  bnd->add_option("--weights", weights, "comma-separated rationals")->required();
  bnd->add_option("--box", bounds.box, "translate search radius B")->check(CLI::NonNegativeNumber)->capture_default_str();
  bnd->add_option("--max-translates", bounds.max_translates, "largest box per product factor")->capture_default_str();
  bnd->add_option("--jobs", common.jobs, "worker threads (default: OSCOH_JOBS or 1)")->check(CLI::PositiveNumber);
  bnd->add_flag("--essentialize", common.essentialize, "project a non-essential input onto its essential part");
  auto* nonres = app.add_subcommand("nonres", "vanishing certificate over Z/p for weights k/p");
  add_common(nonres);
  nonres->add_option("--weights", weights, "comma-separated rationals with common prime denominator")->required();
  nonres->add_flag("--essentialize", common.essentialize, "project a non-essential input onto its essential part");
  auto* res = app.add_subcommand("resonance", "membership in the resonance variety R^q_m");
  add_common(res);
  res->add_option("--weights", weights, "comma-separated rationals")->required();
  res->add_option("--q", q, "degree")->required();
  res->add_option("--m", m, "depth")->capture_default_str();
  res->add_flag("--essentialize", common.essentialize, "project a non-essential input onto its essential part");
  auto* aomoto = app.add_subcommand("aomoto", "dump the Aomoto matrices mu^q with linear-form entries");
  add_common(aomoto);
  aomoto->add_option("--q", q, "single degree (default: all)");
  aomoto->add_flag("--essentialize", common.essentialize, "project a non-essential input onto its essential part");
  auto* exp = app.add_subcommand("export", "write an arrangement file");
  add_common(exp);
  auto* cat = app.add_subcommand("catalog", "list built-in arrangements");
  add_common(cat, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (lattice->parsed()) return cmd_lattice(common, out);
    if (oscohom->parsed()) return cmd_oscohom(common, weights, out);
    if (modn->parsed()) return cmd_modn(common, k, modulus, out);
    if (bnd->parsed()) {
      bounds.jobs = common.jobs;
      return cmd_bounds(common, weights, bounds, out);
    }
    if (nonres->parsed()) return cmd_nonres(common, weights, out);
    if (res->parsed()) return cmd_resonance(common, weights, q, m, out);
    if (aomoto->parsed()) return cmd_aomoto(common, q, out);
    if (exp->parsed()) {
      out << write_arrangement(load(common));
      return kExitOk;
    }
    return cmd_catalog(common.format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace oscoh
