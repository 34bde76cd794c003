#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "hfejer/apfloat.hpp"
#include "hfejer/conjecture.hpp"
#include "hfejer/errors.hpp"
#include "hfejer/exact_identities.hpp"
#include "hfejer/hermite_fejer.hpp"
#include "hfejer/knots.hpp"

namespace hfejer::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for configuration problems found after CLI11 parsing succeeded.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputMode { json, text };

struct Emitter {
  std::ostream& out;
  OutputMode mode;

  void operator()(const Json& obj) const {
    if (mode == OutputMode::json) {
      out << obj.dump() << '\n';
    } else {
      bool first = true;
      for (const auto& [key, value] : obj.items()) {
        out << (first ? "" : " ") << key << '=' << text(value);
        first = false;
      }
      out << '\n';
    }
    out.flush();
  }

  static std::string text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& e : v) s += (s.empty() ? "" : ",") + text(e);
      return "[" + s + "]";
    }
    if (v.is_object()) {
      std::string s;
      for (const auto& [k, e] : v.items()) s += (s.empty() ? "" : ",") + k + ":" + text(e);
      return "{" + s + "}";
    }
    return v.dump();
  }
};

// Options shared by subcommands that build knot sets.
struct FamilyOptions {
  std::string family = "chebyshev1";
  std::string alpha = "0";
  std::string beta = "0";
  std::string a = "-1";
  std::string b = "1";

  void attach(CLI::App& sub, bool required) {
    auto* opt = sub.add_option("--family", family, "chebyshev1 | chebyshev2 | equispaced | gauss_jacobi");
    if (required) opt->required();
    sub.add_option("--alpha", alpha, "Jacobi alpha (rational, > -1)")->capture_default_str();
    sub.add_option("--beta", beta, "Jacobi beta (rational, > -1)")->capture_default_str();
    sub.add_option("--a", a, "equispaced left endpoint (rational)")->capture_default_str();
    sub.add_option("--b", b, "equispaced right endpoint (rational)")->capture_default_str();
  }

  FamilySpec resolve() const {
    FamilySpec spec;
    spec.kind = parse_knot_family(family);
    spec.alpha = parse_rational(alpha);
    spec.beta = parse_rational(beta);
    spec.a = parse_rational(a);
    spec.b = parse_rational(b);
    if (spec.kind == KnotFamily::gauss_jacobi && (spec.alpha <= -1 || spec.beta <= -1))
      throw UsageError("--alpha and --beta must exceed -1");
    if (spec.kind == KnotFamily::equispaced && !(spec.a < spec.b)) throw UsageError("--a must be below --b");
    return spec;
  }
};

void add_family_fields(Json& obj, const FamilySpec& fam) {
  obj["family"] = std::string(to_string(fam.kind));
  if (fam.kind == KnotFamily::gauss_jacobi) {
    obj["alpha"] = to_string(fam.alpha);
    obj["beta"] = to_string(fam.beta);
  } else {
    obj["alpha"] = nullptr;
    obj["beta"] = nullptr;
  }
  if (fam.kind == KnotFamily::equispaced) obj["interval"] = {to_string(fam.a), to_string(fam.b)};
}

Json recognition_json(const Recognition& r) {
  Json j;
  j["input"] = r.input.to_string();
  j["precision_bits"] = r.input.precision();
  j["proposal"] = r.proposal ? Json(to_string(*r.proposal)) : Json(nullptr);
  j["candidate"] = r.candidate ? Json(to_string(*r.candidate)) : Json(nullptr);
  j["confirmed_at_bits"] = r.confirmed_at_bits;
  return j;
}

Json coeff_list(const RatPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr;
}

void require_odd_n(unsigned n) {
  if (n < 3 || n % 2 == 0)
    throw UsageError("n = " + std::to_string(n) + " is not an odd integer >= 3 (parity constraint)");
}

Precision default_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') return kDefaultPrecision;
  try {
    std::size_t used = 0;
    long v = std::stol(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(kPrecisionEnv) + " is not an integer: '" + env + "'");
  }
}

std::vector<ApFloat> parse_points(const std::vector<std::string>& texts, Precision bits) {
  std::vector<ApFloat> out;
  for (const auto& t : texts) out.emplace_back(parse_rational(t), bits);
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermite-Fejer derivative-sum identities: verification and conjecturing", "hfejer"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Precision precision = 0;
  std::string output = "json";
  auto add_common = [&](CLI::App& sub) {
    sub.add_option("--precision-bits", precision, "working precision in bits (>= 64)");
    sub.add_option("--output", output, "json | text")->check(CLI::IsMember({"json", "text"}));
  };

  // knots
  auto* knots_cmd = app.add_subcommand("knots", "dump a knot set");
  FamilyOptions knots_family;
  unsigned knots_n = 0;
  knots_family.attach(*knots_cmd, true);
  knots_cmd->add_option("--n", knots_n, "number of knots")->required();
  add_common(*knots_cmd);

  // verify-eq1
  auto* eq1_cmd = app.add_subcommand("verify-eq1", "check that derivative sums of the fundamental polynomials vanish");
  FamilyOptions eq1_family;
  std::vector<unsigned> eq1_n;
  unsigned eq1_p_max = 8;
  std::vector<std::string> eq1_y0;
  bool eq1_terms = false;
  eq1_family.attach(*eq1_cmd, true);
  eq1_cmd->add_option("--n", eq1_n, "number of knots (repeatable)")->required()->delimiter(',');
  eq1_cmd->add_option("--p-max", eq1_p_max, "check derivative orders 1..p-max")->capture_default_str();
  eq1_cmd->add_option("--y0", eq1_y0, "evaluation point, rational or decimal (repeatable)")->delimiter(',');
  eq1_cmd->add_flag("--terms", eq1_terms, "include the individual terms in the output");
  add_common(*eq1_cmd);

  // verify-identity
  auto* id_cmd = app.add_subcommand("verify-identity", "prove sum 2/sin^2(k pi/n) = (n^2-1)/3 exactly");
  std::optional<unsigned> id_n, id_n_max;
  auto* id_n_opt = id_cmd->add_option("--n", id_n, "single odd n >= 3");
  auto* id_n_max_opt = id_cmd->add_option("--n-max", id_n_max, "sweep all odd n in [3, n-max]");
  id_n_opt->excludes(id_n_max_opt);
  add_common(*id_cmd);

  // power-sum
  auto* ps_cmd = app.add_subcommand("power-sum", "exact sum of 1/sin^{2m}(k pi/n), k = 1..(n-1)/2");
  unsigned ps_n = 0, ps_m_max = 1;
  ps_cmd->add_option("--n", ps_n, "odd n >= 3")->required();
  ps_cmd->add_option("--m-max", ps_m_max, "report m = 1..m-max")->capture_default_str();
  add_common(*ps_cmd);

  // conjecture
  auto* cj_cmd = app.add_subcommand("conjecture", "fit power-sum formulas (--m) or explore a knot family (--family)");
  std::optional<unsigned> cj_m;
  std::vector<unsigned> cj_train, cj_holdout, cj_n;
  FamilyOptions cj_family;
  cj_family.family.clear();
  unsigned cj_p = 2;
  std::string cj_y0 = "0";
  std::uint64_t cj_max_den = 1000000;
  auto* cj_m_opt = cj_cmd->add_option("--m", cj_m, "power index for formula fitting");
  cj_cmd->add_option("--train", cj_train, "training n values (odd, comma separated)")->delimiter(',');
  cj_cmd->add_option("--holdout", cj_holdout, "holdout n values (odd, comma separated)")->delimiter(',');
  cj_family.attach(*cj_cmd, false);
  cj_cmd->add_option("--n", cj_n, "knot counts to explore (comma separated)")->delimiter(',');
  cj_cmd->add_option("--p", cj_p, "derivative order")->capture_default_str();
  cj_cmd->add_option("--y0", cj_y0, "evaluation point (rational)")->capture_default_str();
  cj_cmd->add_option("--max-denominator", cj_max_den, "largest accepted denominator")->capture_default_str();
  cj_m_opt->excludes(cj_cmd->get_option("--family"));
  add_common(*cj_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Emitter emit{out, output == "text" ? OutputMode::text : OutputMode::json};
  int status = kExitPass;

  try {
    if (precision == 0) precision = default_precision();
    checked_precision(precision);

    if (knots_cmd->parsed()) {
      if (knots_n == 0) throw UsageError("--n must be positive");
      const FamilySpec fam = knots_family.resolve();
      const KnotSet ks = make_knots(fam, knots_n, precision);
      Json obj;
      obj["family"] = std::string(to_string(fam.kind));
      obj["n"] = ks.n();
      add_family_fields(obj, fam);
      obj["precision_bits"] = precision;
      Json pts = Json::array();
      for (const auto& x : ks.points()) pts.push_back(x.to_string());
      obj["points"] = std::move(pts);
      emit(obj);
    } else if (eq1_cmd->parsed()) {
      const FamilySpec fam = eq1_family.resolve();
      if (eq1_p_max == 0) throw UsageError("--p-max must be at least 1");
      if (eq1_y0.empty()) eq1_y0.push_back("0");
      const auto y0s = parse_points(eq1_y0, precision);
      for (unsigned n : eq1_n) {
        if (n == 0) throw UsageError("--n must be positive");
        if (fam.kind == KnotFamily::equispaced && n < 2) throw UsageError("equispaced knots need n >= 2");
      }
      for (unsigned n : eq1_n) {
        const FundamentalBasis basis = hermite_fejer_basis(make_knots(fam, n, precision));
        for (unsigned p = 1; p <= eq1_p_max; ++p) {
          for (const auto& y0 : y0s) {
            const DerivativeSum ds = derivative_sum(basis, p, y0);
            Json obj;
            obj["family"] = std::string(to_string(fam.kind));
            obj["n"] = n;
            obj["p"] = p;
            obj["y0"] = y0.to_string();
            obj["residual"] = ds.residual.to_string();
            obj["tolerance"] = ds.tolerance.to_string();
            obj["pass"] = ds.pass();
            obj["precision_bits"] = precision;
            if (eq1_terms) {
              Json terms = Json::array();
              for (const auto& t : ds.terms) terms.push_back(t.to_string());
              obj["terms"] = std::move(terms);
            }
            emit(obj);
            if (!ds.pass()) status = kExitCheckFailed;
          }
        }
      }
    } else if (id_cmd->parsed()) {
      std::vector<unsigned> ns;
      if (id_n) {
        require_odd_n(*id_n);
        ns.push_back(*id_n);
      } else if (id_n_max) {
        if (*id_n_max < 3) throw UsageError("--n-max must be at least 3");
        for (unsigned n = 3; n <= *id_n_max; n += 2) ns.push_back(n);
      } else {
        throw UsageError("verify-identity needs --n or --n-max");
      }
      for (unsigned n : ns) {
        const IdentityReport rep = verify_identity_2(n);
        Json obj;
        obj["n"] = n;
        obj["lhs"] = to_string(rep.lhs);
        obj["rhs"] = to_string(rep.rhs);
        obj["holds"] = rep.holds;
        emit(obj);
        if (!rep.holds) status = kExitCheckFailed;
      }
    } else if (ps_cmd->parsed()) {
      require_odd_n(ps_n);
      if (ps_m_max == 0) throw UsageError("--m-max must be at least 1");
      const auto sums = inverse_power_sums(ps_n, ps_m_max);
      // Direct numeric summation as an independent cross-check.
      const ApFloat pi = ap_const_pi(precision);
      std::vector<ApFloat> inv_sin2;
      for (unsigned k = 1; k <= (ps_n - 1) / 2; ++k) {
        ApFloat s = sin(pi * static_cast<long>(k) / ApFloat(static_cast<long>(ps_n), precision));
        inv_sin2.push_back(ApFloat(1, precision) / (s * s));
      }
      for (unsigned m = 1; m <= ps_m_max; ++m) {
        ApFloat direct(precision);
        for (const auto& v : inv_sin2) {
          ApFloat pw(1, precision);
          for (unsigned j = 0; j < m; ++j) pw *= v;
          direct += pw;
        }
        const ApFloat exact(sums[m - 1], precision);
        const ApFloat tol = relative_tolerance(std::vector<ApFloat>{exact}, precision);
        const bool agree = abs(direct - exact) <= tol;
        Json obj;
        obj["n"] = ps_n;
        obj["m"] = m;
        obj["value"] = to_string(sums[m - 1]);
        obj["numeric"] = direct.to_string();
        obj["agree"] = agree;
        emit(obj);
        if (!agree) status = kExitCheckFailed;
      }
    } else if (cj_cmd->parsed()) {
      if (cj_m) {
        const unsigned m = *cj_m;
        if (m == 0) throw UsageError("--m must be at least 1");
        // Defaults: the first 2m+1 odd n from 3 for training, the next two for holdout.
        if (cj_train.empty())
          for (unsigned k = 0; k < 2 * m + 1; ++k) cj_train.push_back(3 + 2 * k);
        if (cj_holdout.empty()) {
          unsigned next = *std::max_element(cj_train.begin(), cj_train.end()) + 2;
          cj_holdout = {next, next + 2};
        }
        const ConjectureReport rep = conjecture_power_formula(m, cj_train, cj_holdout);
        Json obj;
        obj["m"] = m;
        obj["train_n"] = rep.train_n;
        obj["holdout_n"] = rep.holdout_n;
        obj["degree"] = rep.formula.degree();
        obj["formula"] = coeff_list(rep.formula);
        obj["formula_text"] = to_string(rep.formula, "n");
        obj["confirmed"] = rep.confirmed;
        emit(obj);
        if (!rep.confirmed) status = kExitCheckFailed;
      } else if (!cj_family.family.empty()) {
        const FamilySpec fam = cj_family.resolve();
        if (cj_n.empty()) throw UsageError("exploration needs --n");
        if (cj_p == 0) throw UsageError("--p must be at least 1");
        if (cj_max_den == 0) throw UsageError("--max-denominator must be positive");
        const ExactRational y0 = parse_rational(cj_y0);
        for (unsigned n : cj_n)
          if (n == 0 || (fam.kind == KnotFamily::equispaced && n < 2)) throw UsageError("invalid --n");
        const auto rows = explore_knot_family(fam, cj_p, y0, cj_n, precision, cj_max_den);
        for (const auto& row : rows) {
          Json obj;
          obj["n"] = row.n;
          add_family_fields(obj, fam);
          obj["p"] = cj_p;
          obj["y0"] = to_string(y0);
          obj["precision_bits"] = precision;
          obj["special_index"] = row.special_index + 1;
          obj["special"] = recognition_json(row.special);
          obj["rest"] = recognition_json(row.rest);
          emit(obj);
        }
      } else {
        throw UsageError("conjecture needs --m (formula fitting) or --family (exploration)");
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotOdd& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return status;
}

}  // namespace hfejer::cli
