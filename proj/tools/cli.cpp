#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "gl2gauss/appendix.hpp"
#include "gl2gauss/gauss.hpp"
#include "gl2gauss/verify.hpp"

namespace gl2gauss::cli {

using nlohmann::json;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kUsage = 2, kTooLarge = 3;

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

json exact_json(const CycElem& x) {
  return {{"N", x.field()->conductor()}, {"coeffs", std::vector<int64_t>(x.coeffs().begin(), x.coeffs().end())}};
}

json value_json(const GaussValue& v) {
  const auto z = v.embedding ? *v.embedding : embed_complex(v.exact);
  // parts at rounding-noise level relative to |z| print as 0
  const double floor = 1e-10 * std::max(1.0, std::abs(z));
  auto part = [floor](double x) { return std::abs(x) < floor ? 0.0 : round12(x); };
  return {{"exact", exact_json(v.exact)}, {"complex", {{"re", part(z.real())}, {"im", part(z.imag())}}}};
}

json value_json(const CycElem& x) { return value_json(with_embedding(x)); }

std::vector<int64_t> parse_list(const std::string& s) {
  std::vector<int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size()) throw Error(Errc::BadArgument, "not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

OmegaIndex parse_triple(const std::string& s, const char* what) {
  const auto v = parse_list(s);
  if (v.size() != 3) fail(Errc::BadArgument, std::string(what) + " takes three comma-separated integers");
  return {v[0], v[1], v[2]};
}

struct SpecArgs {
  std::string family = "x1";
  int64_t alpha = 0, u = 1, eps = -1, beta = 0;
  std::string i = "0", j = "0";

  void attach(CLI::App* app, const std::string& prefix, const std::string& note) {
    app->add_option("--" + prefix + "alpha", alpha, "orbit parameter alpha" + note);
    app->add_option("--" + prefix + "u", u, "X1: u" + note);
    app->add_option("--" + prefix + "eps", eps, "X2: nonsquare eps (default: smallest)" + note);
    app->add_option("--" + prefix + "beta", beta, "X3: beta" + note);
    app->add_option("--" + prefix + "i", i, "X1: i; X2: i1,i2,i3; X3: i1,i2" + note);
    app->add_option("--" + prefix + "j", j, "X1: j; X3: j1,j2,j3" + note);
  }

  CharSpec build(const RingParams& ring) const {
    const auto fam = parse_family(family);
    if (!fam || *fam == Family::X4) fail(Errc::BadArgument, "family must be one of x1, x2, x3");
    CharSpec s;
    s.family = *fam;
    s.alpha = alpha;
    switch (s.family) {
      case Family::X1: {
        s.u = u;
        const auto iv = parse_list(i), jv = parse_list(j);
        if (iv.size() != 1 || jv.size() != 1) fail(Errc::BadArgument, "X1 takes scalar --i and --j");
        s.i = iv[0];
        s.j = jv[0];
        break;
      }
      case Family::X2:
        s.eps = eps;
        if (s.eps < 0) {
          for (s.eps = 1; legendre(s.eps, ring.p()) != -1; ++s.eps) {
          }
        }
        s.omega = parse_triple(i, "--i");
        break;
      case Family::X3: {
        s.beta = beta;
        const auto iv = parse_list(i);
        if (iv.size() != 2) fail(Errc::BadArgument, "X3 takes --i i1,i2");
        s.i1 = iv[0];
        s.i2 = iv[1];
        s.omega = parse_triple(j == "0" ? "0,0,0" : j, "--j");
        break;
      }
      case Family::X4: break;
    }
    validate(s, ring);
    return s;
  }
};

json spec_json(const CharSpec& s) {
  json out{{"alpha", s.alpha}};
  switch (s.family) {
    case Family::X1:
      out["u"] = s.u;
      out["i"] = s.i;
      out["j"] = s.j;
      break;
    case Family::X2:
      out["eps"] = s.eps;
      out["i"] = {s.omega.k1, s.omega.k2, s.omega.k3};
      break;
    case Family::X3:
      out["beta"] = s.beta;
      out["i"] = {s.i1, s.i2};
      out["j"] = {s.omega.k1, s.omega.k2, s.omega.k3};
      break;
    case Family::X4: out["twist"] = s.twist; break;
  }
  return out;
}

// Theta from a JSON table {"entries": [{"matrix": [a,b,c,d], "value": {"N": .., "coeffs": [..]}}, ...]}
// covering GL2(Z/p^{l-1}).
Theta theta_from_table(const std::string& path, const RingParams& ring) {
  std::ifstream in(path);
  if (!in) fail(Errc::BadArgument, "cannot open " + path);
  const json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.contains("entries")) fail(Errc::BadArgument, path + " is not a theta table");
  const int64_t q = ring.pow_p(ring.l() - 1);
  const FieldPtr field = session_field(ring);
  auto table = std::make_shared<std::unordered_map<uint64_t, CycElem>>();
  for (const auto& e : doc["entries"]) {
    const auto m = e.at("matrix").get<std::vector<int64_t>>();
    if (m.size() != 4) fail(Errc::BadArgument, "matrix entries need four integers");
    const auto& v = e.at("value");
    const FieldPtr src = CyclotomicField::get(v.at("N").get<int64_t>());
    const CycElem x(src, v.at("coeffs").get<std::vector<int64_t>>());
    table->insert_or_assign(encode(Mat2{m[0], m[1], m[2], m[3]}, q), x.lift_to(field));
  }
  const int64_t expected = group_order(RingParams::make(ring.p(), ring.l() - 1));
  if (static_cast<int64_t>(table->size()) != expected) {
    fail(Errc::BadArgument, "theta table has " + std::to_string(table->size()) + " entries, expected " +
                                std::to_string(expected));
  }
  return Theta{[table, q](const Mat2& X) {
                 const auto it = table->find(encode(X, q));
                 if (it == table->end()) fail(Errc::NotFound, "no theta value for " + to_string(X));
                 return it->second;
               },
               std::nullopt};
}

void print_suite(const SuiteReport& report, std::ostream& out) {
  for (const auto& c : report.cases) {
    out << (c.passed ? "PASS " : "FAIL ") << report.suite << " | " << c.name;
    if (!c.detail.empty()) out << " | " << c.detail;
    out << '\n';
  }
  out << report.suite << ": " << report.cases.size() - report.failures() << "/" << report.cases.size()
      << " passed\n";
}

template <class F>
int64_t time_ns(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss sums on GL2(Z/p^l Z)"};
  app.require_subcommand(1);
  app.fallthrough();
  int64_t p = 3;
  int l = 2;
  int64_t r = 1;
  long long cap = kDefaultEnumerationCap;
  app.add_option("--max-enum", cap, "enumeration cap")->check(CLI::PositiveNumber);

  auto ring_opts = [&](CLI::App* sub) {
    sub->add_option("--p", p, "odd prime")->required();
    sub->add_option("--l", l, "level")->required();
  };

  auto* tau = app.add_subcommand("tau", "tau_l(chi, e) for one character");
  ring_opts(tau);
  tau->add_option("--r", r, "e(1) = zeta_{p^l}^r");
  SpecArgs spec_args;
  tau->add_option("--family", spec_args.family, "x1, x2, x3 or x4");
  spec_args.attach(tau, "", "");
  std::string method = "closed";
  tau->add_option("--method", method, "closed, subgroup or full")->check(CLI::IsMember({"closed", "subgroup", "full"}));
  int64_t twist = 0;
  tau->add_option("--twist", twist, "X4: power of nu");
  SpecArgs theta_args;
  tau->add_option("--theta-family", theta_args.family, "X4: family of theta at level l-1");
  theta_args.attach(tau, "theta-", " of theta");
  std::string theta_table;
  tau->add_option("--theta-table", theta_table, "X4: JSON table of theta on GL2(Z/p^{l-1})");

  auto* glsum = app.add_subcommand("glsum", "g_l(mu, e) over Z/p^l");
  ring_opts(glsum);
  glsum->add_option("--r", r, "e(1) = zeta_{p^l}^r");
  int64_t exponent = 0;
  glsum->add_option("--c", exponent, "mu(g) = zeta_phi^c for the canonical generator g");
  bool with_brute = false;
  glsum->add_flag("--brute", with_brute, "also report the direct sum");

  auto* psum = app.add_subcommand("psum", "the appendix double sum P and its factor P1");
  PSumParams pq;
  psum->add_option("--p", pq.p, "odd prime")->required();
  psum->add_option("--i", pq.i, "level i")->required();
  psum->add_option("--j", pq.j, "exponent j")->required();
  psum->add_option("--k", pq.k, "exponent k")->required();
  psum->add_option("--beta", pq.beta, "unit beta");
  psum->add_option("--b", pq.b, "unit b");
  psum->add_option("--r", pq.r, "lambda(1) = zeta_{p^i}^r");
  bool psum_brute = false;
  psum->add_flag("--brute", psum_brute, "also report the direct double sum");

  auto* count = app.add_subcommand("count", "sizes of the families X1, X2, X3");
  ring_opts(count);

  auto* verify = app.add_subcommand("verify", "run an oracle sweep");
  std::string suite;
  verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"gauss", "tau", "appendix", "counts", "irreducibility", "odoni", "x4", "magnitudes",
                             "virtual-psi", "full-group"}));
  verify->add_option("--p", p, "odd prime");
  verify->add_option("--l", l, "level");
  int imax = 2;
  verify->add_option("--imax", imax, "appendix: largest i");
  size_t stride = 1, samples = 3;
  verify->add_option("--stride", stride, "tau: test every stride-th spec");
  verify->add_option("--samples", samples, "specs per family for sampled suites");

  auto* bench = app.add_subcommand("bench", "time the closed, subgroup and full evaluations of tau");
  ring_opts(bench);
  int reps = 3;
  bench->add_option("--reps", reps, "repetitions per path");
  bool bench_full = false;
  bench->add_flag("--full", bench_full, "include the full-group sum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (*tau) {
      const RingParams ring = RingParams::make(p, l);
      json doc{{"p", p}, {"l", l}, {"r", r}, {"family", spec_args.family}, {"method", method}};
      if (spec_args.family == "x4") {
        if (ring.l() < 3 && theta_table.empty()) fail(Errc::BadArgument, "X4 from the library needs l >= 3");
        Theta theta;
        json theta_doc;
        if (!theta_table.empty()) {
          theta = theta_from_table(theta_table, ring);
          theta_doc = {{"table", theta_table}};
        } else {
          const RingParams lower = RingParams::make(p, l - 1);
          const CharSpec ts = theta_args.build(lower);
          theta = theta_from_spec(ring, ts);
          theta_doc = {{"family", theta_args.family}, {"params", spec_json(ts)}};
        }
        doc["params"] = {{"twist", twist}, {"theta", theta_doc}};
        if (method == "closed") {
          const auto res = tau_X4(ring, twist, theta, r, cap);
          doc["tau"] = value_json(res.value);
          doc["evaluation"] = res.method;
        } else {
          doc["tau"] = value_json(tau_X4_brute(ring, twist, theta, r, cap));
          doc["evaluation"] = "full-sum";
        }
      } else {
        const CharSpec spec = spec_args.build(ring);
        const FamilyCharacter chi(ring, spec);
        doc["params"] = spec_json(spec);
        doc["degree"] = chi.degree();
        if (method == "closed") doc["tau"] = value_json(tau_closed(chi, r));
        if (method == "subgroup") doc["tau"] = value_json(tau_oracle_subgroup(chi, r, cap));
        if (method == "full") doc["tau"] = value_json(tau_oracle_full(chi, r, cap));
      }
      out << doc.dump(2) << '\n';
      return kOk;
    }

    if (*glsum) {
      const RingParams ring = RingParams::make(p, l);
      const FieldPtr field = session_field(ring);
      const MultChar mu(ring, exponent, field);
      const AddChar e(ring, r, field);
      json doc{{"p", p},
               {"l", l},
               {"r", r},
               {"character", {{"exponent", mu.exponent()}, {"generator", ring.generator()}, {"conductor_level", mu.conductor_level()}}},
               {"g", value_json(g_closed(mu, e))}};
      if (with_brute) {
        const auto brute = g_brute(mu, e, cap);
        doc["brute"] = value_json(brute);
        doc["agree"] = brute.exact == g_closed(mu, e).exact;
      }
      out << doc.dump(2) << '\n';
      return kOk;
    }

    if (*psum) {
      const PSumResult res = p_sum_closed(pq);
      json doc{{"p", pq.p},
               {"params", {{"i", pq.i}, {"j", pq.j}, {"k", pq.k}, {"beta", pq.beta}, {"b", pq.b}, {"r", pq.r}}},
               {"case", res.case_label},
               {"closed_exact", res.closed_exact},
               {"P", value_json(res.P)},
               {"P1", value_json(res.P1)}};
      if (psum_brute) {
        const CycElem brute = p_sum_brute(pq, cap);
        doc["brute"] = value_json(brute);
        doc["agree"] = brute == res.P;
      }
      out << doc.dump(2) << '\n';
      return kOk;
    }

    if (*count) {
      const RingParams ring = RingParams::make(p, l);
      json formula, enumerated, orbit;
      for (Family fam : {Family::X1, Family::X2, Family::X3}) {
        const int64_t f = family_count_formula(fam, ring);
        formula[family_name(fam)] = f;
        orbit[family_name(fam)] = orbit_size(fam, ring);
        if (f <= cap) enumerated[family_name(fam)] = enumerate_specs(fam, ring).size();
      }
      json doc{{"p", p}, {"l", l}, {"counts", formula}, {"orbit_size", orbit}};
      if (!enumerated.is_null()) doc["enumerated"] = enumerated;
      out << doc.dump(2) << '\n';
      return kOk;
    }

    if (*verify) {
      SuiteReport report;
      if (suite == "appendix") {
        report = verify_appendix(p, imax, cap);
      } else {
        const RingParams ring = RingParams::make(p, l);
        if (suite == "gauss") report = verify_gauss(ring, cap);
        if (suite == "tau") report = verify_tau(ring, stride, cap);
        if (suite == "counts") report = verify_counts(ring, cap);
        if (suite == "irreducibility") report = verify_irreducibility(ring, samples, cap);
        if (suite == "odoni") report = verify_odoni(ring);
        if (suite == "x4") report = verify_x4(ring, cap);
        if (suite == "magnitudes") report = verify_magnitudes(ring);
        if (suite == "virtual-psi") report = verify_virtual_psi(ring, samples, cap);
        if (suite == "full-group") report = verify_full_group(ring, cap);
      }
      print_suite(report, out);
      return report.passed() ? kOk : kVerifyFailed;
    }

    if (*bench) {
      const RingParams ring = RingParams::make(p, l);
      out << "path,p,l,family,nanoseconds\n";
      for (Family fam : {Family::X1, Family::X2, Family::X3}) {
        const auto specs = enumerate_specs(fam, ring);
        const FamilyCharacter chi(ring, specs[specs.size() / 2]);
        auto row = [&](const char* path, auto&& f) {
          for (int t = 0; t < reps; ++t) {
            out << path << ',' << p << ',' << l << ',' << family_name(fam) << ',' << time_ns(f) << '\n';
          }
        };
        row("closed", [&] { tau_closed(chi, 1); });
        row("subgroup", [&] { tau_oracle_subgroup(chi, 1, cap); });
        if (bench_full) row("full", [&] { tau_oracle_full(chi, 1, cap); });
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == Errc::TooLarge ? kTooLarge : kUsage;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gl2gauss::cli
