#pragma once

// Command-line front end. Results go to `out` as JSON (CSV for scan and on
// request for expand), diagnostics to `err`.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad command line or input
// file, 3 precondition or budget error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csf/closed_forms.hpp"
#include "csf/graph_io.hpp"
#include "csf/positivity.hpp"

namespace csf::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;

inline constexpr const char* kBudgetEnv = "CSF_BUDGET";

/// Coefficients that fit in 64 bits are JSON numbers, larger ones decimal
/// strings.
inline Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

inline Json to_json(const Partition& p) { return Json(p.vec()); }
inline Json to_json(const Composition& c) { return Json(c.vec()); }

inline Json to_json(const SpecialRibbonTabloid& t) {
  Json ribbons = Json::array();
  for (const auto& r : t.ribbons)
    ribbons.push_back({{"size", r.size}, {"height", r.height}, {"startRow", r.start_row}});
  return {{"shape", to_json(t.shape)}, {"content", to_json(t.content)}, {"sign", t.sign}, {"ribbons", ribbons}};
}

inline Json to_json(const std::optional<PairViolation>& v) {
  if (!v) return nullptr;
  return {{"larger", to_json(v->larger)},
          {"smaller", to_json(v->smaller)},
          {"stcLarger", to_json(v->stc_larger)},
          {"stcSmaller", to_json(v->stc_smaller)}};
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

inline std::string join_parts(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

/// "a..b" or a single integer.
inline std::pair<int, int> parse_range(std::string_view text) {
  auto number = [&](std::string_view s) {
    if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string_view::npos)
      throw ParseError("bad range '" + std::string(text) + "'");
    return std::stoi(std::string(s));
  };
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    int v = number(text);
    return {v, v};
  }
  int lo = number(text.substr(0, dots)), hi = number(text.substr(dots + 2));
  if (hi < lo) throw ParseError("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

/// One part of a scan shape: an integer, or k*m + c written like "m-2",
/// "2m+1", "m".
struct LinearTerm {
  int coef = 0;
  int constant = 0;
  int at(int m) const { return coef * m + constant; }
};

inline std::vector<LinearTerm> parse_shape_pattern(std::string_view text) {
  std::vector<LinearTerm> out;
  auto bad = [&] { return ParseError("bad shape pattern '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    pos = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    std::string t;
    for (char c : tok)
      if (c != ' ') t += c;
    if (t.empty()) throw bad();
    LinearTerm term;
    auto mpos = t.find('m');
    std::string rest = t;
    if (mpos != std::string::npos) {
      std::string k = t.substr(0, mpos);
      if (!k.empty() && k.find_first_not_of("0123456789") != std::string::npos) throw bad();
      term.coef = k.empty() ? 1 : std::stoi(k);
      rest = t.substr(mpos + 1);
      if (!rest.empty() && rest[0] != '+' && rest[0] != '-') throw bad();
    }
    if (!rest.empty()) {
      int sign = 1;
      std::string digits = rest;
      if (rest[0] == '+' || rest[0] == '-') {
        sign = rest[0] == '-' ? -1 : 1;
        digits = rest.substr(1);
      }
      if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw bad();
      term.constant = sign * std::stoi(digits);
    }
    out.push_back(term);
  }
  return out;
}

namespace detail {

struct Source {
  std::string family;
  std::string graph_file;
};

inline void add_source(CLI::App* sub, Source& s) {
  auto* f = sub->add_option("--family", s.family, "half:m, hgraph:mxn or lattice:mxn");
  auto* g = sub->add_option("--graph", s.graph_file, "edge-list file");
  f->excludes(g);
}

struct Loaded {
  std::optional<Family> family;
  std::optional<Graph> graph;  // loaded eagerly for files, lazily for families

  const Graph& get() {
    if (!graph) graph = build_family(*family);
    return *graph;
  }
};

inline Loaded load_source(const Source& s) {
  if (s.family.empty() == s.graph_file.empty()) throw ParseError("give exactly one of --family or --graph");
  Loaded l;
  if (!s.family.empty()) {
    l.family = parse_family(s.family);
  } else {
    std::ifstream in(s.graph_file);
    if (!in) throw ParseError("cannot open graph file '" + s.graph_file + "'");
    l.graph = read_edge_list(in);
  }
  return l;
}

inline std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
      throw ParseError(std::string(kBudgetEnv) + " must be a positive integer");
    return std::stoull(s);
  }
  return kDefaultBudget;
}

inline StcSource parse_stc_source(const std::string& s) {
  if (s == "auto") return StcSource::automatic;
  if (s == "closed") return StcSource::closed_form;
  if (s == "brute") return StcSource::brute_force;
  throw ParseError("--stc must be auto, closed or brute");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"chromatic symmetric functions: expansions, stable-composition counts, verification"};
  app.require_subcommand(1);

  std::uint64_t budget = 0;
  std::string budget_text;
  app.add_option("--budget", budget_text, "recursion-node cap (default 1e9, or $CSF_BUDGET)");

  // expand
  detail::Source expand_src;
  std::string expand_basis = "schur", expand_format = "json", expand_stc = "auto";
  auto* expand = app.add_subcommand("expand", "full expansion of X_G");
  detail::add_source(expand, expand_src);
  expand->add_option("--basis", expand_basis)->check(CLI::IsMember({"schur", "monomial"}));
  expand->add_option("--format", expand_format)->check(CLI::IsMember({"json", "csv"}));
  expand->add_option("--stc", expand_stc, "auto, closed or brute")->check(CLI::IsMember({"auto", "closed", "brute"}));

  // coeff
  detail::Source coeff_src;
  std::string coeff_mu, coeff_stc = "auto";
  auto* coeff = app.add_subcommand("coeff", "one Schur coefficient [s_mu] X_G");
  detail::add_source(coeff, coeff_src);
  coeff->add_option("--mu", coeff_mu)->required();
  coeff->add_option("--stc", coeff_stc)->check(CLI::IsMember({"auto", "closed", "brute"}));

  // stc
  detail::Source stc_src;
  std::string stc_type;
  bool stc_closed = false, stc_brute_flag = false, stc_both = false;
  auto* stc = app.add_subcommand("stc", "stable-composition count stc(G; tau)");
  detail::add_source(stc, stc_src);
  stc->add_option("--type", stc_type)->required();
  auto* oc = stc->add_flag("--closed-form", stc_closed);
  auto* ob = stc->add_flag("--brute", stc_brute_flag);
  auto* oboth = stc->add_flag("--both", stc_both);
  oc->excludes(ob)->excludes(oboth);
  ob->excludes(oboth);

  // positivity
  detail::Source pos_src;
  std::string pos_mode = "all", pair_lambda, pair_mu;
  int pos_max_order = kDefaultNicenessMaxOrder;
  auto* pos = app.add_subcommand("positivity", "Schur positivity and (strong) niceness");
  detail::add_source(pos, pos_src);
  pos->add_option("--mode", pos_mode)->check(CLI::IsMember({"all", "schur", "nice", "strongly-nice"}));
  pos->add_option("--max-order", pos_max_order, "largest order for full niceness scans");
  auto* pl = pos->add_option("--lambda", pair_lambda, "targeted pair: larger partition");
  auto* pm = pos->add_option("--mu", pair_mu, "targeted pair: smaller partition");
  pl->needs(pm);
  pm->needs(pl);

  // verify
  std::string verify_suite, verify_range;
  bool verify_json = false;
  int verify_brute = 8;
  auto* verify = app.add_subcommand("verify", "reproduce the coefficient and count identities");
  verify->add_option("--suite", verify_suite)->required()->check(CLI::IsMember({"half", "ns-m2", "ns-m3", "sn-m3"}));
  verify->add_option("--m", verify_range, "a..b");
  verify->add_option("--brute-max-m", verify_brute, "largest m also checked by brute force");
  verify->add_flag("--json", verify_json);

  // scan
  std::string scan_family, scan_range;
  std::vector<std::string> scan_mu;
  auto* scan = app.add_subcommand("scan", "CSV table of Schur coefficients over a family");
  scan->add_option("--family", scan_family, "half:m, hgraph:mxN or lattice:mxN")->required();
  scan->add_option("--m", scan_range, "a..b")->required();
  scan->add_option("--mu", scan_mu, "shape in m, e.g. m-2,m-2,4 (repeatable)")->required();

  // tabloids
  std::string tab_shape;
  auto* tab = app.add_subcommand("tabloids", "special ribbon tabloids of a shape");
  tab->add_option("--shape", tab_shape)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto emit = [&](const Json& j) { out << j.dump() << '\n'; };

  // Option values and input files are validated before any computation.
  ExpansionOptions opts;
  try {
    if (!budget_text.empty()) {
      if (budget_text.find_first_not_of("0123456789") != std::string::npos || budget_text.size() > 19 ||
          budget_text == "0")
        throw ParseError("--budget must be a positive integer");
      budget = std::stoull(budget_text);
    } else {
      budget = detail::default_budget();
    }
    opts.count.budget = budget;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto guarded = [&](auto&& parse, auto&& compute) -> int {
    try {
      parse();
    } catch (const PreconditionError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    try {
      return compute();
    } catch (const VerificationFailure& e) {
      err << "verification failed: " << e.what() << '\n';
      return kExitVerification;
    } catch (const BudgetExceeded& e) {
      err << "error: " << e.what() << '\n';
      return kExitPrecondition;
    } catch (const PreconditionError& e) {
      err << "error: " << e.what() << '\n';
      return kExitPrecondition;
    }
  };

  if (*expand) {
    detail::Loaded src;
    return guarded(
        [&] {
          src = detail::load_source(expand_src);
          opts.source = detail::parse_stc_source(expand_stc);
        },
        [&] {
          const Graph& g = src.get();
          auto e = expand_basis == "schur" ? schur_expansion(g, opts) : monomial_expansion(g, opts);
          if (expand_format == "csv") {
            out << "partition,coeff\n";
            for (const auto& [p, c] : e.coeffs) out << csv_field(join_parts(p.vec())) << ',' << c << '\n';
            return kExitOk;
          }
          Json coeffs = Json::array();
          for (const auto& [p, c] : e.coeffs) coeffs.push_back({{"partition", to_json(p)}, {"coeff", to_json(c)}});
          emit({{"degree", e.degree}, {"basis", to_string(e.basis)}, {"budget", budget}, {"coeffs", coeffs}});
          return kExitOk;
        });
  }

  if (*coeff) {
    detail::Loaded src;
    std::optional<Partition> mu;
    return guarded(
        [&] {
          src = detail::load_source(coeff_src);
          mu = parse_partition(coeff_mu);
          opts.source = detail::parse_stc_source(coeff_stc);
        },
        [&] {
          Integer c = src.family ? family_schur_coefficient(*src.family, *mu, opts)
                                 : schur_coefficient(*src.graph, *mu, opts);
          emit({{"mu", to_json(*mu)}, {"coeff", to_json(c)}, {"budget", budget}});
          return kExitOk;
        });
  }

  if (*stc) {
    detail::Loaded src;
    std::optional<Composition> type;
    return guarded(
        [&] {
          src = detail::load_source(stc_src);
          type = parse_composition(stc_type);
        },
        [&] {
          const bool want_closed = stc_closed || stc_both || !stc_brute_flag;
          const bool want_brute = stc_brute_flag || stc_both;
          std::optional<Integer> closed, brute;
          if (want_closed && src.family) closed = closed_form_stc(*src.family, underlying_partition(*type));
          if (stc_closed && !closed) throw NoClosedForm("no closed form for this type");
          if (want_brute || (!closed && !stc_closed)) brute = stc_brute(src.get(), *type, opts.count);
          Json j = {{"type", to_json(*type)}};
          j["closedForm"] = closed ? to_json(*closed) : Json(nullptr);
          j["brute"] = brute ? to_json(*brute) : Json(nullptr);
          const bool both = closed && brute;
          if (both) j["match"] = *closed == *brute;
          j["budget"] = budget;
          emit(j);
          if (both && *closed != *brute) {
            err << "closed form and brute force disagree\n";
            return kExitVerification;
          }
          return kExitOk;
        });
  }

  if (*pos) {
    detail::Loaded src;
    std::optional<Partition> lam, mu;
    return guarded(
        [&] {
          src = detail::load_source(pos_src);
          if (!pair_lambda.empty()) {
            lam = parse_partition(pair_lambda);
            mu = parse_partition(pair_mu);
          }
        },
        [&] {
          if (lam) {
            if (!dominates(*lam, *mu)) throw PreconditionError("--lambda must dominate --mu");
            Integer a, b;
            if (src.family) {
              FamilyStc f(*src.family, opts);
              a = f(*lam);
              b = f(*mu);
            } else {
              a = stc_brute(*src.graph, lam->as_composition(), opts.count);
              b = stc_brute(*src.graph, mu->as_composition(), opts.count);
            }
            emit({{"lambda", to_json(*lam)},
                  {"mu", to_json(*mu)},
                  {"stcLambda", to_json(a)},
                  {"stcMu", to_json(b)},
                  {"niceViolation", violates(NicenessMode::nice, *lam, *mu, a, b)},
                  {"stronglyNiceViolation", violates(NicenessMode::strongly_nice, *lam, *mu, a, b)},
                  {"budget", budget}});
            return kExitOk;
          }
          const Graph& g = src.get();
          PositivityReport r;
          Json j = {{"order", g.order()}};
          if (pos_mode == "all" || pos_mode == "schur") {
            r = check_schur_positive(g, opts);
            Json w = Json::array();
            for (const auto& [p, c] : r.negative_witnesses) w.push_back({{"partition", to_json(p)}, {"coeff", to_json(c)}});
            j["schurPositive"] = r.schur_positive;
            j["negativeWitnesses"] = w;
          }
          const bool want_nice = pos_mode == "all" || pos_mode == "nice";
          const bool want_strong = pos_mode == "all" || pos_mode == "strongly-nice";
          if (want_nice || want_strong) {
            if (g.order() > pos_max_order)
              throw PreconditionError("full niceness scan limited to order " + std::to_string(pos_max_order) +
                                      "; use --lambda/--mu for a targeted pair");
            auto mono = monomial_expansion(g, opts);
            if (want_nice) {
              check_niceness(mono, NicenessMode::nice, r);
              j["nice"] = *r.nice;
              j["niceViolation"] = to_json(r.nice_violation);
            }
            if (want_strong) {
              check_niceness(mono, NicenessMode::strongly_nice, r);
              j["stronglyNice"] = *r.strongly_nice;
              j["stronglyNiceViolation"] = to_json(r.strongly_nice_violation);
            }
          }
          j["budget"] = budget;
          emit(j);
          return kExitOk;
        });
  }

  if (*verify) {
    Suite suite = Suite::half;
    std::pair<int, int> range;
    return guarded(
        [&] {
          suite = parse_suite(verify_suite);
          const int lo = suite_min_m(suite);
          range = verify_range.empty() ? std::pair{lo, lo + 4} : parse_range(verify_range);
        },
        [&] {
          SuiteOptions so;
          so.brute_max_m = verify_brute;
          so.count = opts.count;
          auto report = run_suite(suite, range.first, range.second, so);
          if (verify_json) {
            Json rows = Json::array();
            for (const auto& row : report.rows) {
              Json checks = Json::array();
              for (const auto& c : row.checks)
                checks.push_back({{"name", c.name},
                                  {"expected", to_json(c.expected)},
                                  {"actual", to_json(c.actual)},
                                  {"ok", c.ok()}});
              rows.push_back({{"m", row.m}, {"ok", row.ok()}, {"checks", checks}});
            }
            emit({{"suite", to_string(suite)}, {"ok", report.ok()}, {"budget", budget}, {"rows", rows}});
          } else {
            for (const auto& row : report.rows)
              for (const auto& c : row.checks)
                out << (c.ok() ? "ok   " : "FAIL ") << "m=" << row.m << "  " << c.name << "  = " << c.actual
                    << (c.ok() ? "" : "  (expected " + c.expected.str() + ")") << '\n';
          }
          for (const auto& row : report.rows)
            for (const auto& c : row.checks)
              if (!c.ok())
                err << to_string(suite) << " m=" << row.m << ": " << c.name << " expected " << c.expected
                    << ", got " << c.actual << '\n';
          return report.ok() ? kExitOk : kExitVerification;
        });
  }

  if (*scan) {
    std::pair<int, int> range;
    std::vector<std::vector<LinearTerm>> shapes;
    std::string kind, params;
    return guarded(
        [&] {
          range = parse_range(scan_range);
          for (const auto& s : scan_mu) shapes.push_back(parse_shape_pattern(s));
          auto colon = scan_family.find(':');
          if (colon == std::string::npos || scan_family.find('m', colon) == std::string::npos)
            throw ParseError("family pattern must mention m, e.g. lattice:mx3");
          kind = scan_family.substr(0, colon);
          params = scan_family.substr(colon + 1);
          parse_family(kind + ":" + std::string(params).replace(params.find('m'), 1, "1"));
        },
        [&] {
          out << "family,m,mu,coeff,verdict,error\n";
          for (int m = range.first; m <= range.second; ++m) {
            std::string p = params;
            for (auto pos = p.find('m'); pos != std::string::npos; pos = p.find('m'))
              p.replace(pos, 1, std::to_string(m));
            const std::string spec = kind + ":" + p;
            for (const auto& shape : shapes) {
              std::vector<int> parts;
              for (const auto& t : shape) parts.push_back(t.at(m));
              std::string coeff_text, verdict, error;
              try {
                const Family f = parse_family(spec);
                const Integer c = family_schur_coefficient(f, Partition(parts), opts);
                coeff_text = c.str();
                verdict = c < 0 ? "negative" : "nonnegative";
              } catch (const std::exception& e) {
                verdict = "error";
                error = e.what();
              }
              out << spec << ',' << m << ',' << csv_field(join_parts(parts)) << ',' << coeff_text << ',' << verdict
                  << ',' << csv_field(error) << '\n';
            }
          }
          return kExitOk;
        });
  }

  if (*tab) {
    std::optional<Partition> shape;
    return guarded([&] { shape = parse_partition(tab_shape); },
                   [&] {
                     Json arr = Json::array();
                     for (const auto& t : enumerate_tabloids(*shape)) arr.push_back(to_json(t));
                     emit(arr);
                     return kExitOk;
                   });
  }
  return kExitUsage;
}

}  // namespace csf::cli
