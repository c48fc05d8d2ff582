#include "concord/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "concord/json_io.hpp"
#include "concord/parallel.hpp"

namespace concord {

namespace {

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_csv(const Csv& csv, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
    out << '\n';
  };
  line(csv.header);
  for (const auto& row : csv.rows) line(row);
}

std::string cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (!j.is_array()) return j.dump();
  std::string out;
  for (const auto& item : j) out += (out.empty() ? "" : " ") + cell(item);
  return out;
}

// Objects become one row each; the header is the key list of the first.
Csv csv_from_objects(const Json& items) {
  Csv csv;
  for (const auto& item : items) {
    if (csv.header.empty())
      for (auto it = item.begin(); it != item.end(); ++it) csv.header.push_back(it.key());
    std::vector<std::string> row;
    for (const auto& key : csv.header) row.push_back(item.contains(key) ? cell(item.at(key)) : "");
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

Csv profile_csv(const SignatureProfile& p) {
  Csv csv{{"r_lo", "r_hi", "plateau_after"}, {}};
  csv.rows.push_back({"0", "0", std::to_string(p.plateaus().front())});
  for (std::size_t i = 0; i < p.breakpoints().size(); ++i) {
    const Breakpoint& b = p.breakpoints()[i];
    csv.rows.push_back({to_string(b.lower()), to_string(b.upper()), std::to_string(p.plateaus()[i + 1])});
  }
  return csv;
}

Json single_or_array(Json items) { return items.size() == 1 ? items[0] : items; }

EigenSign parse_sign(const std::string& s) {
  if (s == "+" || s == "plus") return EigenSign::Plus;
  if (s == "-" || s == "minus") return EigenSign::Minus;
  throw CLI::ValidationError("--sign", "expected + or -");
}

Integer big(const std::string& s) { return parse_integer(s); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact knot concordance invariants"};
  app.name("concord");
  app.require_subcommand(1);
  app.fallthrough();

  bool csv_mode = false;
  unsigned jobs = 1;
  app.add_flag("--csv", csv_mode, "CSV instead of JSON");
  app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  std::string matrix, companion = "unknot", jx = "unknot", r_text, sign = "+";
  std::string p_text, s_text, d_text;
  std::vector<long> ks, ls, ns;
  long n = 1, q = 2, k_single = -1, l_single = -1, k_max = 200;
  std::string c0_text = "0";
  unsigned long max_q = 97;
  bool all_characters = false;
  std::vector<std::string> exclude;

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of a Seifert matrix");
  alex->add_option("--matrix", matrix, "Seifert matrix as JSON")->required();

  auto* sig = app.add_subcommand("signature", "Signature profile or value");
  auto* sig_m = sig->add_option("--matrix", matrix, "Seifert matrix as JSON");
  auto* sig_c = sig->add_option("--companion", companion, "Knot description");
  sig_m->excludes(sig_c);
  sig->add_option("--r", r_text, "Evaluate at r in [0,1]");

  auto* torus = app.add_subcommand("torus-sig", "Signatures of T(2,2k+1) or T(l,-l-1)");
  auto* tk = torus->add_option("--k", k_single, "T(2,2k+1)");
  auto* tl = torus->add_option("--l", l_single, "T(l,-l-1)");
  tk->excludes(tl);
  torus->add_option("--r", r_text, "Evaluate at r in [0,1]");

  auto* classify = app.add_subcommand("classify", "Levine class of D_k");
  classify->add_option("--k", ks, "Twists")->required();

  auto* cover = app.add_subcommand("cover", "Homology of the q-fold branched cover");
  cover->add_option("--matrix", matrix, "Seifert matrix as JSON")->required();
  cover->add_option("--q", q, "Cover degree")->required()->check(CLI::Range(2L, 1000000L));
  cover->add_option("--p", p_text, "Report the p-primary part");

  auto* cg = app.add_subcommand("cg-tau", "sigma_1 tau for a genus-one Naik matrix");
  cg->add_option("--matrix", matrix, "Matrix [[a,-m],[-(m+1),b]]")->required();
  cg->add_option("--q", q, "Cover degree (prime power)")->required()->check(CLI::Range(2L, 1000000L));
  cg->add_option("--p", d_text, "Character denominator d (prime power)")->required();
  cg->add_option("--s", s_text, "Character numerator")->required();
  cg->add_option("--jx", jx, "Knot tied in the band x");

  auto* dq2 = app.add_subcommand("double-q2", "sigma_1 tau(D_k(K), chi_{s/p}) for q = 2");
  dq2->add_option("--k", k_single, "Twist")->required();
  dq2->add_option("--p", p_text, "Prime dividing 4k+1")->required();
  dq2->add_option("--s", s_text, "0 < s < p")->required();
  dq2->add_option("--companion", companion, "Companion knot");

  auto* alg = app.add_subcommand("double-algslice", "sigma_1 tau(D_{l(l+1)}(K), v (x) s/p)");
  alg->add_option("--l", l_single, "l >= 1")->required();
  alg->add_option("--q", q, "Cover degree (prime power)")->required()->check(CLI::Range(2L, 1000000L));
  alg->add_option("--p", p_text, "Prime dividing (l+1)^q - l^q")->required();
  alg->add_option("--s", s_text, "Character numerator")->required();
  alg->add_option("--sign", sign, "Eigenvector v+ or v-");
  alg->add_option("--companion", companion, "Companion knot");

  auto* minmax = app.add_subcommand("minmax", "Minimum of sigma_1 tau over q = 2 characters");
  minmax->add_option("--k", ks, "Twists (k >= 3)");
  minmax->add_option("--companion", companion, "Companion knot");
  minmax->add_option("--p", p_text, "With --c0: least k0 for the character s/p, p = 4s +- 1");
  minmax->add_option("--c0", c0_text, "Threshold for the k0 sweep");
  minmax->add_option("--k-max", k_max, "Sweep limit for k0");
  minmax->add_flag("--all-characters", all_characters, "Sweep every s/(4k+1), not only prime-power characters");

  auto* vr = app.add_subcommand("verdict-ribbon", "Ribbon obstruction for n D_k(K)");
  vr->add_option("--n", n, "Copies")->check(CLI::PositiveNumber);
  vr->add_option("--k", ks, "Twists")->required();
  vr->add_option("--companion", companion, "Companion knot");

  auto* vs = app.add_subcommand("verdict-slice", "Slice obstruction for n D_{l(l+1)}(K)");
  vs->add_option("--n", n, "Copies")->check(CLI::PositiveNumber);
  vs->add_option("--l", ls, "Values of l")->required();
  vs->add_option("--companion", companion, "Companion knot");
  vs->add_option("--max-q", max_q, "Largest odd prime q tried");
  vs->add_option("--exclude-primes", exclude, "Primes p not to use");

  auto* ind = app.add_subcommand("independence", "Independence certificate for D_{l(l+1)}(K)");
  ind->add_option("--l", ls, "Distinct values of l")->required();
  ind->add_option("--n", ns, "Copies per entry (one value applies to all)");
  ind->add_option("--companion", companion, "Companion knot");
  ind->add_option("--max-q", max_q, "Largest odd prime q tried");
  ind->add_option("--exclude-primes", exclude, "Primes p not to use");

  auto* table = app.add_subcommand("table", "1/2 sigma_1 tau - sigma_{2r}(K) at r = s/(4k+1)");
  table->add_option("--k", ks, "Twists")->required();
  table->add_option("--companion", companion, "Companion knot");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    Json result;
    std::optional<Csv> csv;
    auto options_for_slice = [&] {
      SliceOptions o;
      o.max_q = max_q;
      for (const auto& p : exclude) o.exclude_primes.push_back(big(p));
      return o;
    };

    if (*alex) {
      const IntPolynomial delta = alexander(SeifertForm(matrix_from_json(parse_json(matrix))));
      result = Json{{"coefficients", to_json(delta)}, {"degree", delta.degree()}};
      csv = Csv{{"power", "coefficient"}, {}};
      for (std::size_t i = 0; i < delta.coeffs().size(); ++i)
        csv->rows.push_back({std::to_string(i), delta.coeffs()[i].get_str()});
    } else if (*sig) {
      const SignatureProfile p = matrix.empty() ? parse_companion(companion)
                                                : profile_from_seifert(SeifertForm(matrix_from_json(parse_json(matrix))));
      if (!r_text.empty()) {
        const Rational r = parse_rational(r_text);
        result = Json{{"r", to_json(r)}, {"sigma", to_json(p.eval(r))}};
        csv = csv_from_objects(Json::array({result}));
      } else {
        result = to_json(p);
        csv = profile_csv(p);
      }
    } else if (*torus) {
      if (k_single < 0 && l_single < 0) throw CLI::RequiredError("--k or --l");
      const bool two = k_single >= 0;
      const SignatureProfile p = two ? profile_T2(k_single) : profile_Tll1(l_single);
      if (!r_text.empty()) {
        const Rational r = parse_rational(r_text);
        const Rational closed = two ? sigma_T2(k_single, r) : sigma_Tll1(l_single, r);
        result = Json{{"knot", two ? "T(2," + std::to_string(2 * k_single + 1) + ")"
                                   : "T(" + std::to_string(l_single) + "," + std::to_string(-l_single - 1) + ")"},
                      {"r", to_json(r)},
                      {"sigma", to_json(closed)},
                      {"profile_value", to_json(p.eval(r))}};
        csv = csv_from_objects(Json::array({result}));
      } else {
        result = to_json(p);
        csv = profile_csv(p);
      }
    } else if (*classify) {
      Json items = Json::array();
      for (long k : ks)
        items.push_back(Json{{"k", k}, {"class", std::string(levine_name(levine_class(k)))}});
      csv = csv_from_objects(items);
      result = single_or_array(std::move(items));
    } else if (*cover) {
      const SeifertForm f(matrix_from_json(parse_json(matrix)));
      const CoverHomology h = cover_homology(f, static_cast<unsigned long>(q));
      Json factors = Json::array();
      for (const auto& d : h.invariant_factors)
        if (d != 1) factors.push_back(to_json(d));
      result = Json{{"q", q},
                    {"order", h.order ? to_json(*h.order) : Json(nullptr)},
                    {"invariant_factors", factors},
                    {"presentation", to_json(h.presentation)}};
      if (h.order) {
        CharacterGroup group = kernel_Nq(f, static_cast<unsigned long>(q));
        if (!p_text.empty()) {
          group = p_primary(group, big(p_text));
          result["p"] = p_text;
        }
        Json chars = Json::array();
        for (std::size_t i = 0; i < group.orders.size(); ++i) {
          Json gen = Json::array();
          for (const auto& c : group.generators[i]) gen.push_back(to_json(c));
          chars.push_back(Json{{"order", to_json(group.orders[i])}, {"generator", gen}});
        }
        result["characters"] = chars;
      }
      csv = Csv{{"q", "order", "invariant_factors"},
                {{std::to_string(q), h.order ? h.order->get_str() : "infinite", factors.dump()}}};
    } else if (*cg) {
      const IntMatrix a = matrix_from_json(parse_json(matrix));
      const Genus1Data data =
          Genus1Data::from_matrix(a, profile_from_seifert(SeifertForm(a)), parse_companion(jx));
      const CGValue v = sigma1_tau(data, static_cast<unsigned long>(q), big(d_text), big(s_text));
      result = to_json(v);
      result["q"] = q;
      result["d"] = d_text;
      result["s"] = s_text;
      csv = csv_from_objects(result["terms"]);
    } else if (*dq2) {
      const Rational v = cg_double_q2(k_single, parse_companion(companion), big(p_text), big(s_text));
      result = Json{{"k", k_single}, {"p", p_text}, {"s", s_text}, {"value", to_json(v)}};
      csv = csv_from_objects(Json::array({result}));
    } else if (*alg) {
      const Rational v = cg_double_algslice(l_single, parse_companion(companion), static_cast<unsigned long>(q),
                                            big(p_text), big(s_text), parse_sign(sign));
      result = Json{{"l", l_single}, {"q", q}, {"p", p_text}, {"s", s_text}, {"sign", sign}, {"value", to_json(v)}};
      csv = csv_from_objects(Json::array({result}));
    } else if (*minmax) {
      const SignatureProfile comp = parse_companion(companion);
      Json items = Json::array();
      if (!p_text.empty()) {
        const auto k0 = minmax_k0(big(p_text), parse_rational(c0_text), comp, k_max);
        items.push_back(Json{{"p", p_text}, {"c0", c0_text}, {"k_max", k_max},
                             {"k0", k0 ? Json(*k0) : Json(nullptr)}});
      } else {
        if (ks.empty()) throw CLI::RequiredError("--k");
        const auto results = parallel_map(ks.size(), jobs, [&](std::size_t i) { 
          return minmax_bounds(ks[i], comp, all_characters ? CharacterDomain::All : CharacterDomain::PrimePower);
        });
        for (std::size_t i = 0; i < ks.size(); ++i) {
          Json item = to_json(results[i]);
          item["k"] = ks[i];
          item["domain"] = all_characters ? "all" : "prime_power";
          items.push_back(std::move(item));
        }
      }
      csv = csv_from_objects(items);
      result = single_or_array(std::move(items));
    } else if (*vr) {
      const SignatureProfile comp = parse_companion(companion);
      const auto reports =
          parallel_map(ks.size(), jobs, [&](std::size_t i) { return ribbon_obstruction_verdict(n, ks[i], comp); });
      Json items = Json::array();
      csv = Csv{{"n", "k", "verdict"}, {}};
      for (std::size_t i = 0; i < ks.size(); ++i) {
        Json item = to_json(reports[i]);
        item["n"] = n;
        item["k"] = ks[i];
        csv->rows.push_back({std::to_string(n), std::to_string(ks[i]), std::string(verdict_name(reports[i].verdict))});
        items.push_back(std::move(item));
      }
      result = single_or_array(std::move(items));
    } else if (*vs) {
      const SignatureProfile comp = parse_companion(companion);
      const SliceOptions opts = options_for_slice();
      const auto reports =
          parallel_map(ls.size(), jobs, [&](std::size_t i) { return slice_obstruction_verdict(n, ls[i], comp, opts); });
      Json items = Json::array();
      csv = Csv{{"n", "l", "verdict"}, {}};
      for (std::size_t i = 0; i < ls.size(); ++i) {
        Json item = to_json(reports[i]);
        item["n"] = n;
        item["l"] = ls[i];
        csv->rows.push_back({std::to_string(n), std::to_string(ls[i]), std::string(verdict_name(reports[i].verdict))});
        items.push_back(std::move(item));
      }
      result = single_or_array(std::move(items));
    } else if (*ind) {
      if (!ns.empty() && ns.size() != 1 && ns.size() != ls.size())
        throw CLI::ValidationError("--n", "give one value or one per --l");
      std::vector<std::pair<long, long>> entries;
      for (std::size_t i = 0; i < ls.size(); ++i)
        entries.emplace_back(ls[i], ns.empty() ? 1 : ns[ns.size() == 1 ? 0 : i]);
      const IndependenceReport rep = independence_certificate(entries, parse_companion(companion), options_for_slice());
      result = to_json(rep);
      csv = Csv{{"l", "n", "nonsingular", "verdict"}, {}};
      for (const auto& e : rep.entries)
        csv->rows.push_back({std::to_string(e.l), std::to_string(e.n), e.nonsingular ? "true" : "false",
                             std::string(verdict_name(e.slice.verdict))});
    } else if (*table) {
      const SignatureProfile comp = parse_companion(companion);
      const auto tables = parallel_map(ks.size(), jobs, [&](std::size_t i) { return cg_table(ks[i], comp); });
      Json rows = Json::array();
      for (const auto& t : tables)
        for (const auto& row : t) rows.push_back(to_json(row));
      csv = csv_from_objects(rows);
      if (rows.empty()) csv->header = {"k", "r", "value"};
      result = Json{{"rows", rows}};
    }

    if (csv_mode)
      write_csv(*csv, out);
    else
      out << result.dump(2) << '\n';
    return 0;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << Json{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
}

}  // namespace concord
