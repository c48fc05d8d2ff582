#include "concord/json_io.hpp"

#include <numeric>

namespace concord {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

long long_from_json(const Json& j) {
  const Integer z = integer_from_json(j);
  if (!z.fits_slong_p()) parse_fail("integer out of range: " + z.get_str());
  return z.get_si();
}

long parse_long(const std::string& text) {
  const Integer z = parse_integer(text);
  if (!z.fits_slong_p()) parse_fail("integer out of range: " + text);
  return z.get_si();
}

Rational pair_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) {
    const Integer den = integer_from_json(j[1]);
    if (den == 0) parse_fail("zero denominator");
    return make_rational(integer_from_json(j[0]), den);
  }
  return rational_from_json(j);
}

Json pair_to_json(const Rational& r) {
  return Json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Breakpoint breakpoint_from_json(const Json& j) {
  if (!j.is_object()) return Breakpoint(pair_from_json(j));
  if (!j.contains("x_poly") || !j.contains("x_interval"))
    parse_fail("algebraic breakpoint needs x_poly and x_interval");
  const IntPolynomial poly = polynomial_from_json(j.at("x_poly"));
  const Json& iv = j.at("x_interval");
  if (!iv.is_array() || iv.size() != 2) parse_fail("x_interval must have two entries");
  const RootInterval interval{pair_from_json(iv[0]), pair_from_json(iv[1])};
  if (!(interval.lo < interval.hi) || poly.degree() < 1 ||
      SturmSequence(poly).count(interval.lo, interval.hi) != 1 || poly.eval(interval.hi) == 0)
    parse_fail("x_interval must isolate one root of x_poly in its interior");
  const bool upper = j.value("upper", false);
  return Breakpoint::algebraic(poly, interval, upper);
}

SignatureProfile torus_profile(const std::string& args) {
  const auto comma = args.find(',');
  if (comma == std::string::npos) parse_fail("torus needs m,n");
  const long m = parse_long(args.substr(0, comma));
  const long n = parse_long(args.substr(comma + 1));
  if (m == 0 || n == 0 || std::gcd(m, n) != 1) parse_fail("torus parameters must be coprime and nonzero");
  if (std::abs(m) == 1 || std::abs(n) == 1) return SignatureProfile();
  const SignatureProfile p = profile_from_jumps(torus_jumps(std::abs(m), std::abs(n)));
  return (m > 0) == (n > 0) ? p : negate(p);
}

SignatureProfile single_companion(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "unknot" && colon == std::string::npos) return SignatureProfile();
  if (head == "torus") return torus_profile(rest);
  if (head == "torus-neg") {
    const long l = parse_long(rest);
    if (l < 1) parse_fail("torus-neg needs l >= 1");
    return profile_Tll1(l);
  }
  if (head == "seifert") return profile_from_seifert(SeifertForm(matrix_from_json(parse_json(rest))));
  if (head == "profile") return profile_from_json(parse_json(rest));
  parse_fail("unknown companion '" + spec + "'");
}

}  // namespace

Json to_json(const Integer& z) { return z.get_str(); }

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Breakpoint& b) {
  if (b.is_rational()) return pair_to_json(b.rational());
  const AlgebraicAngle& a = b.angle();
  return Json{{"interval", Json::array({pair_to_json(a.r_lo), pair_to_json(a.r_hi)})},
              {"x_poly", to_json(a.x_poly)},
              {"x_interval", Json::array({pair_to_json(a.x_interval.lo), pair_to_json(a.x_interval.hi)})},
              {"upper", a.upper}};
}

Json to_json(const SignatureProfile& p) {
  Json out = Json::array();
  out.push_back(Json{{"plateau_first", p.plateaus().front()}});
  for (std::size_t i = 0; i < p.breakpoints().size(); ++i)
    out.push_back(Json{{"breakpoint", to_json(p.breakpoints()[i])}, {"plateau_after", p.plateaus()[i + 1]}});
  return out;
}

Json to_json(const CGValue& v) {
  Json terms = Json::array();
  for (const auto& t : v.terms)
    terms.push_back(Json{{"i", t.i},
                         {"s_i", to_json(t.s_i)},
                         {"jx", to_json(t.jx)},
                         {"quadratic", to_json(t.quadratic)},
                         {"knot", to_json(t.knot)}});
  return Json{{"value", to_json(v.value)}, {"terms", std::move(terms)}};
}

Json to_json(const MinmaxResult& m) {
  Json argmin = Json::array();
  for (const auto& r : m.argmin) argmin.push_back(to_json(r));
  return Json{{"min", to_json(m.min_value)},
              {"argmin", std::move(argmin)},
              {"bound", to_json(m.bound)},
              {"bound_ok", m.bound_ok},
              {"characters", m.characters}};
}

Json to_json(const ObstructionReport& r) {
  Json cert = Json::array();
  for (const auto& line : r.certificate)
    cert.push_back(Json{{"character", line.character},
                        {"value", to_json(line.value)},
                        {"lower_bound", line.lower_bound},
                        {"justification", line.justification}});
  return Json{{"verdict", std::string(verdict_name(r.verdict))}, {"certificate", std::move(cert)}};
}

Json to_json(const IndependenceReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"l", e.l}, {"n", e.n}, {"nonsingular", e.nonsingular}, {"slice", to_json(e.slice)}});
  return Json{{"pairwise_coprime", r.pairwise_coprime},
              {"entries", std::move(entries)},
              {"certified", r.certified},
              {"inconclusive", r.inconclusive}};
}

Json to_json(const TableRow& row) {
  return Json{{"k", row.k},
              {"r", row.s.get_str() + "/" + row.denominator.get_str()},
              {"value", to_json(row.value)}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const Error&) {
      parse_fail("not an integer: " + j.dump());
    }
  }
  parse_fail("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      parse_fail("not a rational: " + j.dump());
    }
  }
  parse_fail("expected a rational, got " + j.dump());
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_fail("matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  IntMatrix out(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols || cols == 0) parse_fail("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) out(i, c) = integer_from_json(j[i][c]);
  }
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("polynomial must be an array of coefficients");
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

SignatureProfile profile_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_object() || !j[0].contains("plateau_first"))
    parse_fail("profile must start with {\"plateau_first\": v}");
  std::vector<long> plateaus{long_from_json(j[0].at("plateau_first"))};
  std::vector<Breakpoint> breakpoints;
  for (std::size_t i = 1; i < j.size(); ++i) {
    if (!j[i].is_object() || !j[i].contains("breakpoint") || !j[i].contains("plateau_after"))
      parse_fail("profile entries need breakpoint and plateau_after");
    breakpoints.push_back(breakpoint_from_json(j[i].at("breakpoint")));
    plateaus.push_back(long_from_json(j[i].at("plateau_after")));
  }
  return SignatureProfile(std::move(breakpoints), std::move(plateaus));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

SignatureProfile parse_companion(const std::string& spec) {
  SignatureProfile total;
  std::size_t start = 0;
  while (true) {
    const auto hash = spec.find('#', start);
    const std::string piece = spec.substr(start, hash == std::string::npos ? std::string::npos : hash - start);
    if (piece.empty()) parse_fail("empty companion in '" + spec + "'");
    total = add(total, single_companion(piece));
    if (hash == std::string::npos) break;
    start = hash + 1;
  }
  return total;
}

}  // namespace concord
