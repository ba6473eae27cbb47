#include <zaremba/report_io.hpp>

#include <sstream>

namespace zaremba {

namespace {

nlohmann::json elements_json(const PartialQuotients& seq) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : seq.elements()) arr.push_back(e);
  return arr;
}

std::string elements_text(const PartialQuotients& seq) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out << ", ";
    out << seq[i];
  }
  out << ')';
  return out.str();
}

std::string poly_text(const CasePolynomial& p) {
  // Ascending storage, descending display: x^3 - 6 x^2 - 8 x + 8.
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    const Int& c = p.coeffs[i];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.str();
    if (i >= 1) {
      if (mag != 1) out << ' ';
      out << 'x';
      if (i >= 2) out << '^' << i;
    }
  }
  return out.str();
}

std::string param_or_blank(const BoundReport& rep, const char* key) {
  const auto it = rep.parameters.find(key);
  return it == rep.parameters.end() ? std::string() : it->second;
}

constexpr int kLambdaDigits = 15;

}  // namespace

std::string mode_name(CountMode mode) {
  return mode == CountMode::sequences ? "sequences" : "fractions";
}

nlohmann::json count_json(std::int64_t a, int m, std::int64_t bound,
                          CountMode mode, const CountResult& r) {
  return nlohmann::json{
      {"a", a},
      {"m", m},
      {"N", bound},
      {"mode", mode_name(mode)},
      {"count", std::to_string(r.count)},
      {"nodes", r.nodes},
      {"millis", r.millis},
      {"exhaustive", r.exhaustive},
  };
}

std::string count_csv(std::int64_t a, int m, std::int64_t bound,
                      CountMode mode, const CountResult& r) {
  std::ostringstream out;
  out << "a,m,N,mode,count,nodes,millis\n"
      << a << ',' << m << ',' << bound << ',' << mode_name(mode) << ','
      << r.count << ',' << r.nodes << ',' << r.millis << '\n';
  return out.str();
}

std::string count_text(std::int64_t a, int m, std::int64_t bound,
                       CountMode mode, const CountResult& r) {
  std::ostringstream out;
  out << "f(" << a << '^' << m << ", " << bound << ") = " << r.count << " ("
      << mode_name(mode) << ", " << r.nodes << " nodes"
      << (r.exhaustive ? "" : ", truncated") << ")\n";
  return out.str();
}

nlohmann::json sequence_json(const PartialQuotients& seq,
                             const Int& continuant) {
  return nlohmann::json{
      {"elements", elements_json(seq)},
      {"continuant", to_string(continuant)},
  };
}

nlohmann::json bound_report_json(const BoundReport& rep) {
  nlohmann::json j{
      {"theorem", rep.theorem_id},
      {"parameters", rep.parameters},
      {"claimed", to_string(rep.claimed)},
      {"verdict", rep.verdict},
      {"details", rep.details},
  };
  if (rep.oracle.has_value()) {
    j["oracle"] = to_string(*rep.oracle);
  } else {
    j["oracle"] = nullptr;
  }
  return j;
}

std::string bound_reports_csv(const std::vector<BoundReport>& reps) {
  std::ostringstream out;
  out << "theorem,a,s,m,N,k,claimed,oracle,verdict\n";
  for (const BoundReport& rep : reps) {
    out << rep.theorem_id << ',' << param_or_blank(rep, "a") << ','
        << param_or_blank(rep, "s") << ',' << param_or_blank(rep, "m") << ','
        << param_or_blank(rep, "N") << ',' << param_or_blank(rep, "k") << ','
        << rep.claimed;
    out << ',';
    if (rep.oracle.has_value()) out << *rep.oracle;
    out << ',' << rep.verdict << '\n';
  }
  return out.str();
}

std::string bound_report_text(const BoundReport& rep) {
  std::ostringstream out;
  out << rep.theorem_id << " (";
  bool first = true;
  for (const auto& [k, v] : rep.parameters) {
    if (!first) out << ", ";
    out << k << '=' << v;
    first = false;
  }
  out << "): claimed " << rep.claimed;
  if (rep.oracle.has_value()) {
    out << ", oracle " << *rep.oracle;
  }
  out << " -> " << rep.verdict << '\n';
  for (const auto& [k, v] : rep.details) {
    out << "  " << k << ": " << v << '\n';
  }
  return out.str();
}

nlohmann::json theorem6_json(const Theorem6Report& rep) {
  auto rows_json = [](const std::vector<UpperBoundRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const UpperBoundRow& r : rows) {
      arr.push_back(nlohmann::json{{"index", r.index},
                                   {"g", to_string(r.g)},
                                   {"bound", to_string(r.bound)},
                                   {"holds", r.holds}});
    }
    return arr;
  };
  nlohmann::json j{
      {"theorem", "theorem6"},
      {"s", rep.s},
      {"flavor", rep.flavor},
      {"all_hold", rep.all_hold},
      {"rows", rows_json(rep.rows)},
  };
  if (rep.s == 4) {
    j["printed_all_hold"] = rep.printed_all_hold;
    j["printed_rows"] = rows_json(rep.printed_rows);
  }
  return j;
}

std::string theorem6_text(const Theorem6Report& rep) {
  std::ostringstream out;
  out << "theorem6 (s=" << rep.s << ", " << rep.flavor << "): "
      << (rep.all_hold ? "all rows hold" : "some rows fail") << '\n';
  for (const UpperBoundRow& r : rep.rows) {
    out << "  index " << r.index << ": g=" << r.g << " bound=" << r.bound
        << ' ' << (r.holds ? "ok" : "FAIL") << '\n';
  }
  if (rep.s == 4) {
    out << "  column as printed: "
        << (rep.printed_all_hold ? "all rows hold" : "refuted by the table")
        << '\n';
    for (const UpperBoundRow& r : rep.printed_rows) {
      out << "    index " << r.index << ": g=" << r.g << " bound=" << r.bound
          << ' ' << (r.holds ? "ok" : "FAIL") << '\n';
    }
  }
  return out.str();
}

nlohmann::json witness_member_json(const WitnessMember& member) {
  nlohmann::json j = sequence_json(member.seq, continuant(member.seq));
  j["provenance"] = member.provenance;
  return j;
}

nlohmann::json witness_set_json(const WitnessSet& set) {
  nlohmann::json members = nlohmann::json::array();
  for (const WitnessMember& member : set.members) {
    members.push_back(witness_member_json(member));
  }
  return nlohmann::json{
      {"a", set.a},
      {"s", set.s},
      {"m", set.m},
      {"target", to_string(set.target)},
      {"element_bound", to_string(set.element_bound)},
      {"members", std::move(members)},
  };
}

std::string witness_set_jsonl(const WitnessSet& set) {
  std::ostringstream out;
  for (const WitnessMember& member : set.members) {
    out << witness_member_json(member).dump() << '\n';
  }
  return out.str();
}

std::string witness_set_csv(const WitnessSet& set) {
  std::ostringstream out;
  out << "elements,continuant,provenance\n";
  for (const WitnessMember& member : set.members) {
    out << '"';
    for (std::size_t i = 0; i < member.seq.size(); ++i) {
      if (i) out << ' ';
      out << member.seq[i];
    }
    out << "\"," << continuant(member.seq) << ',' << member.provenance
        << '\n';
  }
  return out.str();
}

std::string witness_set_text(const WitnessSet& set) {
  std::ostringstream out;
  out << set.members.size() << " witnesses for " << set.a << '^' << set.m
      << " with elements below " << set.element_bound << '\n';
  for (const WitnessMember& member : set.members) {
    out << "  " << elements_text(member.seq) << "  [" << member.provenance
        << "]\n";
  }
  return out.str();
}

nlohmann::json roots_json(int s) {
  const CasePolynomial p = polynomial_Ps(s);
  const SpectralResult root = largest_root(p);
  nlohmann::json j{
      {"s", s},
      {"case_id", p.case_id},
      {"coefficients_ascending", nlohmann::json::array()},
      {"polynomial", poly_text(p)},
      {"lambda", rational_decimal((root.lo + root.hi) / 2, kLambdaDigits)},
      {"lambda_lo", rational_decimal(root.lo, kLambdaDigits)},
      {"lambda_hi", rational_decimal(root.hi, kLambdaDigits)},
  };
  for (const Int& c : p.coeffs) {
    j["coefficients_ascending"].push_back(to_string(c));
  }
  if (s >= 4 && s % 2 == 0) {
    const CaseMatrix cm = case_matrix(s);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& row : cm.entries) {
      nlohmann::json r = nlohmann::json::array();
      for (const Int& v : row) r.push_back(to_string(v));
      entries.push_back(std::move(r));
    }
    j["matrix"] = nlohmann::json{{"source", cm.source},
                                 {"entries", std::move(entries)}};
    j["char_poly_matches"] = char_poly_check(s);
  }
  return j;
}

std::string roots_csv(int s) {
  const CasePolynomial p = polynomial_Ps(s);
  const SpectralResult root = largest_root(p);
  std::ostringstream out;
  out << "s,case_id,lambda,matrix_source,char_poly_matches\n";
  out << s << ',' << p.case_id << ','
      << rational_decimal((root.lo + root.hi) / 2, kLambdaDigits) << ',';
  if (s >= 4 && s % 2 == 0) {
    out << case_matrix(s).source << ','
        << (char_poly_check(s) ? "true" : "false");
  } else {
    out << ',';
  }
  out << '\n';
  return out.str();
}

std::string roots_text(int s) {
  const CasePolynomial p = polynomial_Ps(s);
  const SpectralResult root = largest_root(p);
  std::ostringstream out;
  out << "s = " << s << " (case " << p.case_id << ")\n";
  out << "polynomial: " << poly_text(p) << '\n';
  out << "largest root = "
      << rational_decimal((root.lo + root.hi) / 2, kLambdaDigits) << '\n';
  if (s >= 4 && s % 2 == 0) {
    const CaseMatrix cm = case_matrix(s);
    out << "matrix " << cm.source << ": [";
    for (std::size_t i = 0; i < cm.entries.size(); ++i) {
      if (i) out << ", ";
      out << '[';
      for (std::size_t k = 0; k < cm.entries[i].size(); ++k) {
        if (k) out << ", ";
        out << cm.entries[i][k];
      }
      out << ']';
    }
    out << "]\n";
    out << "doubled matrix has this characteristic polynomial: "
        << (char_poly_check(s) ? "yes" : "NO") << '\n';
  }
  return out.str();
}

nlohmann::json gap_json(const GapCertificate& gap) {
  return nlohmann::json{
      {"lambda", rational_decimal((gap.lambda_lo + gap.lambda_hi) / 2,
                                  kLambdaDigits)},
      {"mu", rational_decimal((gap.mu_lo + gap.mu_hi) / 2, kLambdaDigits)},
      {"gap_lo", rational_decimal(gap.gap_lo, kLambdaDigits)},
      {"gap_hi", rational_decimal(gap.gap_hi, kLambdaDigits)},
      {"holds", gap.holds},
  };
}

std::string gap_text(const GapCertificate& gap) {
  std::ostringstream out;
  out << "lambda = "
      << rational_decimal((gap.lambda_lo + gap.lambda_hi) / 2, kLambdaDigits)
      << '\n'
      << "mu     = "
      << rational_decimal((gap.mu_lo + gap.mu_hi) / 2, kLambdaDigits) << '\n'
      << "2 mu^(1/5) - lambda in ["
      << rational_decimal(gap.gap_lo, kLambdaDigits) << ", "
      << rational_decimal(gap.gap_hi, kLambdaDigits) << "]\n"
      << "exceeds 0.0000756: " << (gap.holds ? "yes" : "NO") << '\n';
  return out.str();
}

nlohmann::json zaremba_json(const Int& d, std::int64_t bound,
                            const std::optional<ZarembaWitness>& w) {
  nlohmann::json j{
      {"d", to_string(d)},
      {"bound", bound},
      {"found", w.has_value()},
  };
  if (w.has_value()) {
    j["c"] = to_string(w->numerator);
    j["elements"] = elements_json(w->expansion);
  }
  return j;
}

std::string zaremba_text(const Int& d, std::int64_t bound,
                         const std::optional<ZarembaWitness>& w) {
  std::ostringstream out;
  if (!w.has_value()) {
    out << "absent: no numerator below " << d
        << " has all partial quotients below " << bound << '\n';
    return out.str();
  }
  out << w->numerator << '/' << d << " = " << elements_text(w->expansion)
      << " with all partial quotients below " << bound << '\n';
  return out.str();
}

}  // namespace zaremba
