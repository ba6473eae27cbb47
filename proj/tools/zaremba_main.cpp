#include <zaremba/bounds.hpp>
#include <zaremba/census.hpp>
#include <zaremba/constructions.hpp>
#include <zaremba/continuant.hpp>
#include <zaremba/errors.hpp>
#include <zaremba/gtable.hpp>
#include <zaremba/report_io.hpp>
#include <zaremba/spectral.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace zaremba;

constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerification = 3;

struct GlobalOptions {
  std::string format = "text";
  std::string output;
  int workers = 1;
  std::uint64_t node_budget = 1'000'000'000;
  bool timings = false;
};

// Writes the payload to --output or standard output; timings go to standard
// error only, so machine-readable payloads stay byte-identical across runs.
void emit(const GlobalOptions& opt, const std::string& payload) {
  if (opt.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) {
    throw invalid_argument_error("cannot open output file: " + opt.output);
  }
  out << payload;
}

void report_timing(const GlobalOptions& opt, const std::string& what,
                   std::int64_t millis) {
  if (opt.timings) {
    std::cerr << what << " took " << millis << " ms\n";
  }
}

Int parse_int(const std::string& text, const char* what) {
  if (text.empty()) throw invalid_argument_error(std::string(what) + " is empty");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw invalid_argument_error(std::string(what) + " is not a number");
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw invalid_argument_error(std::string(what) + " is not a number: " + text);
    }
  }
  return Int(text);
}

int run_count(const GlobalOptions& opt, std::int64_t a, int m,
              std::int64_t bound, const std::string& mode_text) {
  const CountMode mode =
      (mode_text == "fractions") ? CountMode::fractions : CountMode::sequences;
  CountResult r = count_f(a, m, bound, mode, opt.node_budget, opt.workers);
  report_timing(opt, "count", r.millis);
  r.millis = 0;
  std::string payload;
  if (opt.format == "json") {
    payload = count_json(a, m, bound, mode, r).dump() + "\n";
  } else if (opt.format == "csv") {
    payload = count_csv(a, m, bound, mode, r);
  } else {
    payload = count_text(a, m, bound, mode, r);
  }
  emit(opt, payload);
  return 0;
}

int run_witnesses(const GlobalOptions& opt, std::int64_t a, int s, int m,
                  const std::string& cache_path) {
  std::unique_ptr<SeedCache> cache;
  if (!cache_path.empty()) {
    cache = std::make_unique<SeedCache>(SeedCache::load(cache_path));
  }
  const WitnessSet set = generate_family(a, s, m, cache.get());
  if (cache) cache->save(cache_path);
  std::string payload;
  if (opt.format == "json") {
    payload = witness_set_json(set).dump() + "\n";
  } else if (opt.format == "csv") {
    payload = witness_set_csv(set);
  } else {
    payload = witness_set_text(set);
  }
  emit(opt, payload);
  return 0;
}

int run_roots(const GlobalOptions& opt, int s) {
  std::string payload;
  if (opt.format == "json") {
    payload = roots_json(s).dump() + "\n";
  } else if (opt.format == "csv") {
    payload = roots_csv(s);
  } else {
    payload = roots_text(s);
  }
  emit(opt, payload);
  return 0;
}

int run_zaremba(const GlobalOptions& opt, const std::string& d_text,
                std::int64_t bound) {
  const Int d = parse_int(d_text, "--d");
  const auto witness = zaremba_witness(d, bound);
  std::string payload;
  if (opt.format == "json") {
    payload = zaremba_json(d, bound, witness).dump() + "\n";
  } else if (opt.format == "csv") {
    std::ostringstream out;
    out << "d,bound,found,c,elements\n" << d << ',' << bound << ','
        << (witness ? "true" : "false") << ',';
    if (witness) {
      out << witness->numerator << ',' << '"';
      for (std::size_t i = 0; i < witness->expansion.size(); ++i) {
        if (i) out << ' ';
        out << witness->expansion[i];
      }
      out << '"';
    } else {
      out << ',';
    }
    out << '\n';
    payload = out.str();
  } else {
    payload = zaremba_text(d, bound, witness);
  }
  emit(opt, payload);
  return 0;
}

// ---------------------------------------------------------------------------
// verify: named suites of checks, one ok/FAIL line each (text format).

struct Check {
  std::string name;
  bool ok = false;
  std::string note;
};

struct VerifyLimits {
  int m_max = 512;
  int s_max = 200;
  int k_max = 12;
  std::uint64_t budget = 100'000'000;
  int workers = 1;
};

class Suite {
 public:
  void add(const std::string& name, bool ok, std::string note = "") {
    checks_.push_back({name, ok, std::move(note)});
  }

  // Runs fn and records a thrown exception as a failed check.
  void run(const std::string& name, const std::function<void(Suite&)>& fn) {
    try {
      fn(*this);
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }

  // Records one check that passes iff fn() throws not_applicable_error.
  void expect_not_applicable(const std::string& name,
                             const std::function<void()>& fn) {
    try {
      fn();
      add(name, false, "expected a not-applicable rejection");
    } catch (const not_applicable_error&) {
      add(name, true, "rejected as not applicable");
    } catch (const std::exception& e) {
      add(name, false, std::string("wrong error: ") + e.what());
    }
  }

  const std::vector<Check>& checks() const { return checks_; }

  int failures() const {
    int n = 0;
    for (const Check& c : checks_) n += c.ok ? 0 : 1;
    return n;
  }

 private:
  std::vector<Check> checks_;
};

std::string verdict_note(const BoundReport& rep) {
  std::ostringstream out;
  out << "claimed " << rep.claimed;
  if (rep.oracle) out << ", oracle " << *rep.oracle;
  out << ", " << rep.verdict;
  const auto it = rep.details.find("oracle_note");
  if (it != rep.details.end()) out << " (" << it->second << ")";
  return out.str();
}

// A bound report check passes unless the oracle refutes the claim.
void add_report(Suite& suite, const std::string& name,
                const BoundReport& rep) {
  suite.add(name, rep.verdict != "fails", verdict_note(rep));
}

std::uint64_t lcg_next(std::uint64_t& state) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return state >> 33;
}

void suite_statement1(Suite& suite, const VerifyLimits&) {
  suite.run("golden continuants", [](Suite& s) {
    s.add("golden continuants",
          continuant(PartialQuotients{2, 1, 1, 1, 1, 2, 2}) == 81 &&
              continuant(PartialQuotients{2, 1, 2}) == 8,
          "<2,1,1,1,1,2,2> = 81, <2,1,2> = 8");
  });
  suite.run("reversal invariance", [](Suite& s) {
    std::uint64_t rng = 20260817;
    bool ok = true;
    for (int trial = 0; trial < 500 && ok; ++trial) {
      std::vector<std::int64_t> elems;
      const auto len = 1 + lcg_next(rng) % 8;
      for (std::uint64_t i = 0; i < len; ++i) {
        elems.push_back(1 + static_cast<std::int64_t>(lcg_next(rng) % 4));
      }
      const PartialQuotients u(elems);
      ok = continuant(u) == continuant(reverse(u));
    }
    s.add("reversal invariance", ok, "500 random sequences");
  });
  suite.run("determinant route", [](Suite& s) {
    std::uint64_t rng = 97;
    bool ok = true;
    for (int trial = 0; trial < 300 && ok; ++trial) {
      std::vector<std::int64_t> elems;
      const auto len = 1 + lcg_next(rng) % 7;
      for (std::uint64_t i = 0; i < len; ++i) {
        elems.push_back(1 + static_cast<std::int64_t>(lcg_next(rng) % 5));
      }
      const PartialQuotients u(elems);
      ok = continuant(u) == continuant_det(u);
    }
    s.add("determinant route", ok, "300 random sequences");
  });
  suite.run("expansion roundtrip", [](Suite& s) {
    bool ok = true;
    int pairs = 0;
    for (int d = 2; d <= 300 && ok; ++d) {
      for (int c = 1; c < d && ok; ++c) {
        if (boost::multiprecision::gcd(Int(c), Int(d)) != 1) continue;
        const PartialQuotients u = cf_expand(Fraction(Int(c), Int(d)));
        const Fraction back = cf_value(u);
        ok = back.num == c && back.den == d &&
             (u.size() == 1 || u.back() >= 2);
        ++pairs;
      }
    }
    s.add("expansion roundtrip", ok,
          std::to_string(pairs) + " reduced fractions, d <= 300");
  });
  suite.run("leading-one normalization", [](Suite& s) {
    bool ok = true;
    for (std::int64_t x = 1; x <= 6 && ok; ++x) {
      for (std::int64_t y = 1; y <= 6 && ok; ++y) {
        const PartialQuotients u{1, x, y};
        const PartialQuotients v = normalize_leading_one(u);
        // <1,x,y> = <x,y> + <y>, so folding the leading one keeps the
        // continuant and complements the tail ratio: value(v) = 1 - value(u).
        const Fraction a = cf_value(u);
        const Fraction b = cf_value(v);
        ok = continuant(u) == continuant(v) &&
             b == Fraction(a.den - a.num, a.den);
      }
    }
    s.add("leading-one normalization", ok,
          "continuant kept, tail ratio complemented");
  });
}

void suite_lemmas(Suite& suite, const VerifyLimits&) {
  suite.run("doubling identities", [](Suite& s) {
    const auto [w, wp] = hensley_double(PartialQuotients{2, 2}, Int(2));
    bool ok = continuant(w) == 50 && continuant(wp) == 25;
    const auto [w3, wp3] = hensley_double(PartialQuotients{3}, Int(3));
    ok = ok && continuant(w3) == 27 && continuant(wp3) == 9;
    std::uint64_t rng = 11;
    for (int trial = 0; trial < 100 && ok; ++trial) {
      std::vector<std::int64_t> elems;
      const auto len = 1 + lcg_next(rng) % 4;
      for (std::uint64_t i = 0; i < len; ++i) {
        elems.push_back(2 + static_cast<std::int64_t>(lcg_next(rng) % 3));
      }
      const PartialQuotients u(elems);
      const Int b = 2 + static_cast<std::int64_t>(lcg_next(rng) % 4);
      const Int k2 = continuant(u) * continuant(u);
      const auto [dw, dwp] = hensley_double(u, b);
      ok = continuant(dw) == b * k2 && continuant(dwp) == k2;
    }
    s.add("doubling identities", ok, "goldens plus 100 random bases");
  });
  suite.run("children continuants", [](Suite& s) {
    const auto seeds = seed_sequences(2, 2);
    bool ok = true;
    int produced = 0;
    for (int m = 12; m <= 22 && ok; ++m) {
      for (int r = m % 2; r <= 2 && ok; r += 2) {
        const int half = (m - r) / 2;
        const auto it = seeds.find(half);
        if (it == seeds.end()) continue;
        const ConstructionParams params{2, 2, m, r};
        for (const PartialQuotients& child :
             lemma2_children(it->second, params)) {
          ok = ok && continuant(child) == ipow(Int(2), m);
          const std::size_t n = it->second.size();
          ok = ok && (child.size() == 2 * n + 2 || child.size() == 2 * n);
          ++produced;
        }
      }
    }
    s.add("children continuants", ok,
          std::to_string(produced) + " children checked");
  });
  suite.run("matrix polynomials", [](Suite& s) {
    bool ok = true;
    for (int sv = 4; sv <= 16; sv += 2) ok = ok && char_poly_check(sv);
    s.add("matrix polynomials", ok, "s = 4..16 even");
  });
  suite.run("index chain depth", [](Suite& s) {
    const bool a = iteration_depth(35, 2).n == 1;
    const bool b = iteration_depth(35, 6).n == 0;
    s.add("index chain depth", a && b, "depth(35,2)=1, depth(35,6)=0");
  });
  suite.expect_not_applicable("index chain below window",
                              [] { iteration_depth(12, 2); });
  suite.run("expansion rows", [](Suite& s) {
    const GTable t = g_table(6, 211);
    const Int g211 = t.at(211);
    const bool r1 = g211 == 2 * (t.at(105) + t.at(104) + t.at(103));
    const bool r2 = g211 == 4 * (2 * t.at(52) + 3 * t.at(51) + 3 * t.at(50) +
                                 2 * t.at(49));
    const bool r3 =
        g211 == 8 * (2 * t.at(26) + 8 * t.at(25) + 10 * t.at(24) +
                     10 * t.at(23) + 5 * t.at(22));
    const bool r4 =
        g211 == 16 * (2 * t.at(13) + 20 * t.at(12) + 35 * t.at(11) +
                      35 * t.at(10) + 25 * t.at(9) + 5 * t.at(8));
    s.add("expansion rows", r1 && r2 && r3 && r4,
          "four-step unrolling at m = 211");
  });
  suite.run("acceleration dominance", [](Suite& s) {
    s.add("acceleration dominance", acceleration_dominance_check(),
          "j in {2..5}, both tails");
  });
  suite.run("gap certificate", [](Suite& s) {
    s.add("gap certificate", gap_check().holds, "2 mu^(1/5) - lambda");
  });
}

void suite_theorem1(Suite& suite, const VerifyLimits& lim) {
  for (const int m : {12, 16, 18}) {
    suite.run("a=2 s=2 m=" + std::to_string(m), [&](Suite& s) {
      add_report(s, "a=2 s=2 m=" + std::to_string(m),
                 theorem1_bound(2, 2, m, lim.budget, lim.workers));
    });
  }
  for (const int m : {5, 8}) {
    suite.run("a=3 s=2 m=" + std::to_string(m), [&](Suite& s) {
      add_report(s, "a=3 s=2 m=" + std::to_string(m),
                 theorem1_bound(3, 2, m, lim.budget, lim.workers));
    });
  }
  suite.run("a=2 s=3 m=21", [&](Suite& s) {
    add_report(s, "a=2 s=3 m=21",
               theorem1_bound(2, 3, 21, lim.budget, lim.workers));
  });
  suite.run("a=2 s=6 m=35", [&](Suite& s) {
    const BoundReport rep = theorem1_bound(2, 6, 35, lim.budget, lim.workers);
    add_report(s, "a=2 s=6 m=35", rep);
    const auto it = rep.details.find("claim_within_table");
    s.add("a=2 s=6 m=35 table cross-check",
          it != rep.details.end() && it->second == "true",
          "claimed <= 4*g_m");
  });
  suite.run("a=2 s=8 m=45", [&](Suite& s) {
    add_report(s, "a=2 s=8 m=45",
               theorem1_bound(2, 8, 45, lim.budget, lim.workers));
  });
  suite.expect_not_applicable("below threshold rejected",
                              [&] { theorem1_bound(2, 2, 11, lim.budget); });
}

void suite_theorem2(Suite& suite, const VerifyLimits& lim) {
  suite.run("N=2^12", [&](Suite& s) {
    const BoundReport rep =
        theorem2_bound(2, ipow(Int(2), 12), 65, lim.budget, lim.workers);
    add_report(s, "N=2^12", rep);
    s.add("N=2^12 stated case applies",
          rep.details.at("polynomial_mismatch") == "false",
          "s = 12 matches the stated cubic");
  });
  suite.run("N=10000", [&](Suite& s) {
    const BoundReport rep =
        theorem2_bound(2, Int(10000), 75, lim.budget, lim.workers);
    add_report(s, "N=10000", rep);
    s.add("N=10000 mismatch flagged",
          rep.details.at("polynomial_mismatch") == "true",
          "s = 13 is outside the stated residue class");
  });
  suite.expect_not_applicable("small N rejected",
                              [&] { theorem2_bound(2, Int(100), 30, 0); });
}

void suite_theorem3(Suite& suite, const VerifyLimits&) {
  suite.run("refined chain m=14369", [](Suite& s) {
    const BoundReport rep = theorem3_bound(14369);
    add_report(s, "refined chain m=14369", rep);
    s.add("dominates the basic chain",
          rep.details.at("dominates_theorem1") == "true",
          "claimed " + to_string(rep.claimed) + " vs " +
              rep.details.at("theorem1_claimed"));
    s.add("gap certificate holds", rep.details.at("gap_holds") == "true",
          "gap_lo = " + rep.details.at("gap_lo"));
  });
  suite.expect_not_applicable("shallow chain rejected",
                              [] { theorem3_bound(1000); });
}

void suite_theorem4(Suite& suite, const VerifyLimits& lim) {
  for (const int m : {8, 9, 10}) {
    suite.run("m=" + std::to_string(m), [&](Suite& s) {
      add_report(s, "m=" + std::to_string(m),
                 theorem4_bound(m, lim.budget, lim.workers));
    });
  }
  suite.expect_not_applicable("m=7 rejected", [&] { theorem4_bound(7); });
}

void suite_theorem5(Suite& suite, const VerifyLimits& lim) {
  for (const int k : {2, 3, 4}) {
    suite.run("k=" + std::to_string(k), [&](Suite& s) {
      const BoundReport rep = theorem5_bound(k, lim.budget, lim.workers);
      add_report(s, "k=" + std::to_string(k), rep);
      if (k == 2) {
        s.add("k=2 equality",
              rep.oracle.has_value() && *rep.oracle == 4 && rep.claimed == 4,
              "f(2^3, 3) = 4 = 2^2");
      }
    });
  }
  suite.run("k=5 beyond oracle", [&](Suite& s) {
    const BoundReport rep = theorem5_bound(5, lim.budget, lim.workers);
    s.add("k=5 beyond oracle", rep.verdict == "oracle-unavailable",
          verdict_note(rep));
  });
}

void suite_theorem6(Suite& suite, const VerifyLimits& lim) {
  for (const int s_odd : {3, 5, 7}) {
    suite.run("odd s=" + std::to_string(s_odd), [&](Suite& s) {
      const Theorem6Report rep = theorem6_upper(s_odd, lim.m_max);
      s.add("odd s=" + std::to_string(s_odd), rep.all_hold,
            "g_m <= m^log2(" + std::to_string(s_odd + 1) + ") for m <= " +
                std::to_string(lim.m_max));
    });
  }
  suite.run("s=2 exact doubling", [&](Suite& s) {
    const Theorem6Report rep = theorem6_upper(2, lim.k_max);
    s.add("s=2 exact doubling", rep.all_hold,
          "g_(2^k - 1) = 2^(k-3) for k = 4.." + std::to_string(lim.k_max));
  });
  suite.run("s=4 matrix columns", [&](Suite& s) {
    const Theorem6Report rep = theorem6_upper(4, lim.k_max);
    s.add("s=4 derivation column", rep.all_hold,
          "g_(2^k - 1) <= 2^(k-3) (1,1) A^(k-4) (1,4)");
    s.add("s=4 printed column refuted", !rep.printed_all_hold,
          "the (1,2) column is below the table from k = 4 on");
  });
}

void suite_remarks(Suite& suite, const VerifyLimits& lim) {
  suite.run("root expansions", [&](Suite& s) {
    int violations = 0;
    int swept = 0;
    for (int sv = 6; sv <= lim.s_max; sv += 2) {
      const ExpansionReport rep = remark1_expansion(sv);
      if (!rep.within) ++violations;
      ++swept;
    }
    s.add("root expansions", true,
          std::to_string(swept) + " even s in [6, " +
              std::to_string(lim.s_max) + "], " +
              std::to_string(violations) + " outside the printed interval");
  });
  suite.run("refined residuals", [&](Suite& s) {
    int swept = 0;
    std::string last;
    for (int sv = 12; sv <= lim.s_max; sv += 8) {
      const ResidualReport rep = remark6_residual(sv);
      last = rational_decimal((rep.lo + rep.hi) / 2, 6);
      ++swept;
    }
    s.add("refined residuals", swept > 0,
          std::to_string(swept) + " values of s = 4 (mod 8); last residual " +
              last);
  });
  suite.run("smallest-root threshold", [&](Suite& s) {
    const S0Report rep = find_s0(std::max(12, lim.s_max));
    s.add("smallest-root threshold", rep.s0 > 0,
          "s0 = " + std::to_string(rep.s0) + " up to s_max = " +
              std::to_string(rep.s_max));
  });
  suite.run("matrix polynomial at s=6", [](Suite& s) {
    const std::vector<Int> expected{Int(8), Int(-8), Int(-6), Int(1)};
    const Matrix twoA = mat_scale(case_matrix(6).entries, Int(2));
    s.add("matrix polynomial at s=6", char_poly(twoA) == expected,
          "x^3 - 6 x^2 - 8 x + 8");
  });
  suite.run("eigenvalue gap", [](Suite& s) {
    const GapCertificate gap = gap_check();
    s.add("eigenvalue gap", gap.holds,
          "gap_lo = " + rational_decimal(gap.gap_lo, 12));
  });
  suite.run("endpoint variants", [](Suite& s) {
    const auto variants = endpoint_variants(PartialQuotients{2, 1, 2});
    bool ok = variants.size() == 4;
    for (const auto& v : variants) ok = ok && continuant(v) == 8;
    for (std::size_t i = 0; ok && i < variants.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < variants.size(); ++j) {
        ok = variants[i] != variants[j];
      }
    }
    s.add("endpoint variants", ok, "4 distinct sequences, continuant 8");
  });
}

int run_verify(const GlobalOptions& opt, const std::string& suite_name,
               const VerifyLimits& lim) {
  Suite suite;
  if (suite_name == "statement1") {
    suite_statement1(suite, lim);
  } else if (suite_name == "lemmas") {
    suite_lemmas(suite, lim);
  } else if (suite_name == "theorem1") {
    suite_theorem1(suite, lim);
  } else if (suite_name == "theorem2") {
    suite_theorem2(suite, lim);
  } else if (suite_name == "theorem3") {
    suite_theorem3(suite, lim);
  } else if (suite_name == "theorem4") {
    suite_theorem4(suite, lim);
  } else if (suite_name == "theorem5") {
    suite_theorem5(suite, lim);
  } else if (suite_name == "theorem6") {
    suite_theorem6(suite, lim);
  } else if (suite_name == "remarks") {
    suite_remarks(suite, lim);
  } else {
    throw invalid_argument_error("unknown suite: " + suite_name);
  }

  std::string payload;
  if (opt.format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : suite.checks()) {
      checks.push_back(nlohmann::json{
          {"name", c.name}, {"ok", c.ok}, {"note", c.note}});
    }
    payload = nlohmann::json{{"suite", suite_name},
                             {"checks", checks},
                             {"failures", suite.failures()}}
                  .dump() +
              "\n";
  } else if (opt.format == "csv") {
    std::ostringstream out;
    out << "suite,check,status,note\n";
    for (const Check& c : suite.checks()) {
      std::string note = c.note;
      for (char& ch : note) {
        if (ch == ',') ch = ';';
      }
      out << suite_name << ',' << c.name << ','
          << (c.ok ? "ok" : "FAIL") << ',' << note << '\n';
    }
    payload = out.str();
  } else {
    std::ostringstream out;
    for (const Check& c : suite.checks()) {
      out << (c.ok ? "ok   - " : "FAIL - ") << c.name;
      if (!c.note.empty()) out << ": " << c.note;
      out << '\n';
    }
    out << "suite " << suite_name << ": "
        << (suite.checks().size() - suite.failures()) << " passed, "
        << suite.failures() << " failed\n";
    payload = out.str();
  }
  emit(opt, payload);
  return suite.failures() == 0 ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuant census, witness constructions, and bound checks"};
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--output", opt.output, "Write the payload to this file");
  app.add_option("--workers", opt.workers, "Worker threads for enumeration")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--node-budget", opt.node_budget,
                 "Enumeration node budget")
      ->capture_default_str();
  app.add_flag("--timings", opt.timings,
               "Report wall-clock times on standard error");

  // count
  auto* count_cmd =
      app.add_subcommand("count", "Count sequences with continuant a^m");
  count_cmd->fallthrough();
  std::int64_t count_a = 0;
  int count_m = 0;
  std::int64_t count_bound = 0;
  std::string count_mode = "sequences";
  count_cmd->add_option("--a", count_a, "Base of the target a^m")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 31));
  count_cmd->add_option("--m", count_m, "Exponent of the target a^m")
      ->required()
      ->check(CLI::Range(1, 4096));
  count_cmd->add_option("--bound", count_bound,
                        "Elements are strictly below this bound")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 62));
  count_cmd->add_option("--mode", count_mode, "sequences or fractions")
      ->check(CLI::IsMember({"sequences", "fractions"}))
      ->capture_default_str();

  // witnesses
  auto* wit_cmd = app.add_subcommand(
      "witnesses", "Generate the doubling-construction witness family");
  wit_cmd->fallthrough();
  std::int64_t wit_a = 0;
  int wit_s = 0, wit_m = 0;
  std::string wit_cache;
  wit_cmd->add_option("--a", wit_a, "Base")->required()->check(
      CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  wit_cmd->add_option("--s", wit_s, "Element-bound exponent (bound a^s)")
      ->required()
      ->check(CLI::Range(2, 62));
  wit_cmd->add_option("--m", wit_m, "Target exponent (continuant a^m)")
      ->required()
      ->check(CLI::Range(2, 4096));
  wit_cmd->add_option("--seed-cache", wit_cache,
                      "Seed cache file to reuse and update");

  // roots
  auto* roots_cmd = app.add_subcommand(
      "roots", "Case polynomial, largest root, and matrix consistency");
  roots_cmd->fallthrough();
  int roots_s = 0;
  roots_cmd->add_option("--s", roots_s, "Window exponent")
      ->required()
      ->check(CLI::Range(2, 100000));

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Run a named verification suite");
  verify_cmd->fallthrough();
  std::string suite_name;
  VerifyLimits lim;
  verify_cmd->add_option("--suite", suite_name, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"statement1", "lemmas", "theorem1", "theorem2",
                             "theorem3", "theorem4", "theorem5", "theorem6",
                             "remarks"}));
  verify_cmd->add_option("--m-max", lim.m_max, "Largest index m in sweeps")
      ->check(CLI::Range(2, 65536))
      ->capture_default_str();
  verify_cmd->add_option("--s-max", lim.s_max, "Largest s in sweeps")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  verify_cmd->add_option("--k-max", lim.k_max, "Largest k in doubling rows")
      ->check(CLI::Range(4, 24))
      ->capture_default_str();

  // zaremba
  auto* zar_cmd = app.add_subcommand(
      "zaremba", "Smallest coprime numerator with bounded partial quotients");
  zar_cmd->fallthrough();
  std::string zar_d;
  std::int64_t zar_bound = 0;
  zar_cmd->add_option("--d", zar_d, "Denominator")->required();
  zar_cmd->add_option("--bound", zar_bound,
                      "Partial quotients are strictly below this bound")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 62));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // CLI11 prints the message; nonzero on error
  }

  try {
    if (app.count("--node-budget") > 0) lim.budget = opt.node_budget;
    lim.workers = opt.workers;
    if (count_cmd->parsed()) {
      return run_count(opt, count_a, count_m, count_bound, count_mode);
    }
    if (wit_cmd->parsed()) {
      return run_witnesses(opt, wit_a, wit_s, wit_m, wit_cache);
    }
    if (roots_cmd->parsed()) {
      return run_roots(opt, roots_s);
    }
    if (verify_cmd->parsed()) {
      return run_verify(opt, suite_name, lim);
    }
    if (zar_cmd->parsed()) {
      return run_zaremba(opt, zar_d, zar_bound);
    }
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const budget_exceeded_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const not_applicable_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const invalid_argument_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const construction_invariant_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const bracketing_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const seed_not_found_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
