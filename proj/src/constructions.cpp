#include <zaremba/constructions.hpp>

#include <zaremba/census.hpp>
#include <zaremba/errors.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>

namespace zaremba {

std::pair<PartialQuotients, PartialQuotients> hensley_double(
    const PartialQuotients& u, const Int& b) {
  if (u.empty()) {
    throw invalid_argument_error("hensley_double: input must be nonempty");
  }
  if (u.back() < 2) {
    throw invalid_argument_error("hensley_double: last element must be >= 2");
  }
  if (b < 2) {
    throw invalid_argument_error("hensley_double: inserted value must be >= 2");
  }
  if (b - 1 > Int(std::numeric_limits<std::int64_t>::max())) {
    throw invalid_argument_error("hensley_double: inserted value overflows");
  }
  const std::size_t n = u.size();

  std::vector<std::int64_t> wf;
  wf.reserve(2 * n + 2);
  for (std::size_t i = 0; i + 1 < n; ++i) wf.push_back(u[i]);
  wf.push_back(u[n - 1] - 1);
  wf.push_back(1);
  wf.push_back(static_cast<std::int64_t>(b - 1));
  for (std::size_t i = n; i-- > 0;) wf.push_back(u[i]);
  PartialQuotients w(std::move(wf));

  std::vector<std::int64_t> pf;
  pf.reserve(2 * n);
  for (std::size_t i = 0; i + 1 < n; ++i) pf.push_back(u[i]);
  pf.push_back(u[n - 1] - 1);
  pf.push_back(u[n - 1] + 1);
  for (std::size_t i = n - 1; i-- > 0;) pf.push_back(u[i]);
  PartialQuotients w_prime(std::move(pf));

  const Int k = continuant(u);
  if (continuant(w) != b * k * k) {
    throw construction_invariant_error("hensley_double: <w> != b * <u>^2");
  }
  if (continuant(w_prime) != k * k) {
    throw construction_invariant_error("hensley_double: <w'> != <u>^2");
  }
  return {std::move(w), std::move(w_prime)};
}

namespace {

// Checks that seq may sit inside a witness set with elements < bound and
// endpoints outside {1, bound-1}; `who` names the sequence in error text.
void require_witness_shape(const PartialQuotients& seq, const Int& bound,
                           const char* who, bool invariant_breach) {
  auto fail = [&](const std::string& what) {
    const std::string msg = std::string(who) + ": " + what;
    if (invariant_breach) throw construction_invariant_error(msg);
    throw invalid_argument_error(msg);
  };
  if (seq.empty()) fail("sequence is empty");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (Int(seq[i]) >= bound) fail("element reaches the bound a^s");
  }
  if (seq.front() == 1 || Int(seq.front()) == bound - 1) {
    fail("first element lies in {1, a^s - 1}");
  }
  if (seq.back() == 1 || Int(seq.back()) == bound - 1) {
    fail("last element lies in {1, a^s - 1}");
  }
}

}  // namespace

std::vector<PartialQuotients> lemma2_children(const PartialQuotients& u,
                                              const ConstructionParams& p) {
  if (p.a < 2) {
    throw invalid_argument_error("lemma2_children: base a must be >= 2");
  }
  if (p.s < 2) {
    throw invalid_argument_error("lemma2_children: exponent s must be >= 2");
  }
  if (p.r < 0 || p.r > p.s) {
    throw invalid_argument_error(
        "lemma2_children: inserted power r must lie in [0, s]");
  }
  if ((p.m - p.r) % 2 != 0) {
    throw invalid_argument_error(
        "lemma2_children: r must have the parity of m");
  }
  const int half = (p.m - p.r) / 2;
  if (half < 1) {
    throw invalid_argument_error(
        "lemma2_children: parent exponent (m - r)/2 must be >= 1");
  }
  const Int bound = ipow(Int(p.a), static_cast<unsigned>(p.s));
  require_witness_shape(u, bound, "lemma2_children: parent", false);
  if (continuant(u) != ipow(Int(p.a), static_cast<unsigned>(half))) {
    throw invalid_argument_error(
        "lemma2_children: parent continuant is not a^((m-r)/2)");
  }

  std::vector<PartialQuotients> children;
  children.reserve(2);
  if (p.r != 0) {
    const Int b = ipow(Int(p.a), static_cast<unsigned>(p.r));
    auto [w, w_prime] = hensley_double(u, b);
    (void)w_prime;
    children.push_back(reverse(w));
    children.push_back(std::move(w));
  } else {
    // b == 2 is a placeholder: only the squared form w' is kept.
    auto [w, w_prime] = hensley_double(u, Int(2));
    (void)w;
    children.push_back(reverse(w_prime));
    children.push_back(std::move(w_prime));
  }

  const Int target = ipow(Int(p.a), static_cast<unsigned>(p.m));
  for (const auto& child : children) {
    if (continuant(child) != target) {
      throw construction_invariant_error(
          "lemma2_children: child continuant is not a^m");
    }
    require_witness_shape(child, bound, "lemma2_children: child", true);
  }
  return children;
}

std::vector<PartialQuotients> endpoint_variants(const PartialQuotients& w) {
  if (w.empty()) {
    throw invalid_argument_error("endpoint_variants: input must be nonempty");
  }
  if (w.front() < 2 || w.back() < 2) {
    throw invalid_argument_error("endpoint_variants: endpoints must be >= 2");
  }
  const std::size_t n = w.size();
  if (n == 1 && w.front() < 3) {
    throw invalid_argument_error(
        "endpoint_variants: single-element input needs a value >= 3");
  }

  std::vector<PartialQuotients> out;
  out.reserve(4);
  out.push_back(w);
  if (n == 1) {
    out.push_back(PartialQuotients{1, w.front() - 1});
    out.push_back(PartialQuotients{w.front() - 1, 1});
    out.push_back(PartialQuotients{1, w.front() - 2, 1});
  } else {
    std::vector<std::int64_t> lead;
    lead.reserve(n + 1);
    lead.push_back(1);
    lead.push_back(w.front() - 1);
    for (std::size_t i = 1; i < n; ++i) lead.push_back(w[i]);
    out.emplace_back(std::move(lead));

    std::vector<std::int64_t> trail;
    trail.reserve(n + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) trail.push_back(w[i]);
    trail.push_back(w.back() - 1);
    trail.push_back(1);
    out.emplace_back(std::move(trail));

    std::vector<std::int64_t> both;
    both.reserve(n + 2);
    both.push_back(1);
    both.push_back(w.front() - 1);
    for (std::size_t i = 1; i + 1 < n; ++i) both.push_back(w[i]);
    both.push_back(w.back() - 1);
    both.push_back(1);
    out.emplace_back(std::move(both));
  }

  const Int k = continuant(w);
  for (const auto& v : out) {
    if (continuant(v) != k) {
      throw construction_invariant_error(
          "endpoint variant changed the continuant");
    }
  }
  return out;
}

std::pair<int, int> seed_window(std::int64_t a, int s) {
  if (a < 2) throw invalid_argument_error("base a must be >= 2");
  if (s < 2) throw invalid_argument_error("exponent bound s must be >= 2");
  if (s >= 3) return {2, s + 2};
  if (a == 2) return {6, 11};
  return {2, 4};
}

SeedCache SeedCache::load(const std::string& path) {
  SeedCache cache;
  std::ifstream in(path);
  if (!in) return cache;  // absent file: start empty
  std::string line;
  if (!std::getline(in, line) || line != "# seed-cache v1") {
    throw invalid_argument_error("seed cache has an unknown header: " + path);
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::int64_t a = 0;
    int s = 0, m = 0;
    std::string colon;
    if (!(ss >> a >> s >> m >> colon) || colon != ":" || a < 2 || s < 2 ||
        m < 1) {
      throw invalid_argument_error("seed cache line " + std::to_string(lineno) +
                                   " is malformed");
    }
    std::vector<std::int64_t> elems;
    std::int64_t e = 0;
    while (ss >> e) elems.push_back(e);
    if (!ss.eof() || elems.empty()) {
      throw invalid_argument_error("seed cache line " + std::to_string(lineno) +
                                   " is malformed");
    }
    cache.entries_[{a, s, m}] = std::move(elems);
  }
  return cache;
}

void SeedCache::save(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw invalid_argument_error("cannot write seed cache: " + path);
  }
  out << "# seed-cache v1\n";
  for (const auto& [key, elems] : entries_) {
    out << std::get<0>(key) << ' ' << std::get<1>(key) << ' '
        << std::get<2>(key) << " :";
    for (auto e : elems) out << ' ' << e;
    out << '\n';
  }
}

std::optional<PartialQuotients> SeedCache::lookup(std::int64_t a, int s,
                                                  int m) const {
  auto it = entries_.find({a, s, m});
  if (it == entries_.end()) return std::nullopt;
  return PartialQuotients(it->second);
}

void SeedCache::store(std::int64_t a, int s, int m,
                      const PartialQuotients& seq) {
  entries_[{a, s, m}] = seq.elements();
}

namespace {

std::int64_t element_bound_for(std::int64_t a, int s) {
  const Int big = ipow(Int(a), static_cast<unsigned>(s));
  if (big > Int(std::numeric_limits<std::int64_t>::max() / 4)) {
    throw invalid_argument_error("element bound a^s is too large to store");
  }
  return static_cast<std::int64_t>(big);
}

bool seed_is_valid(const PartialQuotients& seq, const Int& target,
                   std::int64_t bound) {
  if (seq.empty()) return false;
  if (seq.front() < 2 || seq.front() > bound - 2) return false;
  if (seq.back() < 2 || seq.back() > bound - 2) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] >= bound) return false;
  }
  return continuant(seq) == target;
}

}  // namespace

std::map<int, PartialQuotients> seed_sequences(std::int64_t a, int s,
                                               SeedCache* cache) {
  const auto [lo, hi] = seed_window(a, s);
  const std::int64_t bound = element_bound_for(a, s);
  std::map<int, PartialQuotients> out;
  for (int m = lo; m <= hi; ++m) {
    const Int target = ipow(Int(a), static_cast<unsigned>(m));
    if (cache) {
      if (auto hit = cache->lookup(a, s, m);
          hit && seed_is_valid(*hit, target, bound)) {
        out.emplace(m, std::move(*hit));
        continue;
      }
    }
    auto found = find_endpoint_constrained(target, bound);
    if (!found) throw seed_not_found_error(a, s, m);
    if (cache) cache->store(a, s, m, *found);
    out.emplace(m, std::move(*found));
  }
  return out;
}

namespace {

void sort_unique(std::vector<WitnessMember>& v) {
  std::sort(v.begin(), v.end(), [](const WitnessMember& x,
                                   const WitnessMember& y) {
    return x.seq < y.seq;
  });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const WitnessMember& x, const WitnessMember& y) {
                        return x.seq == y.seq;
                      }),
          v.end());
}

}  // namespace

WitnessSet generate_family(std::int64_t a, int s, int m, SeedCache* cache) {
  const auto [lo, hi] = seed_window(a, s);
  if (m < lo) {
    throw invalid_argument_error("exponent m is below the seed window");
  }
  const std::int64_t bound = element_bound_for(a, s);
  const auto seeds = seed_sequences(a, s, cache);

  std::map<int, std::vector<WitnessMember>> memo;
  std::function<const std::vector<WitnessMember>&(int)> cores =
      [&](int mm) -> const std::vector<WitnessMember>& {
    if (auto it = memo.find(mm); it != memo.end()) return it->second;
    std::vector<WitnessMember> built;
    if (mm <= hi) {
      built.push_back({seeds.at(mm), "seed"});
    } else {
      for (int r = mm % 2; r <= s; r += 2) {
        const int half = (mm - r) / 2;
        if (half < lo) break;  // half shrinks as r grows
        const ConstructionParams params{a, s, mm, r};
        const std::string tag = "|lemma2(r=" + std::to_string(r) + ")";
        for (const auto& c : cores(half)) {
          auto children = lemma2_children(c.seq, params);
          built.push_back({std::move(children[0]), c.provenance + tag + "a"});
          built.push_back({std::move(children[1]), c.provenance + tag + "b"});
        }
      }
      if (built.empty()) {
        throw construction_invariant_error(
            "no doubling decomposition reaches the seed window");
      }
    }
    sort_unique(built);
    return memo.emplace(mm, std::move(built)).first->second;
  };

  WitnessSet ws;
  ws.a = a;
  ws.s = s;
  ws.m = m;
  ws.target = ipow(Int(a), static_cast<unsigned>(m));
  ws.element_bound = Int(bound);

  static const char* kVariantTag[4] = {"", "|v1", "|v2", "|v3"};
  for (const auto& c : cores(m)) {
    auto vars = endpoint_variants(c.seq);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      ws.members.push_back({std::move(vars[i]), c.provenance + kVariantTag[i]});
    }
  }
  sort_unique(ws.members);

  for (const auto& member : ws.members) {
    if (continuant(member.seq) != ws.target) {
      throw construction_invariant_error("family member continuant mismatch");
    }
    for (std::size_t i = 0; i < member.seq.size(); ++i) {
      if (member.seq[i] >= bound) {
        throw construction_invariant_error("family member element too large");
      }
    }
  }
  return ws;
}

}  // namespace zaremba
