#include "gtwidth/lie.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gtwidth {

Rational parse_rational(std::string_view s) {
  auto fail = [&](const char* why) {
    throw InvalidWeightError("cannot parse rational '" + std::string(s) + "': " + why);
  };
  if (s.empty()) fail("empty string");
  for (char c : s) {
    if (c == '.' || c == 'e' || c == 'E') fail("floating-point syntax rejected; use p/q");
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      fail("unexpected character");
  }
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(boost::multiprecision::mpz_int(std::string(s)));
    }
    boost::multiprecision::mpz_int num{std::string(s.substr(0, slash))};
    boost::multiprecision::mpz_int den{std::string(s.substr(slash + 1))};
    if (den == 0) fail("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    fail("malformed number");
  }
  return Rational(0);  // unreachable
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

int GroupSpec::ambient_size() const {
  switch (family) {
    case GroupFamily::UnitaryU: return n;
    case GroupFamily::OddOrthogonal: return 2 * n + 1;
    case GroupFamily::EvenOrthogonal: return 2 * n;
  }
  return 0;
}

int GroupSpec::dim() const {
  switch (family) {
    case GroupFamily::UnitaryU: return n * n;
    case GroupFamily::OddOrthogonal: return n * (2 * n + 1);
    case GroupFamily::EvenOrthogonal: return n * (2 * n - 1);
  }
  return 0;
}

std::string GroupSpec::name() const {
  switch (family) {
    case GroupFamily::UnitaryU: return "U(" + std::to_string(n) + ")";
    case GroupFamily::OddOrthogonal: return "SO(" + std::to_string(2 * n + 1) + ")";
    case GroupFamily::EvenOrthogonal: return "SO(" + std::to_string(2 * n) + ")";
  }
  return "?";
}

Weight Weight::checked(GroupSpec g, RatVec entries) {
  if (g.n < 1) throw InvalidWeightError("rank must be at least 1");
  if (entries.size() != g.n)
    throw InvalidWeightError("expected " + std::to_string(g.n) + " entries, got " +
                             std::to_string(entries.size()));
  const int n = g.n;
  auto violated = [&](int i, const std::string& what) {
    throw InvalidWeightError("weight is outside the positive chamber of " + g.name() +
                             ": " + what + " (entry " + std::to_string(i) + ")");
  };
  for (int i = 1; i < n; ++i) {
    // For SO(2n) the last comparison is l(n-1) >= |ln| instead.
    if (g.family == GroupFamily::EvenOrthogonal && i == n - 1) break;
    if (!(entries(i - 1) >= entries(i)))
      violated(i, "l" + std::to_string(i) + " >= l" + std::to_string(i + 1) + " fails");
  }
  switch (g.family) {
    case GroupFamily::UnitaryU: break;
    case GroupFamily::OddOrthogonal:
      if (!(entries(n - 1) >= 0)) violated(n, "ln >= 0 fails");
      break;
    case GroupFamily::EvenOrthogonal:
      if (n >= 2) {
        Rational a = entries(n - 1);
        if (a < 0) a = -a;
        if (!(entries(n - 2) >= a)) violated(n, "l(n-1) >= |ln| fails");
      }
      break;
  }
  return Weight{g, std::move(entries)};
}

int BlockStructure::n_of(int a) const {
  if (a == 0) return 0;
  if (a == m + 1) {
    int total = 0;
    for (int k : sizes) total += k;
    return total;
  }
  return breakpoints.at(a - 1);
}

int BlockStructure::block_of(int i) const {
  int a = 1;
  for (int bp : breakpoints) {
    if (i <= bp) return a;
    ++a;
  }
  return m + 1;
}

BlockStructure block_structure(const Weight& w) {
  BlockStructure b;
  const int n = w.n();
  b.values.push_back(w.at(1));
  int run = 1;
  for (int i = 2; i <= n; ++i) {
    if (w.at(i) == w.at(i - 1)) {
      ++run;
    } else {
      b.breakpoints.push_back(i - 1);
      b.sizes.push_back(run);
      b.values.push_back(w.at(i));
      run = 1;
    }
  }
  b.sizes.push_back(run);
  b.m = static_cast<int>(b.breakpoints.size());
  return b;
}

std::string CorootPairing::label() const {
  switch (kind) {
    case CorootKind::Difference:
      return "(e" + std::to_string(j) + "-e" + std::to_string(k) + ")v";
    case CorootKind::Sum:
      return "(e" + std::to_string(j) + "+e" + std::to_string(k) + ")v";
    case CorootKind::Short: return "(e" + std::to_string(j) + ")v";
  }
  return "?";
}

std::vector<CorootPairing> coroot_pairings(const Weight& w) {
  std::vector<CorootPairing> out;
  const int n = w.n();
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k)
      out.push_back({CorootKind::Difference, j, k, w.at(j) - w.at(k)});
  if (w.group.is_orthogonal()) {
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        out.push_back({CorootKind::Sum, j, k, w.at(j) + w.at(k)});
  }
  if (w.group.family == GroupFamily::OddOrthogonal) {
    for (int j = 1; j <= n; ++j) out.push_back({CorootKind::Short, j, 0, 2 * w.at(j)});
  }
  return out;
}

bool is_point_orbit(const Weight& w) {
  for (const auto& p : coroot_pairings(w))
    if (p.value > 0) return false;
  return true;
}

Rational r_of(const Weight& w) {
  std::optional<Rational> best;
  for (const auto& p : coroot_pairings(w)) {
    if (p.value > 0 && (!best || p.value < *best)) best = p.value;
  }
  if (!best)
    throw PointOrbitError("the orbit through this weight of " + w.group.name() +
                          " is a point: no positive coroot pairing");
  return *best;
}

Rational r_closed_form(const Weight& w) {
  const BlockStructure b = block_structure(w);
  std::optional<Rational> best;
  auto consider = [&](const Rational& v) {
    if (v > 0 && (!best || v < *best)) best = v;
  };
  for (int a = 0; a < b.m; ++a) consider(b.values[a] - b.values[a + 1]);
  switch (w.group.family) {
    case GroupFamily::UnitaryU: break;
    case GroupFamily::OddOrthogonal:
      consider(2 * b.values.back());
      break;
    case GroupFamily::EvenOrthogonal:
      // Minimal positive sum pairing over block values. A sum inside one
      // block needs the block to contain two entries.
      for (std::size_t p = 0; p < b.values.size(); ++p) {
        for (std::size_t q = p; q < b.values.size(); ++q) {
          if (p == q && b.sizes[p] < 2) continue;
          consider(b.values[p] + b.values[q]);
        }
      }
      break;
  }
  if (!best) throw PointOrbitError("point orbit");
  return *best;
}

bool condition_star(const Weight& w) {
  if (!w.group.is_orthogonal())
    throw WrongFamilyError("the star condition is defined for the orthogonal families only");
  const int n = w.n();
  if (n == 1) return true;  // the clause |ln| != l(n-1) is vacuous
  Rational last = w.at(n);
  if (last == 0) return true;
  if (last < 0) last = -last;
  // Stated on |ln| so that the condition is invariant under the outer flip
  // ln -> -ln of SO(2n), which identifies the two orbits symplectically.
  // For ln >= 0 this is the familiar form of the condition.
  if (last != w.at(n - 1)) return true;
  return last >= r_of(w);
}

LowerBound lower_bound(const Weight& w) {
  const Rational r = r_of(w);
  if (!w.group.is_orthogonal()) return {r, true};
  if (condition_star(w)) return {r, true};
  Rational ln = w.at(w.n());
  if (ln < 0) ln = -ln;
  if (!(r > ln && ln != 0))
    throw ConstructionError("star failure must imply r > |ln| != 0");
  return {ln, false};
}

int stabilizer_dim(const Weight& w) {
  BlockStructure b = block_structure(w);
  const bool last_zero = (b.values.back() == 0);
  switch (w.group.family) {
    case GroupFamily::UnitaryU: {
      int d = 0;
      for (int k : b.sizes) d += k * k;
      return d;
    }
    case GroupFamily::OddOrthogonal: {
      int d = 0;
      const std::size_t unitary_blocks = b.sizes.size() - (last_zero ? 1 : 0);
      for (std::size_t a = 0; a < unitary_blocks; ++a) d += b.sizes[a] * b.sizes[a];
      if (last_zero) {
        const int k = b.sizes.back();
        d += k * (2 * k + 1);  // dim SO(2k+1)
      }
      return d;
    }
    case GroupFamily::EvenOrthogonal: {
      std::vector<int> sizes = b.sizes;
      std::vector<Rational> values = b.values;
      // Blocks with values v and -v stabilize jointly: U(k+k') not
      // U(k) x U(k'). In the chamber this can only pair the last two blocks.
      if (values.size() >= 2 && values.back() < 0 &&
          values[values.size() - 2] == -values.back()) {
        sizes[sizes.size() - 2] += sizes.back();
        sizes.pop_back();
        values.pop_back();
      }
      int d = 0;
      const bool zero = (values.back() == 0);
      for (std::size_t a = 0; a < sizes.size(); ++a) {
        if (zero && a + 1 == sizes.size()) break;
        d += sizes[a] * sizes[a];
      }
      if (zero) {
        const int k = sizes.back();
        d += k * (2 * k - 1);  // dim SO(2k)
      }
      return d;
    }
  }
  return 0;
}

OrbitDims orbit_dims(const Weight& w) {
  const int real = w.group.dim() - stabilizer_dim(w);
  if (real % 2 != 0) throw ConstructionError("orbit dimension must be even");
  return {real, real / 2};
}

int orbit_dim_from_blocks(const Weight& w) {
  const BlockStructure b = block_structure(w);
  const int n = w.n();
  int sub = 0;
  for (int k : b.sizes) sub += k * (k - 1);
  const int klast = b.sizes.back();
  const bool last_zero = (b.values.back() == 0);
  switch (w.group.family) {
    case GroupFamily::UnitaryU: return n * (n - 1) - sub;
    case GroupFamily::OddOrthogonal:
      return 2 * n * n - sub - (last_zero ? klast * (klast + 1) : 0);
    case GroupFamily::EvenOrthogonal:
      return 2 * n * (n - 1) - sub - (last_zero ? klast * (klast - 1) : 0);
  }
  return 0;
}

std::optional<Rational> exact_width(const Weight& w) {
  if (w.group.is_orthogonal())
    throw WrongFamilyError("the divisibility width criterion applies to U(n) only");
  if (is_point_orbit(w)) throw PointOrbitError("point orbit");
  const BlockStructure b = block_structure(w);
  // Candidate divisors are the distinct positive differences of block
  // values. Any candidate that divides every difference must divide, and be
  // no larger than, the minimal one, so at most min matches; keep the scan
  // anyway and assert that.
  std::vector<Rational> candidates;
  for (std::size_t p = 0; p < b.values.size(); ++p)
    for (std::size_t q = p + 1; q < b.values.size(); ++q)
      candidates.push_back(b.values[p] - b.values[q]);
  std::optional<Rational> found;
  for (const Rational& d : candidates) {
    bool all = true;
    for (std::size_t p = 0; p < b.values.size() && all; ++p)
      for (std::size_t q = 0; q < b.values.size() && all; ++q)
        if (!is_integer((b.values[p] - b.values[q]) / d)) all = false;
    if (all) {
      if (found && *found != d)
        throw ConstructionError("two distinct universal divisors");
      found = d;
    }
  }
  if (found && *found != r_of(w))
    throw ConstructionError("universal divisor must equal the minimal pairing");
  return found;
}

Indecomposability is_indecomposable(const Weight& w) {
  const auto pairings = coroot_pairings(w);
  for (const auto& p : pairings)
    if (p.value == 0)
      throw NotRegularError("weight is not regular: " + p.label() + " pairs to zero");

  const int n = w.n();
  std::vector<Rational> simple;
  for (int i = 1; i < n; ++i) simple.push_back(w.at(i) - w.at(i + 1));
  switch (w.group.family) {
    case GroupFamily::UnitaryU: break;
    case GroupFamily::OddOrthogonal: simple.push_back(2 * w.at(n)); break;
    case GroupFamily::EvenOrthogonal:
      if (n >= 2) simple.push_back(w.at(n - 1) + w.at(n));
      break;
  }
  // All pairings of a regular chamber point with positive coroots are
  // positive, so k > 0 reduces to integrality of the quotient.
  for (const Rational& s : simple) {
    bool divides_all = true;
    for (const auto& p : pairings) {
      if (!is_integer(p.value / s)) {
        divides_all = false;
        break;
      }
    }
    if (divides_all) {
      Rational bound = pairings.front().value;
      for (const auto& p : pairings) bound = std::min(bound, p.value);
      return {true, bound};
    }
  }
  return {false, std::nullopt};
}

}  // namespace gtwidth
