#include "su3/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <tuple>

#include "su3/errors.hpp"

namespace su3 {

std::size_t default_order_cap() {
  if (const char* env = std::getenv("SU3_ORDER_CAP")) {
    std::size_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc{} && ptr == end && value >= 1)
      return value;
  }
  return default_order_cap_value;
}

GroupTable close(std::span<const MonomialElement> generators, std::size_t order_cap) {
  if (generators.empty())
    throw ParameterError("closure needs at least one generator");
  if (order_cap < 1)
    throw ParameterError("order cap must be at least 1");

  GroupTable table;
  table.generators_.assign(generators.begin(), generators.end());

  auto insert = [&table, order_cap](const MonomialElement& x) {
    if (table.index_.contains(x))
      return;
    if (table.elements_.size() >= order_cap)
      throw CapExceeded(order_cap);
    table.index_.emplace(x, table.elements_.size());
    table.elements_.push_back(x);
  };

  insert(MonomialElement::identity());
  // The element vector doubles as the BFS queue.
  for (std::size_t head = 0; head < table.elements_.size(); ++head) {
    for (const auto& g : table.generators_) {
      insert(g * table.elements_[head]);
    }
  }
  return table;
}

GroupTable generated_subgroup(std::span<const MonomialElement> elements, std::size_t order_cap) {
  std::vector<MonomialElement> gens;
  GroupTable current = close({MonomialElement::identity()}, order_cap);
  for (const auto& x : elements) {
    if (current.contains(x))
      continue;
    gens.push_back(x);
    current = close(gens, order_cap);
  }
  return current;
}

GroupTable diagonal_part(const GroupTable& group) {
  std::vector<MonomialElement> diag;
  for (const auto& x : group.elements())
    if (x.is_diagonal())
      diag.push_back(x);
  return generated_subgroup(diag, group.order());
}

GroupTable derived_subgroup(const GroupTable& group) {
  const auto& gens = group.generators();
  std::vector<MonomialElement> normal_gens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      normal_gens.push_back(commutator(gens[i], gens[j]));

  GroupTable sub = generated_subgroup(normal_gens, group.order());
  // Normal closure: add conjugates of the subgroup's generators until stable.
  for (bool grew = true; grew;) {
    grew = false;
    const auto sub_gens = sub.generators();
    for (const auto& h : sub_gens) {
      for (const auto& g : gens) {
        auto c = conjugate(h, g);
        if (!sub.contains(c)) {
          normal_gens.push_back(c);
          grew = true;
        }
      }
    }
    if (grew)
      sub = generated_subgroup(normal_gens, group.order());
  }
  return sub;
}

GroupTable center(const GroupTable& group) {
  std::vector<MonomialElement> central;
  for (const auto& x : group.elements()) {
    bool commutes = std::all_of(group.generators().begin(), group.generators().end(),
                                [&x](const MonomialElement& g) { return x * g == g * x; });
    if (commutes)
      central.push_back(x);
  }
  return generated_subgroup(central, group.order());
}

OrderHistogram element_order_histogram(const GroupTable& group) {
  OrderHistogram hist;
  for (const auto& x : group.elements())
    ++hist[element_order(x)];
  return hist;
}

bool is_normal(const GroupTable& group, const GroupTable& sub) {
  for (const auto& h : sub.elements())
    if (!group.contains(h))
      throw SubNotContained();
  for (const auto& h : sub.generators())
    for (const auto& g : group.generators())
      if (!sub.contains(conjugate(h, g)))
        return false;
  return true;
}

PermPartMap perm_part_epimorphism(const GroupTable& group) {
  PermPartMap map;
  map.labels.reserve(group.order());
  std::array<bool, 6> hit{};
  for (const auto& x : group.elements()) {
    const int label = x.perm().index();
    map.labels.push_back(label);
    hit[static_cast<std::size_t>(label)] = true;
    map.kernel_order += x.is_diagonal();
  }
  for (int i = 0; i < 6; ++i)
    if (hit[static_cast<std::size_t>(i)])
      map.image.push_back(Perm3::from_index(i));
  return map;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    primes.push_back(n);
  return primes;
}

// Exponent k with p^k == n, assuming n is a power of p.
int log_exact(std::int64_t n, std::int64_t p) {
  int k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

} // namespace

std::vector<std::int64_t> invariant_factors_from_histogram(const OrderHistogram& histogram) {
  std::int64_t order = 0;
  std::int64_t exponent = 1;
  for (const auto& [o, count] : histogram) {
    order += count;
    exponent = std::lcm(exponent, o);
  }

  // For each prime, the sizes of the p^k-torsion subgroups give the number of
  // cyclic p-power factors of each exponent.
  std::vector<std::vector<int>> prime_exponents;
  const auto primes = prime_factors(order);
  for (auto p : primes) {
    std::vector<int> torsion_log{0};
    for (std::int64_t pk = p; exponent % pk == 0; pk *= p) {
      std::int64_t count = 0;
      for (const auto& [o, c] : histogram)
        if (pk % o == 0)
          count += c;
      torsion_log.push_back(log_exact(count, p));
    }
    std::vector<int> exps;  // descending exponents of the cyclic p-factors
    const int kmax = static_cast<int>(torsion_log.size()) - 1;
    for (int k = kmax; k >= 1; --k) {
      const int at_least_k = torsion_log[static_cast<std::size_t>(k)] - torsion_log[static_cast<std::size_t>(k - 1)];
      const int at_least_next = k < kmax ? torsion_log[static_cast<std::size_t>(k + 1)] - torsion_log[static_cast<std::size_t>(k)] : 0;
      for (int i = 0; i < at_least_k - at_least_next; ++i)
        exps.push_back(k);
    }
    prime_exponents.push_back(std::move(exps));
  }

  std::size_t rank = 0;
  for (const auto& e : prime_exponents)
    rank = std::max(rank, e.size());
  std::vector<std::int64_t> factors(rank, 1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const auto& e = prime_exponents[i];
    for (std::size_t j = 0; j < e.size(); ++j)
      for (int k = 0; k < e[j]; ++k)
        factors[j] *= primes[i];
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

bool operator<(const GroupFingerprint& a, const GroupFingerprint& b) {
  return std::tie(a.order, a.histogram, a.center_order, a.derived_order, a.abelianization) <
         std::tie(b.order, b.histogram, b.center_order, b.derived_order, b.abelianization);
}

GroupFingerprint fingerprint(const GroupTable& group) {
  GroupFingerprint fp;
  fp.order = static_cast<std::int64_t>(group.order());
  fp.histogram = element_order_histogram(group);
  fp.center_order = static_cast<std::int64_t>(center(group).order());

  const GroupTable derived = derived_subgroup(group);
  fp.derived_order = static_cast<std::int64_t>(derived.order());

  // Order histogram of the abelianization G/G', one coset at a time.
  std::vector<bool> seen(group.order(), false);
  OrderHistogram quotient;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (seen[i])
      continue;
    const auto& g = group.elements()[i];
    for (const auto& h : derived.elements())
      seen[group.index_of(g * h)] = true;
    std::int64_t k = 1;
    for (auto gk = g; !derived.contains(gk); gk = gk * g)
      ++k;
    ++quotient[k];
  }
  fp.abelianization = invariant_factors_from_histogram(quotient);
  return fp;
}

std::string to_string(const GroupFingerprint& fp) {
  std::ostringstream os;
  os << fp.order << '|';
  bool first = true;
  for (const auto& [o, c] : fp.histogram) {
    os << (first ? "" : ",") << o << ':' << c;
    first = false;
  }
  os << '|' << fp.center_order << '|' << fp.derived_order << '|';
  first = true;
  for (auto f : fp.abelianization) {
    os << (first ? "" : ",") << f;
    first = false;
  }
  return os.str();
}

} // namespace su3
