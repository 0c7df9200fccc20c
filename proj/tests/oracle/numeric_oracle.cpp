#include "numeric_oracle.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <unordered_map>

namespace su3::oracle {

namespace {

using Complex = std::complex<double>;

Complex phase(std::int64_t k, std::int64_t n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

using Key = std::array<std::int64_t, 18>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : k)
      h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};

Key key_of(const NumericMatrix& m, double eps) {
  Key k{};
  for (int i = 0; i < 9; ++i) {
    k[static_cast<std::size_t>(2 * i)] = std::llround(m(i / 3, i % 3).real() / eps);
    k[static_cast<std::size_t>(2 * i + 1)] = std::llround(m(i / 3, i % 3).imag() / eps);
  }
  return k;
}

double max_entry_distance(const NumericMatrix& a, const NumericMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

} // namespace

NumericMatrix E() {
  NumericMatrix m = NumericMatrix::Zero();
  m(0, 1) = m(1, 2) = m(2, 0) = 1.0;
  return m;
}

NumericMatrix diag_phases(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c) {
  NumericMatrix m = NumericMatrix::Zero();
  m(0, 0) = phase(a, n);
  m(1, 1) = phase(b, n);
  m(2, 2) = phase(c, n);
  return m;
}

NumericMatrix F(std::int64_t n, std::int64_t a, std::int64_t b) {
  return diag_phases(n, a, b, -a - b);
}

NumericMatrix Gtilde(std::int64_t d, std::int64_t r, std::int64_t s) {
  NumericMatrix m = NumericMatrix::Zero();
  m(0, 0) = phase(r, d);
  m(1, 2) = phase(s, d);
  m(2, 1) = -phase(-r - s, d);
  return m;
}

NumericMatrix omega_scalar() {
  return diag_phases(3, 1, 1, 1);
}

bool is_special_unitary(const NumericMatrix& m, double tol) {
  const bool unitary = (m * m.adjoint() - NumericMatrix::Identity()).cwiseAbs().maxCoeff() < tol;
  return unitary && std::abs(m.determinant() - Complex(1.0)) < tol;
}

NumericClosure numeric_close(const std::vector<NumericMatrix>& generators, double eps, std::size_t cap) {
  if (eps < 1e-12 || eps > 1e-6)
    throw std::invalid_argument("eps must lie in [1e-12, 1e-6]");
  NumericClosure out;
  std::unordered_map<Key, std::size_t, KeyHash> index;
  auto insert = [&](const NumericMatrix& m) {
    const Key k = key_of(m, eps);
    if (index.contains(k))
      return;
    for (const auto& existing : out.elements)
      if (max_entry_distance(existing, m) < 10 * eps)
        throw UnstableDedup();
    if (out.elements.size() >= cap)
      throw OracleCapExceeded();
    index.emplace(k, out.elements.size());
    out.elements.push_back(m);
  };
  insert(NumericMatrix::Identity());
  for (std::size_t head = 0; head < out.elements.size(); ++head)
    for (const auto& g : generators)
      insert(NumericMatrix(g * out.elements[head]));
  return out;
}

bool same_element_sets(const std::vector<NumericMatrix>& exact_images, const NumericClosure& numeric, double eps) {
  if (exact_images.size() != numeric.count())
    return false;
  std::vector<int> hits(numeric.count(), 0);
  for (const auto& x : exact_images) {
    int matches = 0;
    for (std::size_t i = 0; i < numeric.count(); ++i) {
      if (max_entry_distance(x, numeric.elements[i]) < eps) {
        ++matches;
        ++hits[i];
      }
    }
    if (matches != 1)
      return false;
  }
  for (int h : hits)
    if (h != 1)
      return false;
  return true;
}

CayleyTable cayley_table(const NumericClosure& g, double eps) {
  std::unordered_map<Key, int, KeyHash> index;
  for (std::size_t i = 0; i < g.count(); ++i)
    index.emplace(key_of(g.elements[i], eps), static_cast<int>(i));
  const int n = static_cast<int>(g.count());
  CayleyTable t{std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)))};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const NumericMatrix prod = g.elements[static_cast<std::size_t>(i)] * g.elements[static_cast<std::size_t>(j)];
      auto it = index.find(key_of(prod, eps));
      int found = -1;
      if (it != index.end()) {
        found = it->second;
      } else {
        for (int k = 0; k < n && found < 0; ++k)
          if (max_entry_distance(prod, g.elements[static_cast<std::size_t>(k)]) < 10 * eps)
            found = k;
      }
      if (found < 0)
        throw std::runtime_error("numeric closure is not closed");
      t.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = found;
    }
  }
  return t;
}

CayleyTable permutation_group(const std::vector<std::vector<int>>& generators) {
  const std::size_t k = generators.front().size();
  std::vector<int> id(k);
  for (std::size_t i = 0; i < k; ++i)
    id[i] = static_cast<int>(i);
  auto compose = [k](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(k);
    for (std::size_t i = 0; i < k; ++i)
      r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
  };
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      auto next = compose(g, elems[head]);
      if (!index.contains(next)) {
        index.emplace(next, static_cast<int>(elems.size()));
        elems.push_back(std::move(next));
      }
    }
  }
  CayleyTable t;
  for (const auto& p : elems) {
    std::vector<int> row;
    for (const auto& q : elems)
      row.push_back(index.at(compose(p, q)));
    t.mul.push_back(std::move(row));
  }
  return t;
}

CayleyTable z_n_squared_by_z3(int n) {
  auto idx = [n](int x, int y, int j) { return (x * n + y) * 3 + j; };
  auto act = [n](int x, int y, int j) {
    for (int i = 0; i < j; ++i) {
      const int nx = y;
      const int ny = ((-x - y) % n + 2 * n) % n;
      x = nx;
      y = ny;
    }
    return std::pair{x, y};
  };
  const int size = 3 * n * n;
  CayleyTable t{std::vector<std::vector<int>>(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)))};
  for (int x1 = 0; x1 < n; ++x1)
    for (int y1 = 0; y1 < n; ++y1)
      for (int j = 0; j < 3; ++j)
        for (int x2 = 0; x2 < n; ++x2)
          for (int y2 = 0; y2 < n; ++y2)
            for (int k = 0; k < 3; ++k) {
              const auto [vx, vy] = act(x2, y2, j);
              t.mul[static_cast<std::size_t>(idx(x1, y1, j))][static_cast<std::size_t>(idx(x2, y2, k))] =
                  idx((x1 + vx) % n, (y1 + vy) % n, (j + k) % 3);
            }
  return t;
}

CayleyTable cyclic_product(int m, int n) {
  const int size = m * n;
  CayleyTable t{std::vector<std::vector<int>>(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)))};
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      t.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          ((a / n + b / n) % m) * n + (a % n + b % n) % n;
  return t;
}

namespace {

int element_order(const CayleyTable& t, int x) {
  int k = 1;
  for (int y = x; y != 0; y = t.mul[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)])
    ++k;
  return k;
}

int inverse_of(const CayleyTable& t, int x) {
  for (int y = 0; y < t.size(); ++y)
    if (t.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == 0)
      return y;
  throw std::runtime_error("no inverse");
}

// Histogram of Z_d1 x ... x Z_dk by enumerating all tuples.
OrderHistogram chain_histogram(const std::vector<std::int64_t>& chain) {
  OrderHistogram hist;
  std::int64_t total = 1;
  for (auto d : chain)
    total *= d;
  for (std::int64_t code = 0; code < total; ++code) {
    std::int64_t rest = code;
    std::int64_t order = 1;
    for (auto d : chain) {
      const std::int64_t x = rest % d;
      rest /= d;
      order = std::lcm(order, d / std::gcd(x, d));
    }
    ++hist[order];
  }
  return hist;
}

void divisibility_chains(std::int64_t remaining, std::int64_t last, std::vector<std::int64_t>& current,
                         std::vector<std::vector<std::int64_t>>& out) {
  if (remaining == 1) {
    out.push_back(current);
    return;
  }
  for (std::int64_t d = 2; d <= remaining; ++d) {
    if (remaining % d != 0 || d % last != 0)
      continue;
    current.push_back(d);
    divisibility_chains(remaining / d, d, current, out);
    current.pop_back();
  }
}

} // namespace

OrderHistogram table_histogram(const CayleyTable& t) {
  OrderHistogram hist;
  for (int x = 0; x < t.size(); ++x)
    ++hist[element_order(t, x)];
  return hist;
}

GroupFingerprint table_fingerprint(const CayleyTable& t) {
  const int n = t.size();
  GroupFingerprint fp;
  fp.order = n;
  fp.histogram = table_histogram(t);

  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y)
      central = t.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ==
                t.mul[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    fp.center_order += central;
  }

  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    inv[static_cast<std::size_t>(x)] = inverse_of(t, x);
  auto m = [&t](int a, int b) { return t.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  std::set<int> commutators;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      commutators.insert(m(m(inv[static_cast<std::size_t>(x)], inv[static_cast<std::size_t>(y)]), m(x, y)));
  std::vector<int> derived{0};
  std::vector<bool> in_derived(static_cast<std::size_t>(n), false);
  in_derived[0] = true;
  for (std::size_t head = 0; head < derived.size(); ++head)
    for (int c : commutators) {
      const int next = m(derived[head], c);
      if (!in_derived[static_cast<std::size_t>(next)]) {
        in_derived[static_cast<std::size_t>(next)] = true;
        derived.push_back(next);
      }
    }
  fp.derived_order = static_cast<std::int64_t>(derived.size());

  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  OrderHistogram quotient;
  for (int x = 0; x < n; ++x) {
    if (covered[static_cast<std::size_t>(x)])
      continue;
    for (int d : derived)
      covered[static_cast<std::size_t>(m(x, d))] = true;
    int k = 1;
    for (int y = x; !in_derived[static_cast<std::size_t>(y)]; y = m(y, x))
      ++k;
    ++quotient[k];
  }
  const std::int64_t q_order = n / fp.derived_order;
  std::vector<std::vector<std::int64_t>> chains;
  std::vector<std::int64_t> current;
  divisibility_chains(q_order, 1, current, chains);
  for (const auto& chain : chains)
    if (chain_histogram(chain) == quotient) {
      fp.abelianization = chain;
      break;
    }
  return fp;
}

} // namespace su3::oracle
