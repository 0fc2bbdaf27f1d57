#include "ecg/mols.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ecg/errors.hpp"

namespace ecg {
namespace {

// Irreducible polynomials, coefficients from x^0 upward (monic).
const std::map<int, std::vector<int>>& modulus_table() {
  static const std::map<int, std::vector<int>> table = {
      {4, {1, 1, 1}},        // x^2 + x + 1 over GF(2)
      {8, {1, 1, 0, 1}},     // x^3 + x + 1 over GF(2)
      {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1 over GF(2)
      {9, {1, 0, 1}},        // x^2 + 1 over GF(3)
      {27, {1, 2, 0, 1}},    // x^3 + 2x + 1 over GF(3)
      {25, {2, 0, 1}},       // x^2 + 2 over GF(5)
  };
  return table;
}

std::vector<int> digits(int a, int p, int k) {
  std::vector<int> d(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i, a /= p) d[static_cast<std::size_t>(i)] = a % p;
  return d;
}

int from_digits(const std::vector<int>& d, int p) {
  int v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(int n) {
  if (n < 2) return std::nullopt;
  int p = 2;
  while (n % p != 0) ++p;
  int k = 0, m = n;
  while (m % p == 0) m /= p, ++k;
  if (m != 1) return std::nullopt;
  return std::pair{p, k};
}

bool mols_order_supported(int q) { return is_prime(q) || modulus_table().count(q) > 0; }

std::optional<FiniteField> FiniteField::of_order(int q) {
  if (is_prime(q)) return FiniteField(q, 1, {0, 1});
  const auto it = modulus_table().find(q);
  if (it == modulus_table().end()) return std::nullopt;
  const auto pk = prime_power(q);
  return FiniteField(pk->first, pk->second, it->second);
}

FiniteField::FiniteField(int p, int degree, std::vector<int> modulus) : p_(p) {
  q_ = 1;
  for (int i = 0; i < degree; ++i) q_ *= p;
  const auto qq = static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_);
  add_.resize(qq);
  mul_.resize(qq);
  for (int a = 0; a < q_; ++a) {
    const auto da = digits(a, p, degree);
    for (int b = 0; b < q_; ++b) {
      const auto db = digits(b, p, degree);
      std::vector<int> sum(static_cast<std::size_t>(degree));
      for (int i = 0; i < degree; ++i) sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
      add_[index(a, b)] = from_digits(sum, p);

      std::vector<int> prod(static_cast<std::size_t>(2 * degree - 1), 0);
      for (int i = 0; i < degree; ++i)
        for (int j = 0; j < degree; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
      // Reduce modulo the monic modulus from the top degree down.
      for (int t = 2 * degree - 2; t >= degree; --t) {
        const int c = prod[static_cast<std::size_t>(t)];
        if (c == 0) continue;
        for (int i = 0; i <= degree; ++i) {
          auto& slot = prod[static_cast<std::size_t>(t - degree + i)];
          slot = ((slot - c * modulus[static_cast<std::size_t>(i)]) % p + p) % p;
        }
      }
      prod.resize(static_cast<std::size_t>(degree));
      mul_[index(a, b)] = from_digits(prod, p);
    }
  }
}

LatinSquare::LatinSquare(int order, std::vector<int> cells) : n_(order), cells_(std::move(cells)) {
  if (order < 1 || cells_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
    throw InputError("latin square: cell count must be order^2");
}

bool LatinSquare::is_latin() const {
  for (int i = 0; i < n_; ++i) {
    std::vector<char> row(static_cast<std::size_t>(n_), 0), col(static_cast<std::size_t>(n_), 0);
    for (int j = 0; j < n_; ++j) {
      const int r = at(i, j), c = at(j, i);
      if (r < 0 || r >= n_ || c < 0 || c >= n_) return false;
      if (row[static_cast<std::size_t>(r)]++ || col[static_cast<std::size_t>(c)]++) return false;
    }
  }
  return true;
}

MolsFamily mols_family(int q, int count) {
  if (q < 1) throw InputError("mols: order must be >= 1");
  if (count < 0) throw InputError("mols: count must be >= 0");
  MolsFamily family{q, {}};
  const auto field = FiniteField::of_order(q);
  if (!field) {
    if (count > 1)
      throw InputError("mols: order " + std::to_string(q) +
                       " is not a supported prime power; only a single square can be constructed");
    if (count == 1) {
      std::vector<int> cells(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) cells[static_cast<std::size_t>(i * q + j)] = (i + j) % q;
      family.squares.emplace_back(q, std::move(cells));
    }
    return family;
  }
  if (count > q - 1)
    throw InputError("mols: at most " + std::to_string(q - 1) + " orthogonal squares of order " + std::to_string(q));
  for (int k = 1; k <= count; ++k) {
    std::vector<int> cells(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) cells[static_cast<std::size_t>(i * q + j)] = field->add(field->mul(k, i), j);
    family.squares.emplace_back(q, std::move(cells));
  }
  return family;
}

OrthogonalityReport check_orthogonal(const MolsFamily& family) {
  for (const auto& s : family.squares)
    if (s.order() != family.order) throw InputError("check_orthogonal: squares of mixed order");
  const int n = family.order;
  OrthogonalityReport out;
  for (std::size_t a = 0; a < family.squares.size(); ++a) {
    for (std::size_t b = a + 1; b < family.squares.size(); ++b) {
      std::map<std::pair<int, int>, std::pair<int, int>> seen;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const auto key = std::pair{family.squares[a].at(i, j), family.squares[b].at(i, j)};
          const auto [it, fresh] = seen.emplace(key, std::pair{i, j});
          if (!fresh) {
            out.orthogonal = false;
            out.squares = std::pair{a, b};
            out.cells = std::pair{it->second, std::pair{i, j}};
            return out;
          }
        }
    }
  }
  return out;
}

CliqueCover cover_from_mols(int n, int m, const MolsFamily& family) {
  if (n < 1) throw InputError("cover_from_mols: part size must be >= 1");
  if (m < 3 || m > n + 1) throw InputError("cover_from_mols: requires 3 <= m <= n + 1");
  if (family.order != n) throw InputError("cover_from_mols: squares must have order n");
  if (family.squares.size() < static_cast<std::size_t>(m - 2))
    throw InputError("cover_from_mols: need at least " + std::to_string(m - 2) + " orthogonal squares, got " +
                     std::to_string(family.squares.size()));
  for (const auto& s : family.squares)
    if (!s.is_latin()) throw InputError("cover_from_mols: family contains a non-Latin square");
  if (!check_orthogonal(family).orthogonal) throw InputError("cover_from_mols: squares are not pairwise orthogonal");

  CliqueCover cover{CoverKind::edge, {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      VertexSet c{a, n + b};
      for (int s = 2; s < m; ++s) c.push_back(s * n + family.squares[static_cast<std::size_t>(s - 2)].at(a, b));
      cover.cliques.push_back(std::move(c));
    }
  return cover;
}

}  // namespace ecg
