#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ecg/cover.hpp"
#include "ecg/graph.hpp"

namespace ecg {

// Arithmetic in GF(q) for q prime or one of the tabulated prime powers
// 4, 8, 9, 16, 25, 27. Elements are 0..q-1, read as base-p coefficient
// vectors of polynomials reduced modulo a fixed irreducible polynomial.
class FiniteField {
 public:
  // nullopt for unsupported orders.
  static std::optional<FiniteField> of_order(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return add_[index(a, b)]; }
  int mul(int a, int b) const { return mul_[index(a, b)]; }

 private:
  FiniteField(int p, int degree, std::vector<int> modulus);
  std::size_t index(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b); }

  int q_ = 0;
  int p_ = 0;
  std::vector<int> add_;
  std::vector<int> mul_;
};

bool is_prime(int n);
// (p, k) with n = p^k, or nullopt.
std::optional<std::pair<int, int>> prime_power(int n);
bool mols_order_supported(int q);

class LatinSquare {
 public:
  LatinSquare() = default;
  LatinSquare(int order, std::vector<int> cells);

  int order() const { return n_; }
  int at(int row, int col) const { return cells_[static_cast<std::size_t>(row * n_ + col)]; }
  const std::vector<int>& cells() const { return cells_; }

  // Every symbol 0..n-1 exactly once in each row and column.
  bool is_latin() const;

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

 private:
  int n_ = 0;
  std::vector<int> cells_;
};

struct MolsFamily {
  int order = 0;
  std::vector<LatinSquare> squares;
};

// L_k(i, j) = k*i + j over GF(q) for k = 1..count. count <= q - 1 for
// supported prime powers. For other orders only count <= 1 is available
// (the cyclic square (i + j) mod n); no search is attempted, and no pair of
// orthogonal squares exists for orders 2 and 6 at all. Throws InputError.
MolsFamily mols_family(int q, int count);

struct OrthogonalityReport {
  bool orthogonal = true;
  std::optional<std::pair<std::size_t, std::size_t>> squares;  // offending pair
  // Two cells carrying the same ordered symbol pair in those squares.
  std::optional<std::pair<std::pair<int, int>, std::pair<int, int>>> cells;
};

// Throws InputError when squares of different orders are mixed.
OrthogonalityReport check_orthogonal(const MolsFamily& family);

// Optimal edge-clique cover of K_n^m (vertex id = part * n + element) with n^2
// cliques, one vertex per part:
//   clique(a, b) = {(0, a), (1, b)} ∪ {(s, L_{s-2}(a, b)) : 2 <= s < m}.
// Requires 3 <= m <= n + 1 and at least m - 2 pairwise orthogonal squares of
// order n. Throws InputError.
CliqueCover cover_from_mols(int n, int m, const MolsFamily& family);

}  // namespace ecg
