#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace netop {

// Largest vertex count any fibre, permutation or word ambient may use.
inline constexpr std::size_t max_arity = 32;

// An unordered pair of distinct vertices, 0-indexed, with lo < hi.
struct Edge {
  std::uint8_t lo = 0;
  std::uint8_t hi = 1;

  static Edge make(std::size_t a, std::size_t b);
  static Edge one_based(std::size_t i, std::size_t j) { return make(i - 1, j - 1); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);
  // image[j] = sigma(j), 0-indexed.
  static Permutation from_image(const std::vector<std::size_t>& image);
  static Permutation from_one_based(const std::vector<std::size_t>& image);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t j) const { return image_[j]; }
  std::vector<std::size_t> one_based() const;
  bool is_identity() const;

  // Nontrivial cycles in 1-indexed notation, each starting at its least element.
  std::vector<std::vector<std::size_t>> cycles() const;
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> image_;
};

// (sigma o tau)(j) = sigma(tau(j)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation invert(const Permutation& sigma);
Permutation block_sum(const Permutation& sigma, const Permutation& tau);
Permutation block_sum(const std::vector<Permutation>& parts);
// Sends the first m points past the last n: j < m maps to j + n, otherwise j - m.
Permutation block_swap(std::size_t m, std::size_t n);

Edge act_on_edge(const Permutation& sigma, const Edge& e);

// Block permutation on sum(sizes) points for tau acting on k blocks. Block i of
// the result holds the block sizes[tau(i)] of the original; the permutation
// maps a position in the new order to its position in the old one.
Permutation expand_blocks(const Permutation& tau, const std::vector<std::size_t>& sizes);

std::string to_string(const Edge& e);

}  // namespace netop
