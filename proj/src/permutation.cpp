#include "netop/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "netop/error.hpp"

namespace netop {

namespace {

void check_size(std::size_t n) {
  if (n > max_arity) {
    throw arity_error("permutation size " + std::to_string(n) + " exceeds " +
                      std::to_string(max_arity));
  }
}

}  // namespace

Edge Edge::make(std::size_t a, std::size_t b) {
  if (a == b) throw domain_error("edge endpoints must differ");
  if (a >= max_arity || b >= max_arity) throw domain_error("edge endpoint out of range");
  if (a > b) std::swap(a, b);
  return Edge{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)};
}

Permutation Permutation::identity(std::size_t n) {
  check_size(n);
  Permutation p;
  p.image_.resize(n);
  std::iota(p.image_.begin(), p.image_.end(), std::uint8_t{0});
  return p;
}

Permutation Permutation::from_image(const std::vector<std::size_t>& image) {
  check_size(image.size());
  std::vector<bool> seen(image.size(), false);
  Permutation p;
  p.image_.reserve(image.size());
  for (std::size_t v : image) {
    if (v >= image.size() || seen[v]) throw domain_error("image is not a bijection");
    seen[v] = true;
    p.image_.push_back(static_cast<std::uint8_t>(v));
  }
  return p;
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& image) {
  std::vector<std::size_t> zero;
  zero.reserve(image.size());
  for (std::size_t v : image) {
    if (v == 0) throw domain_error("one-based image contains 0");
    zero.push_back(v - 1);
  }
  return from_image(zero);
}

std::vector<std::size_t> Permutation::one_based() const {
  std::vector<std::size_t> out;
  out.reserve(image_.size());
  for (auto v : image_) out.push_back(std::size_t{v} + 1);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < image_.size(); ++j) {
    if (image_[j] != j) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = start; !seen[j]; j = image_[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t j = 0; j < image_.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(image_[j] + 1);
  }
  return s + "]";
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) {
    throw arity_error("compose: sizes " + std::to_string(sigma.size()) + " and " +
                      std::to_string(tau.size()));
  }
  std::vector<std::size_t> image(sigma.size());
  for (std::size_t j = 0; j < image.size(); ++j) image[j] = sigma(tau(j));
  return Permutation::from_image(image);
}

Permutation invert(const Permutation& sigma) {
  std::vector<std::size_t> image(sigma.size());
  for (std::size_t j = 0; j < image.size(); ++j) image[sigma(j)] = j;
  return Permutation::from_image(image);
}

Permutation block_sum(const Permutation& sigma, const Permutation& tau) {
  const std::size_t m = sigma.size();
  std::vector<std::size_t> image(m + tau.size());
  for (std::size_t j = 0; j < m; ++j) image[j] = sigma(j);
  for (std::size_t j = 0; j < tau.size(); ++j) image[m + j] = tau(j) + m;
  return Permutation::from_image(image);
}

Permutation block_sum(const std::vector<Permutation>& parts) {
  Permutation out;
  for (const auto& p : parts) out = block_sum(out, p);
  return out;
}

Permutation block_swap(std::size_t m, std::size_t n) {
  check_size(m + n);
  std::vector<std::size_t> image(m + n);
  for (std::size_t j = 0; j < m + n; ++j) image[j] = j < m ? j + n : j - m;
  return Permutation::from_image(image);
}

Edge act_on_edge(const Permutation& sigma, const Edge& e) {
  if (e.hi >= sigma.size()) {
    throw domain_error("edge " + to_string(e) + " outside permutation of size " +
                       std::to_string(sigma.size()));
  }
  return Edge::make(sigma(e.lo), sigma(e.hi));
}

Permutation expand_blocks(const Permutation& tau, const std::vector<std::size_t>& sizes) {
  if (tau.size() != sizes.size()) {
    throw arity_error("expand_blocks: permutation on " + std::to_string(tau.size()) +
                      " slots, profile has " + std::to_string(sizes.size()));
  }
  std::vector<std::size_t> offset(sizes.size(), 0);
  for (std::size_t i = 1; i < sizes.size(); ++i) offset[i] = offset[i - 1] + sizes[i - 1];
  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const std::size_t old = tau(i);
    for (std::size_t r = 0; r < sizes[old]; ++r) image.push_back(offset[old] + r);
  }
  return Permutation::from_image(image);
}

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.lo + 1) + "," + std::to_string(e.hi + 1) + "}";
}

}  // namespace netop
