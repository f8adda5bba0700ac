// Copyright 2026 The entwit authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ENTWIT_HILBERT_HPP
#define ENTWIT_HILBERT_HPP

#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "entwit/common.hpp"

// Tensor-product index arithmetic for mixed-dimension n-partite systems.
// Sites are numbered 1..n throughout the public interface; flat indices are
// 0-based and row-major (site 1 most significant).

namespace entwit {

// Ordered local dimensions d_1..d_n of an n-partite system.
class DimVec {
 public:
  explicit DimVec(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2) {
      throw DomainError("DimVec: need at least 2 sites, got " +
                        std::to_string(dims_.size()));
    }
    total_ = 1;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      const int d = dims_[k];
      if (d < 2) {
        throw DomainError("DimVec: local dimension at site " +
                          std::to_string(k + 1) + " must be >= 2, got " +
                          std::to_string(d));
      }
      if (total_ > std::numeric_limits<std::int64_t>::max() / d) {
        throw CapacityError("DimVec: total dimension overflows 64-bit range");
      }
      total_ *= d;
    }
  }

  static DimVec uniform(int n, int d) {
    if (n < 2) throw DomainError("DimVec: need n >= 2, got " + std::to_string(n));
    return DimVec(std::vector<int>(static_cast<std::size_t>(n), d));
  }

  static DimVec qubits(int n) { return uniform(n, 2); }

  int sites() const { return static_cast<int>(dims_.size()); }

  // Local dimension of a 1-based site.
  int local_dim(int site) const {
    check_site(site);
    return dims_[static_cast<std::size_t>(site - 1)];
  }

  std::int64_t total_dim() const { return total_; }

  const std::vector<int>& dims() const { return dims_; }

  bool all_qubits() const {
    for (int d : dims_) {
      if (d != 2) return false;
    }
    return true;
  }

  void check_site(int site) const {
    if (site < 1 || site > sites()) {
      throw DomainError("site index " + std::to_string(site) +
                        " out of range 1.." + std::to_string(sites()));
    }
  }

  friend bool operator==(const DimVec& a, const DimVec& b) {
    return a.dims_ == b.dims_;
  }
  friend bool operator!=(const DimVec& a, const DimVec& b) { return !(a == b); }

 private:
  std::vector<int> dims_;
  std::int64_t total_ = 0;
};

// Product-basis label i_1..i_n, one digit per site.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> digits) : digits_(std::move(digits)) {}

  int sites() const { return static_cast<int>(digits_.size()); }

  int digit(int site) const { return digits_[static_cast<std::size_t>(site - 1)]; }
  void set_digit(int site, int value) {
    digits_[static_cast<std::size_t>(site - 1)] = value;
  }

  const std::vector<int>& digits() const { return digits_; }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < digits_.size(); ++k) {
      if (k > 0) os << ',';
      os << digits_[k];
    }
    os << ']';
    return os.str();
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.digits_ == b.digits_;
  }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) {
    return !(a == b);
  }
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    return a.digits_ < b.digits_;
  }

 private:
  std::vector<int> digits_;
};

// Per-site level pair (x_l, y_l) with x_l != y_l. These are the two local
// levels probed by the excitation labels phi_0, phi_i, phi_ij.
class LocalPair {
 public:
  LocalPair(std::vector<int> x, std::vector<int> y)
      : x_(std::move(x)), y_(std::move(y)) {
    if (x_.size() != y_.size() || x_.empty()) {
      throw ShapeError("LocalPair: x and y level lists must match and be non-empty");
    }
    for (std::size_t k = 0; k < x_.size(); ++k) {
      if (x_[k] < 0 || y_[k] < 0) {
        throw DomainError("LocalPair: negative level at site " +
                          std::to_string(k + 1));
      }
      if (x_[k] == y_[k]) {
        throw DomainError("LocalPair: x and y coincide at site " +
                          std::to_string(k + 1));
      }
    }
  }

  // The default pair |x> = |0>, |y> = |1> at every site.
  static LocalPair standard(int n) { return uniform(n, 0, 1); }

  static LocalPair uniform(int n, int x, int y) {
    if (n < 2) throw DomainError("LocalPair: need n >= 2");
    return LocalPair(std::vector<int>(static_cast<std::size_t>(n), x),
                     std::vector<int>(static_cast<std::size_t>(n), y));
  }

  // Site-wise pair (phi1_l, phi2_l); the two labels must differ at every site.
  static LocalPair from_labels(const MultiIndex& phi1, const MultiIndex& phi2) {
    if (phi1.sites() != phi2.sites()) {
      throw ShapeError("LocalPair: labels have different site counts");
    }
    for (int l = 1; l <= phi1.sites(); ++l) {
      if (phi1.digit(l) == phi2.digit(l)) {
        throw DomainError("LocalPair: labels agree at site " + std::to_string(l));
      }
    }
    return LocalPair(phi1.digits(), phi2.digits());
  }

  int sites() const { return static_cast<int>(x_.size()); }
  int x(int site) const { return x_[static_cast<std::size_t>(site - 1)]; }
  int y(int site) const { return y_[static_cast<std::size_t>(site - 1)]; }
  const std::vector<int>& x_levels() const { return x_; }
  const std::vector<int>& y_levels() const { return y_; }

  // True when every site carries the same (x, y) pair, the construction used
  // in the source criteria; per-site pairs are an extension.
  bool uniform_levels() const {
    for (std::size_t k = 1; k < x_.size(); ++k) {
      if (x_[k] != x_[0] || y_[k] != y_[0]) return false;
    }
    return true;
  }

  void check_compatible(const DimVec& dims) const {
    if (sites() != dims.sites()) {
      throw ShapeError("LocalPair: expected " + std::to_string(dims.sites()) +
                       " sites, got " + std::to_string(sites()));
    }
    for (int l = 1; l <= sites(); ++l) {
      if (x(l) >= dims.local_dim(l) || y(l) >= dims.local_dim(l)) {
        throw DomainError("LocalPair: level out of range at site " +
                          std::to_string(l));
      }
    }
  }

 private:
  std::vector<int> x_, y_;
};

// Bitmask over sites: bit (l-1) set means site l belongs to the subset.
inline std::uint64_t site_mask(const std::vector<int>& sites, int n) {
  std::uint64_t mask = 0;
  for (int l : sites) {
    if (l < 1 || l > n) {
      throw DomainError("site index " + std::to_string(l) + " out of range 1.." +
                        std::to_string(n));
    }
    mask |= std::uint64_t{1} << (l - 1);
  }
  return mask;
}

inline std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Row-major mixed-radix flat index: sum_l i_l * prod_{k>l} d_k.
inline std::int64_t flat_index(const MultiIndex& m, const DimVec& d) {
  if (m.sites() != d.sites()) {
    throw ShapeError("flat_index: label has " + std::to_string(m.sites()) +
                     " digits for " + std::to_string(d.sites()) + " sites");
  }
  std::int64_t flat = 0;
  for (int l = 1; l <= d.sites(); ++l) {
    const int digit = m.digit(l);
    if (digit < 0 || digit >= d.local_dim(l)) {
      throw DomainError("flat_index: digit " + std::to_string(digit) +
                        " out of range at site " + std::to_string(l));
    }
    flat = flat * d.local_dim(l) + digit;
  }
  return flat;
}

inline MultiIndex unflatten(std::int64_t flat, const DimVec& d) {
  if (flat < 0 || flat >= d.total_dim()) {
    throw DomainError("unflatten: flat index " + std::to_string(flat) +
                      " out of range 0.." + std::to_string(d.total_dim() - 1));
  }
  std::vector<int> digits(static_cast<std::size_t>(d.sites()));
  for (int l = d.sites(); l >= 1; --l) {
    const int dl = d.local_dim(l);
    digits[static_cast<std::size_t>(l - 1)] = static_cast<int>(flat % dl);
    flat /= dl;
  }
  return MultiIndex(std::move(digits));
}

// Label with digit y_l on the excited sites and x_l elsewhere. The empty set
// gives phi_0, {i} gives phi_i, {i,j} gives phi_ij.
inline MultiIndex excitation_label(const DimVec& d, const LocalPair& lp,
                                   std::uint64_t excited_mask) {
  lp.check_compatible(d);
  if (excited_mask > full_mask(d.sites())) {
    throw DomainError("excitation_label: mask addresses sites beyond n");
  }
  std::vector<int> digits(static_cast<std::size_t>(d.sites()));
  for (int l = 1; l <= d.sites(); ++l) {
    const bool excited = (excited_mask >> (l - 1)) & 1;
    digits[static_cast<std::size_t>(l - 1)] = excited ? lp.y(l) : lp.x(l);
  }
  return MultiIndex(std::move(digits));
}

inline MultiIndex excitation_label(const DimVec& d, const LocalPair& lp,
                                   const std::vector<int>& excited_sites) {
  return excitation_label(d, lp, site_mask(excited_sites, d.sites()));
}

// Exchange the digits of a and b on the subset A: a' carries b's digits on A
// and a's elsewhere, b' is the complement. A = full set swaps the labels.
inline std::pair<MultiIndex, MultiIndex> subset_swap_label(
    const MultiIndex& a, const MultiIndex& b, std::uint64_t mask) {
  if (a.sites() != b.sites()) {
    throw ShapeError("subset_swap_label: labels have different site counts");
  }
  if (mask > full_mask(a.sites())) {
    throw DomainError("subset_swap_label: mask addresses sites beyond n");
  }
  MultiIndex a2 = a;
  MultiIndex b2 = b;
  for (int l = 1; l <= a.sites(); ++l) {
    if ((mask >> (l - 1)) & 1) {
      a2.set_digit(l, b.digit(l));
      b2.set_digit(l, a.digit(l));
    }
  }
  return {std::move(a2), std::move(b2)};
}

inline std::pair<MultiIndex, MultiIndex> subset_swap_label(
    const MultiIndex& a, const MultiIndex& b, const std::vector<int>& sites) {
  return subset_swap_label(a, b, site_mask(sites, a.sites()));
}

}  // namespace entwit

#endif
