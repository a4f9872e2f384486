#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace hamiltonia {

// Permutation of {0, ..., degree-1} stored as an image map.  Composition is
// left to right: (a * b) sends i to b(a(i)).  Text I/O uses 1-based points.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int degree) : img_(static_cast<size_t>(degree)) {
    if (degree < 0) fail("negative permutation degree");
    std::iota(img_.begin(), img_.end(), 0);
  }

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
        fail("image map is not a permutation");
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int point) const { return img_[static_cast<size_t>(point)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
    Permutation p;
    p.img_ = std::move(inv);
    return p;
  }

  int smallest_moved_point() const {  // -1 for the identity
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i) return i;
    return -1;
  }

  std::vector<int> moved_points() const {
    std::vector<int> pts;
    for (int i = 0; i < degree(); ++i)
      if (img_[static_cast<size_t>(i)] != i) pts.push_back(i);
    return pts;
  }

  std::int64_t order() const {
    std::vector<char> seen(img_.size(), 0);
    std::int64_t ord = 1;
    for (int i = 0; i < degree(); ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      int len = 0;
      for (int j = i; !seen[static_cast<size_t>(j)]; j = img_[static_cast<size_t>(j)]) {
        seen[static_cast<size_t>(j)] = 1;
        ++len;
      }
      ord = std::lcm(ord, static_cast<std::int64_t>(len));
    }
    return ord;
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) fail("degree mismatch in composition");
    std::vector<int> img(a.img_.size());
    for (int i = 0; i < a.degree(); ++i)
      img[static_cast<size_t>(i)] = b.img_[static_cast<size_t>(a.img_[static_cast<size_t>(i)])];
    Permutation p;
    p.img_ = std::move(img);
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

// Canonical cycle text: cycles ordered by smallest moved point, each cycle
// rotated to start at its smallest point, fixed points omitted, "()" for the
// identity.  Points are 1-based.
inline std::string to_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(static_cast<size_t>(p.degree()), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<size_t>(i)] || p(i) == i) continue;
    out += '(';
    for (int j = i; !seen[static_cast<size_t>(j)]; j = p(j)) {
      seen[static_cast<size_t>(j)] = 1;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// Accepts canonical and non-canonical cycle text; rejects out-of-range and
// repeated points, unbalanced parentheses and stray characters.
inline Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 0) fail_parse("negative degree");
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(static_cast<size_t>(degree), 0);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) fail_parse("empty cycle text");
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(') fail_parse("expected '(' in cycle text: " + text);
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (pos == text.size()) fail_parse("unbalanced '(' in cycle text: " + text);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail_parse("unexpected character in cycle text: " + text);
      long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > degree) fail_parse("point out of range in cycle text: " + text);
        ++pos;
      }
      if (v < 1) fail_parse("points are 1-based in cycle text: " + text);
      int pt = static_cast<int>(v - 1);
      if (used[static_cast<size_t>(pt)]) fail_parse("repeated point in cycle text: " + text);
      used[static_cast<size_t>(pt)] = 1;
      cycle.push_back(pt);
    }
    saw_cycle = true;
    for (size_t k = 0; k + 1 < cycle.size(); ++k) img[static_cast<size_t>(cycle[k])] = cycle[k + 1];
    if (cycle.size() > 1) img[static_cast<size_t>(cycle.back())] = cycle.front();
    skip_ws();
  }
  if (!saw_cycle) fail_parse("empty cycle text");
  return Permutation(std::move(img));
}

}  // namespace hamiltonia
