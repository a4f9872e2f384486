#pragma once

#include <vector>

#include "error.hpp"

namespace hamiltonia {

// Table-based arithmetic for GF(q), q in {2,3,4,5,7,8,9}.  Field elements are
// encoded 0..q-1 as base-p digit strings of polynomial coefficients (constant
// digit last), with fixed reduction polynomials:
//   GF(4): x^2 = x + 1,  GF(8): x^3 = x + 1,  GF(9): x^2 = 2.
class GaloisField {
 public:
  explicit GaloisField(int q) : q_(q) {
    switch (q) {
      case 2: case 3: case 5: case 7: p_ = q; k_ = 1; break;
      case 4: p_ = 2; k_ = 2; red_ = {1, 1}; break;
      case 8: p_ = 2; k_ = 3; red_ = {1, 1, 0}; break;
      case 9: p_ = 3; k_ = 2; red_ = {2, 0}; break;
      default: fail_parse("unsupported field size " + std::to_string(q));
    }
    add_.assign(static_cast<size_t>(q * q), 0);
    mul_.assign(static_cast<size_t>(q * q), 0);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        add_[static_cast<size_t>(a * q + b)] = add_raw(a, b);
        mul_[static_cast<size_t>(a * q + b)] = mul_raw(a, b);
      }
    inv_.assign(static_cast<size_t>(q), 0);
    for (int a = 1; a < q; ++a)
      for (int b = 1; b < q; ++b)
        if (mul(a, b) == 1) {
          inv_[static_cast<size_t>(a)] = b;
          break;
        }
    for (int g = 2; g < q; ++g) {
      int x = g, steps = 1;
      while (x != 1) {
        x = mul(x, g);
        ++steps;
      }
      if (steps == q - 1) {
        gen_ = g;
        break;
      }
    }
    if (q == 2) gen_ = 1;
  }

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return add_[static_cast<size_t>(a * q_ + b)]; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a * q_ + b)]; }
  int neg(int a) const {
    for (int b = 0; b < q_; ++b)
      if (add(a, b) == 0) return b;
    return 0;
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int inv(int a) const {
    if (a == 0) fail("division by zero in GF(" + std::to_string(q_) + ")");
    return inv_[static_cast<size_t>(a)];
  }
  int generator() const { return gen_; }  // smallest multiplicative generator

 private:
  std::vector<int> digits(int a, int len) const {
    std::vector<int> d(static_cast<size_t>(len), 0);
    for (int i = len - 1; i >= 0; --i) {
      d[static_cast<size_t>(i)] = a % p_;
      a /= p_;
    }
    return d;
  }

  int undigits(const std::vector<int>& d) const {
    int v = 0;
    for (int x : d) v = v * p_ + x;
    return v;
  }

  int add_raw(int a, int b) const {
    auto da = digits(a, k_), db = digits(b, k_);
    for (int i = 0; i < k_; ++i)
      da[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p_;
    return undigits(da);
  }

  // polynomial product, reduced with x^k = red_ (red_ digits are low to high)
  int mul_raw(int a, int b) const {
    auto da = digits(a, k_), db = digits(b, k_);
    std::vector<int> prod(static_cast<size_t>(2 * k_ - 1), 0);  // high degree first
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) {
        size_t deg_pos = static_cast<size_t>(i + j);
        prod[deg_pos] = (prod[deg_pos] +
                         da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) % p_;
      }
    // positions: prod[t] is the coefficient of x^(2k-2-t)
    for (int t = 0; t <= k_ - 2; ++t) {
      int deg = 2 * k_ - 2 - t;
      int c = prod[static_cast<size_t>(t)];
      if (c == 0) continue;
      prod[static_cast<size_t>(t)] = 0;
      for (int r = 0; r < k_; ++r) {  // x^deg = x^(deg-k) * red_
        int target_deg = deg - k_ + r;
        size_t pos = static_cast<size_t>(2 * k_ - 2 - target_deg);
        prod[pos] = (prod[pos] + c * red_[static_cast<size_t>(r)]) % p_;
      }
    }
    std::vector<int> low(prod.end() - k_, prod.end());
    return undigits(low);
  }

  int q_, p_ = 0, k_ = 0, gen_ = 1;
  std::vector<int> red_;  // digits of the reduction value, low degree to high
  std::vector<int> add_, mul_, inv_;
};

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace hamiltonia
