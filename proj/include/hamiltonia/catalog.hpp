#pragma once

#include <array>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gf.hpp"
#include "perm_group.hpp"

namespace hamiltonia {

// A named group: the label appears in reports, the ref is a group reference
// string understood by parse_group_ref that rebuilds the same construction.
struct CatalogEntry {
  std::string label;
  std::string ref;
  PermGroup group;
};

inline PermGroup build_cyclic(int n, const Limits& lim = default_limits()) {
  if (n < 1) fail_parse("cyclic group order must be >= 1");
  if (n == 1) return PermGroup(1, {}, lim);
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = (i + 1) % n;
  return PermGroup(n, {Permutation(std::move(img))}, lim);
}

// Dihedral group given by its order (even, >= 4): symmetries of an m-gon for
// order 2m >= 6, the Klein four-group on two blocks for order 4.
inline PermGroup build_dihedral(int order, const Limits& lim = default_limits()) {
  if (order < 4 || order % 2 != 0) fail_parse("dihedral group order must be even and >= 4");
  int m = order / 2;
  if (m == 2)
    return PermGroup(4, {parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)}, lim);
  std::vector<int> rot(static_cast<size_t>(m)), flip(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    rot[static_cast<size_t>(i)] = (i + 1) % m;
    flip[static_cast<size_t>(i)] = (m - i) % m;
  }
  return PermGroup(m, {Permutation(std::move(rot)), Permutation(std::move(flip))}, lim);
}

// Dicyclic group of order 4n (n >= 2; n = 2 is the quaternion group), as the
// right regular action of <a, b | a^(2n) = 1, b^2 = a^n, b^-1 a b = a^-1>.
// Element a^i b^j is the point i + 2n*j.
inline PermGroup build_dicyclic(int n, const Limits& lim = default_limits()) {
  if (n < 2) fail_parse("dicyclic parameter must be >= 2");
  int two_n = 2 * n, deg = 4 * n;
  std::vector<int> ra(static_cast<size_t>(deg)), rb(static_cast<size_t>(deg));
  for (int i = 0; i < two_n; ++i) {
    ra[static_cast<size_t>(i)] = (i + 1) % two_n;                  // (a^i) * a
    ra[static_cast<size_t>(i + two_n)] = (i - 1 + two_n) % two_n + two_n;  // (a^i b) * a
    rb[static_cast<size_t>(i)] = i + two_n;                        // (a^i) * b
    rb[static_cast<size_t>(i + two_n)] = (i + n) % two_n;          // (a^i b) * b
  }
  return PermGroup(deg, {Permutation(std::move(ra)), Permutation(std::move(rb))}, lim);
}

inline PermGroup build_symmetric(int n, const Limits& lim = default_limits()) {
  if (n < 1) fail_parse("symmetric group degree must be >= 1");
  if (n == 1) return PermGroup(1, {}, lim);
  std::vector<Permutation> gens{parse_cycles("(1 2)", n)};
  if (n >= 3) {
    std::vector<int> cyc(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<size_t>(i)] = (i + 1) % n;
    gens.emplace_back(std::move(cyc));
  }
  return PermGroup(n, gens, lim);
}

inline PermGroup build_alternating(int n, const Limits& lim = default_limits()) {
  if (n < 1) fail_parse("alternating group degree must be >= 1");
  if (n <= 2) return PermGroup(std::max(n, 1), {}, lim);
  std::vector<Permutation> gens;
  for (int k = 3; k <= n; ++k)
    gens.push_back(parse_cycles("(1 2 " + std::to_string(k) + ")", n));
  return PermGroup(n, gens, lim);
}

inline PermGroup build_elementary_abelian(int p, int k, const Limits& lim = default_limits()) {
  if (!is_prime(p)) fail_parse("elementary abelian base must be prime");
  if (k < 1) fail_parse("elementary abelian rank must be >= 1");
  int deg = p * k;
  std::vector<Permutation> gens;
  for (int block = 0; block < k; ++block) {
    std::vector<int> img(static_cast<size_t>(deg));
    std::iota(img.begin(), img.end(), 0);
    for (int i = 0; i < p; ++i)
      img[static_cast<size_t>(block * p + i)] = block * p + (i + 1) % p;
    gens.emplace_back(std::move(img));
  }
  return PermGroup(deg, gens, lim);
}

// Z_(p^m) : Z_(q^n) with the action of multiplicative order k: the canonical
// automorphism multiplies by the smallest unit a of Z_(p^m) whose
// multiplicative order is exactly k.  Realized as the right regular action on
// p^m * q^n points; element (u, j) is the point u + p^m * j.
inline PermGroup build_semidirect_cyclic(int p, int m, int q, int n, int k,
                                         const Limits& lim = default_limits()) {
  if (!is_prime(p) || !is_prime(q)) fail_parse("semidirect parameters p, q must be prime");
  if (p == q) fail_parse("semidirect parameters p, q must be distinct primes");
  if (m < 1 || n < 1 || k < 1) fail_parse("semidirect exponents and action order must be >= 1");
  long long P = 1, Q = 1;
  for (int i = 0; i < m; ++i) {
    P *= p;
    if (P > lim.degree_cap) fail_cap("semidirect subgroup order exceeds degree cap");
  }
  for (int i = 0; i < n; ++i) {
    Q *= q;
    if (Q > lim.degree_cap) fail_cap("semidirect subgroup order exceeds degree cap");
  }
  if (Q % k != 0) fail_parse("semidirect action order must divide q^n");
  long long a = -1;
  for (long long cand = 1; cand < P; ++cand) {
    if (std::gcd(cand, P) != 1) continue;
    long long x = cand % P;
    int ord = 1;
    while (x != 1) {
      x = x * cand % P;
      ++ord;
    }
    if (ord == k) {
      a = cand;
      break;
    }
  }
  if (a < 0)
    fail_parse("no automorphism of order " + std::to_string(k) + " on Z_" + std::to_string(P));
  if (P * Q > lim.degree_cap) fail_cap("semidirect order exceeds degree cap");
  int deg = static_cast<int>(P * Q);
  std::vector<long long> apow(static_cast<size_t>(Q));
  apow[0] = 1;
  for (long long j = 1; j < Q; ++j) apow[static_cast<size_t>(j)] = apow[static_cast<size_t>(j - 1)] * a % P;
  auto idx = [&](long long u, long long j) { return static_cast<int>(u + P * j); };
  std::vector<int> ga(static_cast<size_t>(deg)), gb(static_cast<size_t>(deg));
  for (long long u = 0; u < P; ++u)
    for (long long j = 0; j < Q; ++j) {
      ga[static_cast<size_t>(idx(u, j))] = idx((u + apow[static_cast<size_t>(j)]) % P, j);
      gb[static_cast<size_t>(idx(u, j))] = idx(u, (j + 1) % Q);
    }
  return PermGroup(deg, {Permutation(std::move(ga)), Permutation(std::move(gb))}, lim);
}

enum class MatrixKind { GL, SL, PSL, PGL };

// 2x2 matrix groups over GF(q), q in {2,3,4,5,7,8,9}.  SL and GL act on the
// q^2-1 nonzero row vectors (lexicographic order); PSL and PGL act on the
// projective line, point t < q meaning [t : 1] and point q meaning [1 : 0].
inline PermGroup build_matrix_group(MatrixKind kind, int dim, int q,
                                    const Limits& lim = default_limits()) {
  if (dim != 2) fail_parse("only 2x2 matrix groups are supported");
  GaloisField F(q);
  using Mat = std::array<int, 4>;  // [[a, b], [c, d]] row-major, row vectors act on the right
  std::vector<Mat> mats;
  for (int lam = 1; lam < q; ++lam) {
    mats.push_back({1, lam, 0, 1});
    mats.push_back({1, 0, lam, 1});
  }
  bool projective = kind == MatrixKind::PSL || kind == MatrixKind::PGL;
  if ((kind == MatrixKind::GL || kind == MatrixKind::PGL) && q > 2)
    mats.push_back({F.generator(), 0, 0, 1});

  int degree = projective ? q + 1 : q * q - 1;
  std::vector<Permutation> gens;
  for (const Mat& M : mats) {
    std::vector<int> img(static_cast<size_t>(degree));
    if (!projective) {
      for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
          if (x == 0 && y == 0) continue;
          int nx = F.add(F.mul(x, M[0]), F.mul(y, M[2]));
          int ny = F.add(F.mul(x, M[1]), F.mul(y, M[3]));
          img[static_cast<size_t>(x * q + y - 1)] = nx * q + ny - 1;
        }
    } else {
      for (int t = 0; t <= q; ++t) {
        int x = t < q ? t : 1, y = t < q ? 1 : 0;
        int nx = F.add(F.mul(x, M[0]), F.mul(y, M[2]));
        int ny = F.add(F.mul(x, M[1]), F.mul(y, M[3]));
        img[static_cast<size_t>(t)] = ny != 0 ? F.mul(nx, F.inv(ny)) : q;
      }
    }
    gens.emplace_back(std::move(img));
  }
  PermGroup g(degree, gens, lim);
  long long qq = q;
  long long sl = qq * (qq * qq - 1);
  long long expect = 0;
  switch (kind) {
    case MatrixKind::SL: expect = sl; break;
    case MatrixKind::GL: expect = (qq * qq - 1) * (qq * qq - qq); break;
    case MatrixKind::PSL: expect = sl / std::gcd<long long>(2, qq - 1); break;
    case MatrixKind::PGL: expect = sl; break;
  }
  if (g.order() != expect) fail("internal error: matrix group order mismatch");
  return g;
}

inline PermGroup build_direct_product(const PermGroup& a, const PermGroup& b,
                                      const Limits& lim = default_limits()) {
  int da = a.degree(), db = b.degree(), deg = da + db;
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) {
    std::vector<int> img(static_cast<size_t>(deg));
    for (int i = 0; i < da; ++i) img[static_cast<size_t>(i)] = g(i);
    for (int i = 0; i < db; ++i) img[static_cast<size_t>(da + i)] = da + i;
    gens.emplace_back(std::move(img));
  }
  for (const Permutation& g : b.generators()) {
    std::vector<int> img(static_cast<size_t>(deg));
    for (int i = 0; i < da; ++i) img[static_cast<size_t>(i)] = i;
    for (int i = 0; i < db; ++i) img[static_cast<size_t>(da + i)] = da + g(i);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(deg, gens, lim);
}

// ---------------------------------------------------------------------------
// Group files.  Line-oriented text: `#` starts a full-line comment, blank
// lines are skipped, directives are `name <label>`, `degree <n>` (required,
// before any generator) and `gen <cycle text>` (one per generator).

inline PermGroup parse_group_stream(std::istream& in, std::string* name_out,
                                    const Limits& lim = default_limits()) {
  int degree = -1;
  std::vector<Permutation> gens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    auto rest_of = [&ls] {
      std::string rest;
      std::getline(ls, rest);
      size_t b = rest.find_first_not_of(" \t");
      size_t e = rest.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : rest.substr(b, e - b + 1);
    };
    if (word == "name") {
      if (name_out) *name_out = rest_of();
    } else if (word == "degree") {
      if (degree >= 0) fail_parse("line " + std::to_string(lineno) + ": duplicate degree");
      if (!(ls >> degree) || degree < 1)
        fail_parse("line " + std::to_string(lineno) + ": bad degree");
    } else if (word == "gen") {
      if (degree < 0)
        fail_parse("line " + std::to_string(lineno) + ": gen before degree");
      gens.push_back(parse_cycles(rest_of(), degree));
    } else {
      fail_parse("line " + std::to_string(lineno) + ": unknown directive '" + word + "'");
    }
  }
  if (degree < 0) fail_parse("group file has no degree line");
  return PermGroup(degree, gens, lim);
}

inline void write_group_stream(std::ostream& out, const PermGroup& g, const std::string& name) {
  if (!name.empty()) out << "name " << name << "\n";
  out << "degree " << g.degree() << "\n";
  for (const Permutation& p : g.generators()) out << "gen " << to_cycles(p) << "\n";
}

inline CatalogEntry load_group_file(const std::string& path, const Limits& lim = default_limits()) {
  std::ifstream in(path);
  if (!in) fail_parse("cannot open group file: " + path);
  std::string name;
  PermGroup g = parse_group_stream(in, &name, lim);
  if (name.empty()) name = std::filesystem::path(path).stem().string();
  return CatalogEntry{name, path, std::move(g)};
}

inline void save_group_file(const std::string& path, const PermGroup& g, const std::string& name) {
  std::ofstream out(path);
  if (!out) fail("cannot write group file: " + path);
  write_group_stream(out, g, name);
}

// ---------------------------------------------------------------------------
// Group references:
//   cyclic:n | dihedral:n | dicyclic:n | sym:n | alt:n
//   sl:2:q | psl:2:q | pgl:2:q
//   semidirect:p^m:q^n:k   (plain p means p^1)
//   prod:<ref>,<ref>
//   anything containing '/' or ending in .grp is loaded as a group file

namespace detail {

inline int parse_ref_int(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    fail_parse("bad " + what + " '" + s + "' in group reference");
  long long v = 0;
  for (char c : s) {
    v = v * 10 + (c - '0');
    if (v > 1'000'000'000) fail_parse("oversized " + what + " in group reference");
  }
  return static_cast<int>(v);
}

inline std::pair<int, int> parse_prime_power(const std::string& s) {
  size_t caret = s.find('^');
  if (caret == std::string::npos) return {parse_ref_int(s, "prime"), 1};
  return {parse_ref_int(s.substr(0, caret), "prime"),
          parse_ref_int(s.substr(caret + 1), "exponent")};
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

}  // namespace detail

inline CatalogEntry parse_group_ref(const std::string& ref, const Limits& lim = default_limits());

namespace detail {

inline CatalogEntry parse_builtin_ref(const std::string& ref, const Limits& lim) {
  auto parts = split(ref, ':');
  const std::string& head = parts[0];
  auto want = [&](size_t n) {
    if (parts.size() != n)
      fail_parse("group reference '" + ref + "' takes " + std::to_string(n - 1) + " parameter(s)");
  };
  if (head == "cyclic") {
    want(2);
    int n = parse_ref_int(parts[1], "order");
    return {"C" + parts[1], ref, build_cyclic(n, lim)};
  }
  if (head == "dihedral") {
    want(2);
    int n = parse_ref_int(parts[1], "order");
    return {"D" + parts[1], ref, build_dihedral(n, lim)};
  }
  if (head == "dicyclic") {
    want(2);
    int n = parse_ref_int(parts[1], "parameter");
    return {"Q" + std::to_string(4 * n), ref, build_dicyclic(n, lim)};
  }
  if (head == "sym") {
    want(2);
    int n = parse_ref_int(parts[1], "degree");
    return {"S" + parts[1], ref, build_symmetric(n, lim)};
  }
  if (head == "alt") {
    want(2);
    int n = parse_ref_int(parts[1], "degree");
    return {"A" + parts[1], ref, build_alternating(n, lim)};
  }
  if (head == "sl" || head == "psl" || head == "pgl") {
    want(3);
    if (parts[1] != "2") fail_parse("only dimension 2 matrix groups are supported");
    int q = parse_ref_int(parts[2], "field size");
    MatrixKind kind = head == "sl" ? MatrixKind::SL
                     : head == "psl" ? MatrixKind::PSL
                                     : MatrixKind::PGL;
    std::string prefix = head == "sl" ? "SL" : head == "psl" ? "PSL" : "PGL";
    return {prefix + "(2," + parts[2] + ")", ref, build_matrix_group(kind, 2, q, lim)};
  }
  if (head == "semidirect") {
    want(4);
    auto [p, m] = parse_prime_power(parts[1]);
    auto [q, n] = parse_prime_power(parts[2]);
    int k = parse_ref_int(parts[3], "action order");
    PermGroup g = build_semidirect_cyclic(p, m, q, n, k, lim);  // validates sizes
    long long P = 1, Q = 1;
    for (int i = 0; i < m; ++i) P *= p;
    for (int i = 0; i < n; ++i) Q *= q;
    std::string label = "C" + std::to_string(P) + ":C" + std::to_string(Q) + "@" + parts[3];
    return {label, ref, std::move(g)};
  }
  fail_parse("unknown group reference '" + ref + "'");
}

}  // namespace detail

inline CatalogEntry parse_group_ref(const std::string& ref, const Limits& lim) {
  if (ref.empty()) fail_parse("empty group reference");
  if (ref.find('/') != std::string::npos ||
      (ref.size() > 4 && ref.compare(ref.size() - 4, 4, ".grp") == 0))
    return load_group_file(ref, lim);
  if (ref.rfind("prod:", 0) == 0) {
    std::string rest = ref.substr(5);
    for (size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] != ',') continue;
      try {
        CatalogEntry left = parse_group_ref(rest.substr(0, i), lim);
        CatalogEntry right = parse_group_ref(rest.substr(i + 1), lim);
        return {left.label + " x " + right.label, ref,
                build_direct_product(left.group, right.group, lim)};
      } catch (const parse_error&) {
        continue;  // comma belonged to a nested product; try the next one
      }
    }
    fail_parse("cannot split product reference '" + ref + "'");
  }
  return detail::parse_builtin_ref(ref, lim);
}

// ---------------------------------------------------------------------------
// The default catalog: every group family the deciders and claim checkers are
// exercised against, ordered by (order, label).  Labels are construction
// names; several constructions realize the same isomorphism class on purpose.

inline std::vector<CatalogEntry> default_catalog(const Limits& lim = default_limits()) {
  std::vector<CatalogEntry> out;
  auto add_ref = [&](const std::string& ref) { out.push_back(parse_group_ref(ref, lim)); };
  auto add = [&](const std::string& label, const std::string& ref, PermGroup g) {
    out.push_back(CatalogEntry{label, ref, std::move(g)});
  };
  for (int n = 1; n <= 30; ++n) add_ref("cyclic:" + std::to_string(n));
  for (int n = 6; n <= 30; n += 2) add_ref("dihedral:" + std::to_string(n));
  for (int n = 2; n <= 7; ++n) add_ref("dicyclic:" + std::to_string(n));
  add_ref("sym:3");
  add_ref("sym:4");
  add_ref("sym:5");
  add_ref("alt:4");
  add_ref("alt:5");
  add("C2^2", "prod:cyclic:2,cyclic:2", build_elementary_abelian(2, 2, lim));
  add("C2^3", "prod:cyclic:2,prod:cyclic:2,cyclic:2", build_elementary_abelian(2, 3, lim));
  add("C2^4", "prod:cyclic:2,prod:cyclic:2,prod:cyclic:2,cyclic:2",
      build_elementary_abelian(2, 4, lim));
  add("C3^2", "prod:cyclic:3,cyclic:3", build_elementary_abelian(3, 2, lim));
  add("C3^3", "prod:cyclic:3,prod:cyclic:3,cyclic:3", build_elementary_abelian(3, 3, lim));
  add("C5^2", "prod:cyclic:5,cyclic:5", build_elementary_abelian(5, 2, lim));
  for (const char* ref : {"semidirect:3:2:2", "semidirect:3:2^2:2", "semidirect:3:2^3:2",
                          "semidirect:3^2:2:2", "semidirect:5:2:2", "semidirect:5:2^2:2",
                          "semidirect:5:2^2:4", "semidirect:5^2:2^2:2", "semidirect:7:2:2",
                          "semidirect:7:2^2:2", "semidirect:7:3:3", "semidirect:11:2:2",
                          "semidirect:13:2:2"})
    add_ref(ref);
  add_ref("sl:2:3");
  add_ref("sl:2:5");
  add_ref("psl:2:7");
  add_ref("prod:cyclic:2,alt:5");
  add_ref("prod:sym:3,cyclic:3");
  add_ref("prod:alt:4,cyclic:2");
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.label < b.label;
  });
  return out;
}

}  // namespace hamiltonia
