#include "vcyc/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "vcyc/errors.hpp"

namespace vcyc::catalog {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {  // (p∘q)(i) = p(q(i))
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

std::string cycle_label(const Perm& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    for (std::size_t j = i; !done[j]; j = p[j]) {
      done[j] = 1;
      if (out.back() != '(') out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup permutation_group(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elements{id};
  std::map<Perm, std::size_t> seen{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : gens) {
      Perm next = compose(elements[i], g);
      if (seen.emplace(next, 0).second) elements.push_back(std::move(next));
    }
  std::sort(elements.begin(), elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) seen[elements[i]] = i;
  const std::size_t n = elements.size();
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(cycle_label(elements[i]));
    for (std::size_t j = 0; j < n; ++j)
      rows[i][j] = static_cast<Elem>(seen.at(compose(elements[i], elements[j])));
  }
  return FiniteGroup::from_table(std::move(rows), std::move(labels));
}

std::string normalize(std::string_view raw) {
  std::string s;
  for (char c : raw) {
    if (c == '/' || c == '_' || c == ' ') continue;
    s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  // "×" is UTF-8 0xC3 0x97.
  for (std::size_t pos; (pos = s.find("\xC3\x97")) != std::string::npos;) s.replace(pos, 2, "X");
  return s;
}

}  // namespace

FiniteGroup trivial() { return FiniteGroup::from_table({{0}}, {"e"}); }

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw InvalidArgument("Z/0 is not finite");
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = static_cast<Elem>((i + j) % n);
  }
  return FiniteGroup::from_table(std::move(rows), std::move(labels));
}

FiniteGroup dihedral(std::size_t n) {
  if (n == 0) throw InvalidArgument("dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  std::vector<std::vector<Elem>> rows(order, std::vector<Elem>(order));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      // r^a s^b · r^c s^d = r^(a + (-1)^b c) s^(b+d)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < 2; ++d) {
          const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
          rows[a + n * b][c + n * d] = static_cast<Elem>(rot + n * ((b + d) % 2));
        }
    }
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      std::string l = a == 0 ? (b == 0 ? "e" : "") : (a == 1 ? "r" : "r^" + std::to_string(a));
      if (b == 1) l += "s";
      labels.push_back(l);
    }
  return FiniteGroup::from_table(std::move(rows), std::move(labels));
}

FiniteGroup symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw InvalidArgument("symmetric group supported for 1 <= n <= 5");
  if (n == 1) return trivial();
  Perm cycle(n), swap(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<int>((i + 1) % n);
  return permutation_group({swap, cycle}, n);
}

FiniteGroup quaternion() {
  // Index 2u + s is (-1)^s · unit u with units 1, i, j, k.
  // unit product table: u·v = sign · w.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Elem>> rows(8, std::vector<Elem>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2 + y % 2 + kSign[u][v]) % 2;
      rows[x][y] = static_cast<Elem>(2 * kUnit[u][v] + s);
    }
  return FiniteGroup::from_table(std::move(rows), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

FiniteGroup klein_four() {
  const FiniteGroup z2 = cyclic(2);
  return direct_product(z2, z2);
}

std::vector<std::string> names() {
  std::vector<std::string> out{"trivial"};
  for (int n = 2; n <= 12; ++n) out.push_back("Z" + std::to_string(n));
  for (int n = 3; n <= 6; ++n) out.push_back("D" + std::to_string(n));
  out.insert(out.end(), {"S3", "S4", "Q8", "Z2xZ2"});
  return out;
}

std::string canonical_name(std::string_view name) {
  const std::string s = normalize(name);
  if (s == "TRIVIAL" || s == "1" || s == "Z1" || s == "E") return "trivial";
  if (s == "Z2XZ2" || s == "V4" || s == "KLEIN") return "Z2xZ2";
  if (s == "Q8") return "Q8";
  if (s.size() >= 2 && (s[0] == 'Z' || s[0] == 'D' || s[0] == 'S') &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const int n = std::stoi(s.substr(1));
    if (s[0] == 'Z' && n >= 2 && n <= 12) return "Z" + std::to_string(n);
    if (s[0] == 'D' && n >= 1 && n <= 6) return "D" + std::to_string(n);
    if (s[0] == 'S' && (n == 3 || n == 4)) return "S" + std::to_string(n);
  }
  return {};
}

FiniteGroup by_name(std::string_view name) {
  const std::string c = canonical_name(name);
  if (c.empty()) throw InvalidArgument("unknown catalog group '" + std::string(name) + "'");
  if (c == "trivial") return trivial();
  if (c == "Z2xZ2") return klein_four();
  if (c == "Q8") return quaternion();
  const std::size_t n = std::stoul(c.substr(1));
  switch (c[0]) {
    case 'Z': return cyclic(n);
    case 'D': return dihedral(n);
    default: return symmetric(n);
  }
}

}  // namespace vcyc::catalog
