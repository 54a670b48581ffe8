#include "zslab/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

#include "zslab/detail/arith.hpp"

namespace zslab {

Group::Group(std::vector<long long> raw_factors) {
  for (long long f : raw_factors)
    if (f < 2) throw std::invalid_argument("group factor must be >= 2");

  // Regroup prime powers into the invariant-factor chain: the j-th largest
  // invariant factor is the product over primes of the j-th largest power of
  // that prime occurring in the input.
  std::map<long long, std::vector<long long>> powers_by_prime;
  for (long long f : raw_factors)
    for (auto [p, e] : detail::factorize(f)) powers_by_prime[p].push_back(detail::ipow(p, e));

  std::size_t chain_len = 0;
  for (auto& [p, ps] : powers_by_prime) {
    std::sort(ps.begin(), ps.end(), std::greater<>());
    chain_len = std::max(chain_len, ps.size());
  }
  std::vector<long long> chain(chain_len, 1);
  for (auto& [p, ps] : powers_by_prime)
    for (std::size_t i = 0; i < ps.size(); ++i) chain[i] = detail::checked_mul(chain[i], ps[i]);
  std::reverse(chain.begin(), chain.end());  // ascending: n1 | n2 | ... | nr
  factors_ = std::move(chain);

  for (long long f : factors_) order_ = detail::checked_mul(order_, f);
  if (!factors_.empty()) exponent_ = factors_.back();
  for (std::size_t i = 0; i + 1 < factors_.size(); ++i)
    if (factors_[i + 1] % factors_[i] != 0)
      throw std::logic_error("invariant factor chain broken");
  for (long long f : factors_) {
    if (f == exponent_) ++cn_multiplicity_;
    dstar_ = detail::checked_add(dstar_, f - 1);
  }
  if (dstar_ < exponent_ || dstar_ > order_)
    throw std::logic_error("dstar outside [exponent, order]");
}

Group Group::parse(std::string_view literal) {
  std::string s;
  for (char c : literal)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty group literal");

  std::vector<long long> raw;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 'C' && s[i] != 'c')
      throw std::invalid_argument("group literal: expected 'C' at position " + std::to_string(i));
    ++i;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("group literal: missing order after 'C'");
    long long n = std::stoll(s.substr(i, j - i));
    i = j;
    long long rep = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw std::invalid_argument("group literal: missing exponent after '^'");
      rep = std::stoll(s.substr(i, j - i));
      if (rep < 1) throw std::invalid_argument("group literal: repetition must be >= 1");
      i = j;
    }
    if (n == 1) {
      // C1 contributes nothing; only valid as the whole literal.
      if (rep != 1 || !raw.empty() || i < s.size())
        throw std::invalid_argument("group literal: C1 only denotes the trivial group");
      return Group{};
    }
    for (long long k = 0; k < rep; ++k) raw.push_back(n);
    if (i < s.size()) {
      if (s[i] != 'x' && s[i] != 'X')
        throw std::invalid_argument("group literal: expected 'x' between summands");
      ++i;
      if (i == s.size()) throw std::invalid_argument("group literal: trailing 'x'");
    }
  }
  return Group(std::move(raw));
}

std::string Group::literal() const {
  if (factors_.empty()) return "C1";
  std::string out;
  std::size_t i = 0;
  while (i < factors_.size()) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += "x";
    out += "C" + std::to_string(factors_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

void Group::check_dense() const {
  if (order_ > kMaxDenseOrder)
    throw std::domain_error("group order " + std::to_string(order_) +
                            " exceeds the dense element-table cap " +
                            std::to_string(kMaxDenseOrder));
}

int Group::size() const {
  check_dense();
  return static_cast<int>(order_);
}

Coords Group::coords(int index) const {
  check_dense();
  if (index < 0 || index >= order_) throw std::out_of_range("element index out of range");
  Coords c(factors_.size());
  long long rest = index;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    c[i] = rest % factors_[i];
    rest /= factors_[i];
  }
  return c;
}

int Group::index(const Coords& coords) const {
  check_dense();
  if (coords.size() != factors_.size())
    throw std::invalid_argument("element has wrong number of coordinates");
  long long idx = 0;
  long long stride = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long long c = coords[i] % factors_[i];
    if (c < 0) c += factors_[i];
    idx += c * stride;
    stride *= factors_[i];
  }
  return static_cast<int>(idx);
}

int Group::add(int a, int b) const {
  long long res = 0;
  long long stride = 1;
  for (long long n : factors_) {
    long long ca = a % n, cb = b % n;
    a /= static_cast<int>(n);
    b /= static_cast<int>(n);
    res += ((ca + cb) % n) * stride;
    stride *= n;
  }
  return static_cast<int>(res);
}

int Group::negate(int a) const {
  long long res = 0;
  long long stride = 1;
  for (long long n : factors_) {
    long long ca = a % n;
    a /= static_cast<int>(n);
    res += ((n - ca) % n) * stride;
    stride *= n;
  }
  return static_cast<int>(res);
}

long long Group::element_order(int a) const {
  long long ord = 1;
  for (long long n : factors_) {
    long long c = a % n;
    a /= static_cast<int>(n);
    ord = std::lcm(ord, n / std::gcd(n, c));
  }
  return ord;
}

std::vector<int> Group::span(const std::vector<int>& generators) const {
  int n = size();
  std::vector<char> in(n, 0);
  in[0] = 1;
  std::vector<int> frontier{0};
  std::vector<int> gens;
  for (int g : generators) {
    if (g < 0 || g >= n) throw std::out_of_range("generator index out of range");
    gens.push_back(g);
    gens.push_back(negate(g));
  }
  while (!frontier.empty()) {
    int a = frontier.back();
    frontier.pop_back();
    for (int g : gens) {
      int b = add(a, g);
      if (!in[b]) {
        in[b] = 1;
        frontier.push_back(b);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<int> Group::nonzero_elements() const {
  int n = size();
  std::vector<int> out;
  out.reserve(n - 1);
  for (int i = 1; i < n; ++i) out.push_back(i);
  return out;
}

Coords Group::parse_element(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  Coords c;
  if (!s.empty()) {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty()) throw std::invalid_argument("element literal: empty coordinate");
      c.push_back(std::stoll(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (c.size() != factors_.size())
    throw std::invalid_argument("element literal has " + std::to_string(c.size()) +
                                " coordinates, group rank is " + std::to_string(factors_.size()));
  return c;
}

std::string Group::format_element(const Coords& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out;
}

}  // namespace zslab
