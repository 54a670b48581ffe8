#include "zslab/sequence.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "zslab/detail/dense_set.hpp"

namespace zslab {

Universe::Universe(Group group, std::vector<int> elements) : group_(std::move(group)) {
  int order = group_.size();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (int e : elements)
    if (e < 0 || e >= order) throw std::out_of_range("universe element index out of range");
  elements_ = std::move(elements);
  orders_.reserve(elements_.size());
  negatives_.reserve(elements_.size());
  add_tables_.reserve(elements_.size());
  for (int e : elements_) {
    orders_.push_back(group_.element_order(e));
    negatives_.push_back(group_.negate(e));
    std::vector<int> table(order);
    for (int s = 0; s < order; ++s) table[s] = group_.add(s, e);
    add_tables_.push_back(std::move(table));
  }
}

int Universe::position(int element_index) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), element_index);
  if (it == elements_.end() || *it != element_index) return -1;
  return static_cast<int>(it - elements_.begin());
}

UniversePtr make_universe(const Group& group, std::vector<int> elements) {
  return std::make_shared<Universe>(group, std::move(elements));
}

Sequence::Sequence(UniversePtr universe, std::vector<int> mults)
    : universe_(std::move(universe)), mults_(std::move(mults)) {
  if (!universe_) throw std::invalid_argument("sequence without universe");
  if (static_cast<int>(mults_.size()) != universe_->size())
    throw std::invalid_argument("multiplicity vector does not match universe size");
  for (int m : mults_)
    if (m < 0) throw std::invalid_argument("negative multiplicity");
}

Sequence Sequence::empty(UniversePtr universe) {
  std::vector<int> zero(universe->size(), 0);
  return Sequence(std::move(universe), std::move(zero));
}

long long Sequence::length() const {
  long long len = 0;
  for (int m : mults_) len += m;
  return len;
}

int Sequence::sum() const {
  const Group& g = universe_->group();
  int acc = 0;
  for (int i = 0; i < universe_->size(); ++i)
    for (int c = 0; c < mults_[i]; ++c) acc = g.add(acc, universe_->element(i));
  return acc;
}

int Sequence::height() const {
  int h = 0;
  for (int m : mults_) h = std::max(h, m);
  return h;
}

std::vector<int> Sequence::support() const {
  std::vector<int> out;
  for (int i = 0; i < universe_->size(); ++i)
    if (mults_[i] > 0) out.push_back(i);
  return out;
}

Rational Sequence::cross() const {
  Rational k(0);
  for (int i = 0; i < universe_->size(); ++i)
    if (mults_[i] > 0) k += Rational(mults_[i], universe_->element_order(i));
  return k;
}

Sequence Sequence::operator*(const Sequence& other) const {
  if (!(*universe_ == *other.universe_))
    throw std::invalid_argument("sequence product across different universes");
  std::vector<int> m = mults_;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += other.mults_[i];
  return Sequence(universe_, std::move(m));
}

bool Sequence::operator==(const Sequence& other) const {
  return *universe_ == *other.universe_ && mults_ == other.mults_;
}

std::string Sequence::str() const {
  std::string out;
  for (int i = 0; i < universe_->size(); ++i) {
    if (mults_[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += "[" + Group::format_element(universe_->group().coords(universe_->element(i))) +
           "]^" + std::to_string(mults_[i]);
  }
  return out;
}

Sequence Sequence::parse(UniversePtr universe, std::string_view text) {
  std::vector<int> mults(universe->size(), 0);
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::size_t caret = tok.rfind('^');
    long long mult = 1;
    std::string elem = tok;
    if (caret != std::string::npos && caret > 0 && tok.find(']') != std::string::npos &&
        caret > tok.find(']')) {
      mult = std::stoll(tok.substr(caret + 1));
      elem = tok.substr(0, caret);
    }
    if (mult < 0) throw std::invalid_argument("sequence literal: negative multiplicity");
    int idx = universe->group().index(universe->group().parse_element(elem));
    int pos = universe->position(idx);
    if (pos < 0)
      throw std::invalid_argument("sequence literal: element " + elem + " not in universe");
    mults[pos] += static_cast<int>(mult);
  }
  return Sequence(std::move(universe), std::move(mults));
}

bool divides(const Sequence& s, const Sequence& b) {
  if (!(*s.universe() == *b.universe()))
    throw std::invalid_argument("divides: universe mismatch");
  for (int i = 0; i < s.universe()->size(); ++i)
    if (s.mult(i) > b.mult(i)) return false;
  return true;
}

bool has_proper_zero_subsum(const Sequence& s, const SubsumLimits& limits) {
  const Universe& u = *s.universe();
  long long len = s.length();
  if (len == 0) throw std::invalid_argument("has_proper_zero_subsum: empty sequence");
  if (len > limits.max_length)
    throw std::domain_error("sequence length exceeds reachable-subsum cap");
  int order = u.group().size();
  if (order > limits.max_order)
    throw std::domain_error("group order exceeds reachable-subsum cap");

  // Reachable sums of nonempty subsequences, fed one copy at a time. When
  // sigma(S) = 0 one copy is withheld: a proper zero subsum of S exists iff
  // a nonempty zero subsum avoids some fixed copy (otherwise its complement
  // is one that does).
  int total = s.sum();
  int withhold_pos = -1;
  if (total == 0) {
    for (int i = u.size() - 1; i >= 0; --i)
      if (s.mult(i) > 0) {
        withhold_pos = i;
        break;
      }
  }
  detail::DenseSet reach(order);
  for (int i = 0; i < u.size(); ++i) {
    int copies = s.mult(i) - (i == withhold_pos ? 1 : 0);
    const std::vector<int>& table = u.add_table(i);
    for (int c = 0; c < copies; ++c) {
      detail::DenseSet snapshot = reach;
      reach.or_shifted(snapshot, table);
      reach.set(u.element(i));
      if (reach.test(0)) return true;
    }
  }
  return reach.test(0);
}

}  // namespace zslab
