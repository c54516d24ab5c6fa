#include "bethck/upset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bethck/errors.hpp"

namespace bethck {

UPSet::UPSet() : block_{false} {}

UPSet UPSet::naturals() { return from_bits({}, {true}); }

UPSet UPSet::from_residue(Nat residue, Nat modulus) {
  if (modulus == 0 || residue >= modulus)
    throw PreconditionError("from_residue: need residue < modulus, got " + std::to_string(residue) +
                            " mod " + std::to_string(modulus));
  std::vector<bool> block(modulus, false);
  block[residue] = true;
  return from_bits({}, std::move(block));
}

UPSet UPSet::from_finite(std::span<const Nat> elems) {
  Nat top = 0;
  for (Nat e : elems) top = std::max(top, e + 1);
  std::vector<bool> prefix(top, false);
  for (Nat e : elems) prefix[e] = true;
  return from_bits(std::move(prefix), {false});
}

UPSet UPSet::from_finite(std::initializer_list<Nat> elems) {
  return from_finite(std::span<const Nat>(elems.begin(), elems.size()));
}

UPSet UPSet::from_bits(std::vector<bool> prefix, std::vector<bool> block) {
  if (block.empty()) throw PreconditionError("UPSet::from_bits: empty periodic block");
  UPSet s;
  s.prefix_ = std::move(prefix);
  s.block_ = std::move(block);
  s.canonicalize();
  return s;
}

void UPSet::canonicalize() {
  const std::size_t p = block_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < p && periodic; ++i) periodic = block_[i] == block_[i - d];
    if (periodic) {
      block_.resize(d);
      break;
    }
  }
  // Pull the periodic part left while the last prefix bit agrees with it.
  while (!prefix_.empty() && prefix_.back() == block_.back()) {
    bool last = block_.back();
    block_.pop_back();
    block_.insert(block_.begin(), last);
    prefix_.pop_back();
  }
}

bool UPSet::empty() const {
  return std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; }) &&
         std::none_of(block_.begin(), block_.end(), [](bool b) { return b; });
}

bool UPSet::finite() const {
  return std::none_of(block_.begin(), block_.end(), [](bool b) { return b; });
}

std::optional<Nat> UPSet::size() const {
  if (!finite()) return std::nullopt;
  return static_cast<Nat>(std::count(prefix_.begin(), prefix_.end(), true));
}

std::optional<Nat> UPSet::least() const {
  for (std::size_t i = 0; i < prefix_.size(); ++i)
    if (prefix_[i]) return i;
  for (std::size_t i = 0; i < block_.size(); ++i)
    if (block_[i]) return prefix_.size() + i;
  return std::nullopt;
}

Nat UPSet::nth(Nat i) const {
  Nat seen = 0;
  for (std::size_t n = 0; n < prefix_.size(); ++n) {
    if (!prefix_[n]) continue;
    if (seen == i) return n;
    ++seen;
  }
  const Nat per_block = static_cast<Nat>(std::count(block_.begin(), block_.end(), true));
  if (per_block == 0)
    throw ExhaustedError("nth: index " + std::to_string(i) + " beyond finite set of size " +
                         std::to_string(seen));
  const Nat rest = i - seen;
  const Nat q = rest / per_block;
  Nat r = rest % per_block;
  for (std::size_t j = 0; j < block_.size(); ++j) {
    if (!block_[j]) continue;
    if (r == 0) return prefix_.size() + q * block_.size() + j;
    --r;
  }
  throw ExhaustedError("nth: unreachable");
}

std::vector<Nat> UPSet::elements_below(Nat bound) const {
  std::vector<Nat> out;
  for (Nat n = 0; n < bound; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

namespace {

template <class Op>
UPSet combine(const UPSet& a, const UPSet& b, Op op) {
  const Nat t = std::max(a.threshold(), b.threshold());
  const Nat p = std::lcm(a.period(), b.period());
  return UPSet::from_predicate(t, p, [&](Nat n) { return op(a.contains(n), b.contains(n)); });
}

}  // namespace

UPSet UPSet::operator|(const UPSet& rhs) const {
  return combine(*this, rhs, [](bool x, bool y) { return x || y; });
}
UPSet UPSet::operator&(const UPSet& rhs) const {
  return combine(*this, rhs, [](bool x, bool y) { return x && y; });
}
UPSet UPSet::operator-(const UPSet& rhs) const {
  return combine(*this, rhs, [](bool x, bool y) { return x && !y; });
}
UPSet UPSet::operator~() const {
  std::vector<bool> prefix(prefix_), block(block_);
  prefix.flip();
  block.flip();
  return from_bits(std::move(prefix), std::move(block));
}

bool UPSet::subset_of(const UPSet& other) const { return (*this - other).empty(); }
bool UPSet::intersects(const UPSet& other) const { return !(*this & other).empty(); }

std::string UPSet::to_string() const {
  std::ostringstream os;
  os << "up(threshold=" << threshold() << ", period=" << period() << ", prefix=";
  for (bool b : prefix_) os << (b ? '1' : '0');
  os << ", block=";
  for (bool b : block_) os << (b ? '1' : '0');
  os << ')';
  return os.str();
}

UPSet random_upset(std::mt19937_64& rng, Nat max_threshold, Nat max_period, double density) {
  std::uniform_int_distribution<Nat> t(0, max_threshold ? max_threshold - 1 : 0);
  std::uniform_int_distribution<Nat> q(1, std::max<Nat>(max_period, 1));
  std::bernoulli_distribution bit(density);
  std::vector<bool> prefix(t(rng)), block(q(rng));
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = bit(rng);
  for (std::size_t i = 0; i < block.size(); ++i) block[i] = bit(rng);
  return UPSet::from_bits(std::move(prefix), std::move(block));
}

}  // namespace bethck
