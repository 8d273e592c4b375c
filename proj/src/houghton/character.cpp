#include "houghton/character.hpp"

#include "houghton/errors.hpp"

namespace houghton {

Character::Character(int arity, std::vector<Rational> coeffs) : n_(arity) {
  if (arity < 2) throw usage_error("characters need arity >= 2");
  if (coeffs.size() != static_cast<size_t>(arity))
    throw usage_error("character coefficient count differs from arity");
  Rational mean{0};
  for (const auto& c : coeffs) mean = mean + c;
  mean = mean / Rational(arity);
  for (auto& c : coeffs) c = c - mean;
  const Rational* first = nullptr;
  for (const auto& c : coeffs)
    if (!c.is_zero()) {
      first = &c;
      break;
    }
  if (!first) throw usage_error("zero character rejected");
  Rational scale = *first;
  for (auto& c : coeffs) c = c / scale;
  coeffs_ = std::move(coeffs);
}

Character Character::lambda(int arity, int ray) {
  if (ray < 1 || ray > arity) throw usage_error("lambda character: ray out of range");
  std::vector<Rational> c(static_cast<size_t>(arity), Rational(0));
  c[static_cast<size_t>(ray - 1)] = Rational(1);
  return Character(arity, std::move(c));
}

Rational Character::eval(const Element& g) const {
  if (g.arity() != n_) throw usage_error("character/element arity mismatch");
  Rational out{0};
  for (int r = 1; r <= n_; ++r)
    out = out + coeffs_[static_cast<size_t>(r - 1)] * Rational(g.lambda(r));
  return out;
}

Character Character::permuted(const std::vector<int>& perm_images) const {
  if (perm_images.size() != static_cast<size_t>(n_))
    throw usage_error("character permutation degree mismatch");
  // (phi ∘ g^{-1})_k = phi_{g^{-1}(k)}, i.e. coefficient at image position k
  // comes from the preimage of k.
  std::vector<Rational> out(static_cast<size_t>(n_), Rational(0));
  for (size_t pre = 0; pre < perm_images.size(); ++pre)
    out[static_cast<size_t>(perm_images[pre])] = coeffs_[pre];
  return Character(n_, std::move(out));
}

std::string Character::str() const {
  std::string out = "(";
  for (size_t k = 0; k < coeffs_.size(); ++k) out += (k ? "," : "") + coeffs_[k].str();
  return out + ")";
}

std::string Character::hash_tag() const {
  uint64_t h = 1469598103934665603ull;
  for (char c : str()) {
    h ^= static_cast<uint64_t>(static_cast<unsigned char>(c));
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (int k = 0; k < 8; ++k) out += hex[(h >> (4 * k)) & 0xf];
  return out;
}

bool operator<(const Character& a, const Character& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  for (size_t k = 0; k < a.coeffs_.size(); ++k) {
    if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k];
  }
  return false;
}

}  // namespace houghton
