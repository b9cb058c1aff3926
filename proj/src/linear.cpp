#include "wpp/linear.hpp"

#include <ostream>
#include <stdexcept>

namespace wpp {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("coefficient overflow in addition");
  }
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("coefficient overflow in multiplication");
  }
  return r;
}

ModuleElement component(const ModuleElement& x, std::size_t n) {
  ModuleElement out;
  for (const auto& [w, c] : x) {
    if (w.size() == n) out.add(w, c);
  }
  return out;
}

namespace {

std::string label(const PackedWord& w) {
  return w.empty() ? "()" : w.to_string();
}

std::string label(const WordPair& p) {
  return label(p.first) + "⊗" + label(p.second);
}

template <typename Key>
std::string render(const FreeModule<Key>& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    Coeff mag = c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag < 0) mag = -mag;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += label(k);
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(const ModuleElement& x) { return render(x); }
std::string to_string(const TensorElement& t) { return render(t); }

std::ostream& operator<<(std::ostream& os, const ModuleElement& x) {
  return os << render(x);
}
std::ostream& operator<<(std::ostream& os, const TensorElement& t) {
  return os << render(t);
}

}  // namespace wpp
