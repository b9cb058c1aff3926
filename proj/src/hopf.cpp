#include "wpp/hopf.hpp"

#include <map>
#include <stdexcept>
#include <optional>

#include "wpp/hwpp.hpp"
#include "wpp/wqsym.hpp"

namespace wpp {

std::string_view to_string(Algebra a) {
  switch (a) {
    case Algebra::weak_plane_posets: return "wpp";
    case Algebra::wqsym_shuffle: return "shuffle";
    case Algebra::wqsym_dot: return "dot";
  }
  return "unknown";
}

std::optional<Algebra> parse_algebra(std::string_view name) {
  for (Algebra a : {Algebra::weak_plane_posets, Algebra::wqsym_shuffle,
                    Algebra::wqsym_dot}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

HopfStructure hopf_structure(Algebra a) {
  switch (a) {
    case Algebra::weak_plane_posets:
      return {"H_WPP",
              [](const PackedWord& u, const PackedWord& v) {
                return basis(hwpp_product(u, v));
              },
              [](const PackedWord& w) { return hwpp_coproduct(w); }};
    case Algebra::wqsym_shuffle:
      return {"(WQSym, shifted shuffle, value split)",
              [](const PackedWord& u, const PackedWord& v) {
                return shifted_shuffle(u, v);
              },
              [](const PackedWord& w) { return delta_wqsym(w); }};
    case Algebra::wqsym_dot:
      return {"(WQSym, quasi-shuffle, value split)",
              [](const PackedWord& u, const PackedWord& v) {
                return qshuffle(u, v);
              },
              [](const PackedWord& w) { return delta_wqsym(w); }};
  }
  throw std::invalid_argument("unknown algebra");
}

ModuleElement multiply(const HopfStructure& h, const ModuleElement& x,
                       const ModuleElement& y) {
  return bilinear(x, y, h.product);
}

TensorElement comultiply(const HopfStructure& h, const ModuleElement& x) {
  return linear_to_tensor(x, h.coproduct);
}

Coeff counit(const ModuleElement& x) { return x.coeff(PackedWord()); }

namespace {

class AntipodeSolver {
 public:
  explicit AntipodeSolver(const HopfStructure& h) : h_(h) {}

  const ModuleElement& of(const PackedWord& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    ModuleElement s;
    if (w.empty()) {
      s = basis(w);
    } else {
      s = -basis(w);
      for (const auto& [pair, c] : h_.coproduct(w)) {
        const auto& [left, right] = pair;
        if (left.empty() || right.empty()) continue;
        ModuleElement const sl = of(left);
        s -= c * multiply(h_, sl, basis(right));
      }
    }
    return memo_.emplace(w, std::move(s)).first->second;
  }

 private:
  const HopfStructure& h_;
  std::map<PackedWord, ModuleElement> memo_;
};

}  // namespace

ModuleElement antipode(const HopfStructure& h, const ModuleElement& x) {
  AntipodeSolver solver(h);
  return linear_map(x, [&](const PackedWord& w) { return solver.of(w); });
}

ModuleElement left_convolution(const HopfStructure& h, const ModuleElement& x) {
  AntipodeSolver solver(h);
  ModuleElement out;
  for (const auto& [pair, c] : comultiply(h, x)) {
    out += c * multiply(h, solver.of(pair.first), basis(pair.second));
  }
  return out;
}

ModuleElement right_convolution(const HopfStructure& h, const ModuleElement& x) {
  AntipodeSolver solver(h);
  ModuleElement out;
  for (const auto& [pair, c] : comultiply(h, x)) {
    out += c * multiply(h, basis(pair.first), solver.of(pair.second));
  }
  return out;
}

}  // namespace wpp
