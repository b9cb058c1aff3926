#include "wpp/wqsym.hpp"

#include <vector>

namespace wpp {

namespace {

// Enumerates increasing maps a: [k] -> [K], b: [l] -> [K] whose images
// cover [K]; with merge == false the images are also disjoint. Each pair
// contributes the word a(u) b(v).
class ValueMerger {
 public:
  ValueMerger(const PackedWord& u, const PackedWord& v, bool merge)
      : u_(u), v_(v), merge_(merge),
        a_(u.max_letter() + 1), b_(v.max_letter() + 1) {}

  ModuleElement run() {
    step(1, 1, 0);
    return std::move(out_);
  }

 private:
  void step(Letter i, Letter j, Letter top) {
    bool const u_left = i <= u_.max_letter();
    bool const v_left = j <= v_.max_letter();
    if (!u_left && !v_left) {
      emit();
      return;
    }
    if (u_left) {
      a_[i] = top + 1;
      step(i + 1, j, top + 1);
    }
    if (v_left) {
      b_[j] = top + 1;
      step(i, j + 1, top + 1);
    }
    if (merge_ && u_left && v_left) {
      a_[i] = top + 1;
      b_[j] = top + 1;
      step(i + 1, j + 1, top + 1);
    }
  }

  void emit() {
    std::vector<Letter> w;
    w.reserve(u_.size() + v_.size());
    for (Letter x : u_) w.push_back(a_[x]);
    for (Letter x : v_) w.push_back(b_[x]);
    out_.add(PackedWord(std::move(w)), 1);
  }

  const PackedWord& u_;
  const PackedWord& v_;
  bool merge_;
  std::vector<Letter> a_;
  std::vector<Letter> b_;
  ModuleElement out_;
};

}  // namespace

ModuleElement shifted_shuffle(const PackedWord& u, const PackedWord& v) {
  return ValueMerger(u, v, false).run();
}

ModuleElement shifted_shuffle(const ModuleElement& x, const ModuleElement& y) {
  return bilinear(x, y, [](const PackedWord& u, const PackedWord& v) {
    return shifted_shuffle(u, v);
  });
}

ModuleElement qshuffle(const PackedWord& u, const PackedWord& v) {
  return ValueMerger(u, v, true).run();
}

ModuleElement qshuffle(const ModuleElement& x, const ModuleElement& y) {
  return bilinear(x, y, [](const PackedWord& u, const PackedWord& v) {
    return qshuffle(u, v);
  });
}

TensorElement delta_wqsym(const PackedWord& w) {
  TensorElement out;
  for (Letter k = 0; k <= w.max_letter(); ++k) {
    std::vector<Letter> low;
    std::vector<Letter> high;
    for (Letter x : w) {
      (x <= k ? low : high).push_back(x);
    }
    out.add(WordPair(PackedWord(std::move(low)), pack(high)), 1);
  }
  return out;
}

TensorElement delta_wqsym(const ModuleElement& x) {
  return linear_to_tensor(x, [](const PackedWord& w) { return delta_wqsym(w); });
}

}  // namespace wpp
