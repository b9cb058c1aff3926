#include "wpp/verify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "wpp/error.hpp"
#include "wpp/hwpp.hpp"
#include "wpp/matrix.hpp"
#include "wpp/morphisms.hpp"
#include "wpp/orders.hpp"
#include "wpp/posets.hpp"
#include "wpp/wqsym.hpp"

namespace wpp {

namespace {

using Triple = std::array<PackedWord, 3>;
using TripleElement = FreeModule<Triple>;

std::string show(const PackedWord& w) { return w.empty() ? "()" : w.to_string(); }

template <typename... Words>
std::string args(const Words&... ws) {
  std::string out = "(";
  bool first = true;
  ((out += (first ? "" : ", ") + show(ws), first = false), ...);
  return out + ")";
}

void require_verify_degree(std::size_t n) {
  if (n > kMaxVerifyDegree) {
    throw CapacityError("verification degree " + std::to_string(n) +
                        " exceeds the limit of " +
                        std::to_string(kMaxVerifyDegree));
  }
}

// Records the first failure; later ones are counted but not described.
class Checker {
 public:
  explicit Checker(std::string name) { report_.name = std::move(name); }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++report_.cases;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = describe();
    }
  }
  bool failed() const { return !report_.passed; }
  CheckReport done() { return std::move(report_); }

 private:
  CheckReport report_;
};

std::vector<std::vector<PackedWord>> words_up_to(std::size_t n) {
  std::vector<std::vector<PackedWord>> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(enumerate(k));
  return out;
}

TripleElement left_coassoc(const HopfStructure& h, const PackedWord& w) {
  TripleElement out;
  for (const auto& [p, c] : h.coproduct(w)) {
    for (const auto& [q, d] : h.coproduct(p.first)) {
      out.add(Triple{q.first, q.second, p.second}, checked_mul(c, d));
    }
  }
  return out;
}

TripleElement right_coassoc(const HopfStructure& h, const PackedWord& w) {
  TripleElement out;
  for (const auto& [p, c] : h.coproduct(w)) {
    for (const auto& [q, d] : h.coproduct(p.second)) {
      out.add(Triple{p.first, q.first, q.second}, checked_mul(c, d));
    }
  }
  return out;
}

bool matrix_equals(const IntMatrix& m, const std::vector<std::vector<Coeff>>& rows) {
  return m.to_rows() == rows;
}

}  // namespace

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.passed; });
}

std::vector<CheckReport> verify_hopf(const HopfStructure& h, std::size_t n_max) {
  require_verify_degree(n_max);
  auto const words = words_up_to(n_max);
  PackedWord const unit;

  Checker unit_law(h.name + ": unit");
  Checker assoc(h.name + ": associativity");
  Checker coassoc(h.name + ": coassociativity");
  Checker counit_law(h.name + ": counit");
  Checker compat(h.name + ": bialgebra compatibility");

  for (std::size_t a = 0; a <= n_max; ++a) {
    for (const auto& u : words[a]) {
      ModuleElement const x = basis(u);
      unit_law.expect(h.product(unit, u) == x && h.product(u, unit) == x,
                      [&] { return "unit law fails at " + args(u); });

      coassoc.expect(left_coassoc(h, u) == right_coassoc(h, u),
                     [&] { return "coassociativity fails at " + args(u); });

      ModuleElement left;
      ModuleElement right;
      for (const auto& [p, c] : h.coproduct(u)) {
        if (p.first.empty()) left.add(p.second, c);
        if (p.second.empty()) right.add(p.first, c);
      }
      counit_law.expect(left == x && right == x,
                        [&] { return "counit law fails at " + args(u); });

      for (std::size_t b = 0; a + b <= n_max; ++b) {
        for (const auto& v : words[b]) {
          ModuleElement const uv = h.product(u, v);
          TensorElement const lhs = linear_to_tensor(uv, h.coproduct);
          TensorElement const rhs =
              tensor_product(h.coproduct(u), h.coproduct(v), h.product);
          compat.expect(lhs == rhs, [&] {
            return "Δ(xy) != Δ(x)Δ(y) at " + args(u, v);
          });
          for (std::size_t c = 0; a + b + c <= n_max; ++c) {
            for (const auto& w : words[c]) {
              ModuleElement const l = bilinear(uv, basis(w), h.product);
              ModuleElement const r =
                  bilinear(basis(u), h.product(v, w), h.product);
              assoc.expect(l == r, [&] {
                return "associativity fails at " + args(u, v, w);
              });
            }
          }
        }
      }
    }
  }
  return {unit_law.done(), assoc.done(), coassoc.done(), counit_law.done(),
          compat.done()};
}

CheckReport verify_antipode(const HopfStructure& h, std::size_t n_max) {
  require_verify_degree(n_max);
  Checker check(h.name + ": antipode");
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& w : enumerate(n)) {
      ModuleElement const expected =
          w.empty() ? basis(PackedWord()) : ModuleElement();
      ModuleElement const x = basis(w);
      check.expect(left_convolution(h, x) == expected &&
                       right_convolution(h, x) == expected,
                   [&] { return "convolution identity fails at " + args(w); });
    }
  }
  return check.done();
}

CheckReport verify_bijection(std::size_t n_max) {
  if (n_max > kMaxOrderDegree) {
    throw CapacityError("bijection check beyond degree " +
                        std::to_string(kMaxOrderDegree));
  }
  Checker check("bijection PW(n) <-> weak plane posets");
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<WeakPlanePoset> canon;
    for_each_packed_word(n, [&](const PackedWord& w) {
      WeakPlanePoset const p = dp(w);
      check.expect(pack_poset(p) == w,
                   [&] { return "pack_poset(dp(w)) != w at " + args(w); });
      if (n <= 4) canon.push_back(canonicalize(p));
    });
    for (std::size_t i = 0; i < canon.size(); ++i) {
      for (std::size_t j = i + 1; j < canon.size(); ++j) {
        check.expect(!(canon[i] == canon[j]), [&] {
          return "dp not injective in degree " + std::to_string(n);
        });
      }
    }
  }
  return check.done();
}

std::vector<CheckReport> verify_morphisms(std::size_t n_max) {
  require_verify_degree(n_max);
  auto const words = words_up_to(n_max);
  HopfStructure const wpp_h = hopf_structure(Algebra::weak_plane_posets);

  Checker phi_prod("phi: product");
  Checker phi_cop("phi: coproduct");
  Checker phip_prod("phi': product");
  Checker phip_cop("phi': coproduct");
  Checker psi_prod("psi: product");
  Checker psi_cop("psi: coproduct");

  auto psi_word = [](const PackedWord& w) { return psi(w); };
  auto phi_word = [](const PackedWord& w) { return phi(w); };
  auto phip_word = [](const PackedWord& w) { return phi_prime(w); };

  for (std::size_t a = 0; a <= n_max; ++a) {
    for (const auto& u : words[a]) {
      TensorElement const d = wpp_h.coproduct(u);
      phi_cop.expect(tensor_map(d, phi_word, phi_word) == delta_wqsym(phi(u)),
                     [&] { return "(phi⊗phi)Δ != Δphi at " + args(u); });
      phip_cop.expect(
          tensor_map(d, phip_word, phip_word) == delta_wqsym(phi_prime(u)),
          [&] { return "(phi'⊗phi')Δ != Δphi' at " + args(u); });
      psi_cop.expect(
          tensor_map(delta_wqsym(u), psi_word, psi_word) == delta_wqsym(psi(u)),
          [&] { return "(psi⊗psi)Δ != Δpsi at " + args(u); });
      for (std::size_t b = 0; a + b <= n_max; ++b) {
        for (const auto& v : words[b]) {
          ModuleElement const p = basis(hwpp_product(u, v));
          phi_prod.expect(phi(p) == shifted_shuffle(phi(u), phi(v)), [&] {
            return "phi(xy) != phi(x) ⧢ phi(y) at " + args(u, v);
          });
          phip_prod.expect(phi_prime(p) == qshuffle(phi_prime(u), phi_prime(v)),
                           [&] {
                             return "phi'(xy) != phi'(x).phi'(y) at " +
                                    args(u, v);
                           });
          psi_prod.expect(
              psi(shifted_shuffle(u, v)) == qshuffle(psi(u), psi(v)),
              [&] { return "psi(u ⧢ v) != psi(u).psi(v) at " + args(u, v); });
        }
      }
    }
  }

  Checker composite("phi' = psi ∘ phi (matrices)");
  Checker inverse("phi^-1 ∘ phi = id, psi^-1 ∘ psi = id (matrices)");
  Checker shapes("phi lower / psi upper unitriangular, det phi' = 1");
  for (std::size_t n = 0; n <= n_max; ++n) {
    IntMatrix const m_phi = matrix_of(MatrixKind::phi, n);
    IntMatrix const m_psi = matrix_of(MatrixKind::psi, n);
    IntMatrix const m_phip = matrix_of(MatrixKind::phi_prime, n);
    auto const degree = [n] { return "degree " + std::to_string(n); };
    composite.expect(m_phip == m_psi * m_phi, degree);
    IntMatrix const id = IntMatrix::identity(enumerate(n));
    inverse.expect(matrix_of(MatrixKind::phi_inverse, n) * m_phi == id &&
                       m_phi * matrix_of(MatrixKind::phi_inverse, n) == id &&
                       matrix_of(MatrixKind::psi_inverse, n) * m_psi == id,
                   degree);
    shapes.expect(m_phi.is_lower_unitriangular() &&
                      m_psi.is_upper_unitriangular() &&
                      m_phip.determinant() == "1",
                  degree);
  }
  return {phi_prod.done(),  phi_cop.done(),   phip_prod.done(),
          phip_cop.done(),  psi_prod.done(),  psi_cop.done(),
          composite.done(), inverse.done(),   shapes.done()};
}

std::vector<CheckReport> verify_pairing(std::size_t n_max) {
  require_verify_degree(n_max);
  auto const words = words_up_to(n_max);
  Checker symmetry("pairing: symmetry");
  Checker adjunction("pairing: <xy, z> = sum <x, z'><y, z''>");
  Checker nondegenerate("pairing: nonzero determinant");

  for (std::size_t n = 0; n <= n_max; ++n) {
    IntMatrix const m = matrix_of(MatrixKind::pairing, n);
    symmetry.expect(m == m.transposed(), [&] {
      return "pairing matrix not symmetric in degree " + std::to_string(n);
    });
    if (n <= 4) {
      nondegenerate.expect(m.determinant() != "0", [&] {
        return "singular pairing matrix in degree " + std::to_string(n);
      });
    }
  }
  for (std::size_t a = 0; a <= n_max; ++a) {
    for (std::size_t b = 0; a + b <= n_max; ++b) {
      for (const auto& z : words[a + b]) {
        TensorElement const dz = hwpp_coproduct(z);
        for (const auto& x : words[a]) {
          for (const auto& y : words[b]) {
            Coeff const lhs = pairing(hwpp_product(x, y), z);
            Coeff rhs = 0;
            for (const auto& [p, c] : dz) {
              if (p.first.size() != a) continue;
              rhs = checked_add(rhs, checked_mul(c, checked_mul(
                                                        pairing(x, p.first),
                                                        pairing(y, p.second))));
            }
            adjunction.expect(lhs == rhs,
                              [&] { return "adjunction fails at " + args(x, y, z); });
          }
        }
      }
    }
  }
  return {symmetry.done(), adjunction.done(), nondegenerate.done()};
}

std::vector<CheckReport> verify_orders(std::size_t n_max) {
  require_verify_degree(n_max);
  Checker partial("leq_lin and prec are partial orders");
  Checker lin("Lin(dp(f)) = {g : f <= g}");
  Checker wlin("WLin(dp(f)) = disjoint union of prec down-sets over Lin");
  Checker perms("leq_lin on permutations = inversion-set containment");

  for (std::size_t n = 0; n <= n_max; ++n) {
    for (WordOrderKind kind : {WordOrderKind::lin, WordOrderKind::fm}) {
      const WordOrder& order = word_order(n, kind);
      std::size_t const size = order.basis().size();
      for (std::size_t a = 0; a < size; ++a) {
        partial.expect(order.leq(a, a), [&] {
          return "not reflexive at " + args(order.basis()[a]);
        });
        for (std::size_t b : order.up_set(a)) {
          partial.expect(b == a || !order.leq(b, a), [&] {
            return "not antisymmetric at " +
                   args(order.basis()[a], order.basis()[b]);
          });
          for (std::size_t c : order.up_set(b)) {
            partial.expect(order.leq(a, c), [&] {
              return "not transitive at " +
                     args(order.basis()[a], order.basis()[b], order.basis()[c]);
            });
          }
        }
      }
    }

    const WordOrder& lin_order = word_order(n, WordOrderKind::lin);
    const WordOrder& fm_order = word_order(n, WordOrderKind::fm);
    auto const& words = lin_order.basis();
    for (std::size_t a = 0; a < words.size(); ++a) {
      const PackedWord& f = words[a];
      auto const extensions = lin_extensions(dp(f));
      std::vector<PackedWord> up;
      for (std::size_t b : lin_order.up_set(a)) up.push_back(words[b]);
      lin.expect(extensions == up, [&] { return "mismatch at " + args(f); });

      std::vector<PackedWord> assembled;
      for (const auto& g : extensions) {
        for (std::size_t h : fm_order.down_set(fm_order.index_of(g))) {
          assembled.push_back(words[h]);
        }
      }
      std::sort(assembled.begin(), assembled.end());
      bool const disjoint =
          std::adjacent_find(assembled.begin(), assembled.end()) ==
          assembled.end();
      wlin.expect(disjoint && assembled == weak_lin_extensions(dp(f)),
                  [&] { return "decomposition fails at " + args(f); });

      if (f.max_letter() == n) {
        auto const inv_f = inversion_set(f);
        for (const auto& g : words) {
          if (g.max_letter() != n) continue;
          auto const inv_g = inversion_set(g);
          bool const contained =
              std::includes(inv_g.begin(), inv_g.end(), inv_f.begin(), inv_f.end());
          perms.expect(leq_lin(f, g) == contained,
                       [&] { return "mismatch at " + args(f, g); });
        }
      }
    }
  }
  return {partial.done(), lin.done(), wlin.done(), perms.done()};
}

std::vector<CheckReport> verify_goldens() {
  using Rows = std::vector<std::vector<Coeff>>;
  Checker matrices("degree-2 matrices");
  auto expect_matrix = [&](MatrixKind kind, const Rows& rows) {
    matrices.expect(matrix_equals(matrix_of(kind, 2), rows), [&] {
      return std::string("matrix ") + std::string(to_string(kind)) +
             " differs:\n" + to_text(matrix_of(kind, 2));
    });
  };
  expect_matrix(MatrixKind::phi, {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
  expect_matrix(MatrixKind::phi_prime, {{1, 1, 0}, {0, 1, 0}, {1, 1, 1}});
  expect_matrix(MatrixKind::pairing, {{1, 1, 0}, {1, 2, 1}, {0, 1, 0}});
  expect_matrix(MatrixKind::pairing_shuffle, {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  expect_matrix(MatrixKind::pairing_dot, {{1, -1, 0}, {-1, 1, 1}, {0, 1, 0}});

  Checker diagrams("PW(2) and PW(3) covering graphs");
  HasseDiagram const h2 = hasse(2, WordOrderKind::lin);
  std::vector<std::pair<PackedWord, PackedWord>> const e2{
      {PackedWord{1, 1}, PackedWord{2, 1}}, {PackedWord{1, 2}, PackedWord{2, 1}}};
  diagrams.expect(h2.edges == e2, [] { return std::string("PW(2) edges differ"); });
  HasseDiagram const h3 = hasse(3, WordOrderKind::lin);
  std::set<PackedWord> below_top;
  std::set<PackedWord> tops;
  for (const auto& [lower, upper] : h3.edges) {
    if (upper == PackedWord{3, 2, 1}) below_top.insert(lower);
    tops.insert(lower);
  }
  std::set<PackedWord> const expected_covers{
      PackedWord{2, 2, 1}, PackedWord{3, 1, 2}, PackedWord{2, 3, 1},
      PackedWord{2, 1, 1}};
  // 321 is the unique maximal node: it is never the lower end of an edge and
  // every other node is.
  bool unique_max = !tops.contains(PackedWord{3, 2, 1}) && tops.size() == 12;
  diagrams.expect(h3.nodes.size() == 13 && below_top == expected_covers &&
                      unique_max,
                  [] { return std::string("PW(3) diagram differs"); });

  Checker products("degree-2 products");
  PackedWord const one{1};
  products.expect(shifted_shuffle(one, one) ==
                      basis(PackedWord{1, 2}) + basis(PackedWord{2, 1}),
                  [] { return std::string("(1) ⧢ (1) differs"); });
  products.expect(qshuffle(one, one) == basis(PackedWord{1, 2}) +
                                            basis(PackedWord{2, 1}) +
                                            basis(PackedWord{1, 1}),
                  [] { return std::string("(1).(1) differs"); });
  return {matrices.done(), diagrams.done(), products.done()};
}

std::vector<CheckReport> run_invariant_suite(std::size_t max_degree) {
  require_verify_degree(max_degree);
  std::vector<CheckReport> out = verify_goldens();
  auto append = [&out](std::vector<CheckReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  out.push_back(verify_bijection(max_degree));
  for (Algebra a : {Algebra::weak_plane_posets, Algebra::wqsym_shuffle,
                    Algebra::wqsym_dot}) {
    HopfStructure const h = hopf_structure(a);
    append(verify_hopf(h, max_degree));
    out.push_back(verify_antipode(h, max_degree));
  }
  append(verify_morphisms(max_degree));
  append(verify_pairing(max_degree));
  append(verify_orders(max_degree));
  return out;
}

}  // namespace wpp
