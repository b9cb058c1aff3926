#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "wpp/error.hpp"
#include "wpp/fault.hpp"
#include "wpp/hopf.hpp"
#include "wpp/hwpp.hpp"
#include "wpp/matrix.hpp"
#include "wpp/morphisms.hpp"
#include "wpp/orders.hpp"
#include "wpp/serialize.hpp"
#include "wpp/verify.hpp"

namespace wpp::cli {

namespace {

// "()" and "" both name the empty word.
PackedWord word_arg(const std::string& text) {
  return text == "()" ? PackedWord() : PackedWord::parse(text);
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Algebra algebra_arg(const std::string& name) {
  auto a = parse_algebra(name);
  if (!a) {
    throw ValidationError("unknown algebra '" + name +
                          "': expected wpp, shuffle or dot");
  }
  return *a;
}

// <u, v> in the chosen algebra: pictures in H_WPP, or the pairing carried to
// WQSym through phi (shuffle) or phi' (dot).
Coeff pairing_in(Algebra a, const PackedWord& u, const PackedWord& v) {
  if (u.size() != v.size()) return 0;
  switch (a) {
    case Algebra::weak_plane_posets:
      return pairing(u, v);
    case Algebra::wqsym_shuffle:
      return induced_pairing(u, v, Via::phi);
    case Algebra::wqsym_dot:
      return induced_pairing(u, v, Via::phi_prime);
  }
  return 0;
}

struct Options {
  std::string word1;
  std::string word2;
  std::string algebra = "wpp";
  bool json = false;
  std::size_t n = 0;
  std::string poset_file;
  std::string matrix_kind;
  std::string format = "text";
  std::string order_kind;
  bool dot = false;
  std::string out_file;
  std::size_t max_degree = 4;
  std::string fault = "none";
};

void emit(std::ostream& out, const std::string& text, const std::string& file) {
  if (file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(file);
  if (!f) throw ValidationError("cannot open output file '" + file + "'");
  f << text;
  if (!f) throw ValidationError("cannot write output file '" + file + "'");
}

int run_verify(const Options& o, std::ostream& out) {
  auto fault = parse_fault(o.fault);
  if (!fault) throw ValidationError("unknown fault '" + o.fault + "'");
  if (o.max_degree > kMaxVerifyDegree) {
    throw CapacityError("verify degree " + std::to_string(o.max_degree) +
                        " exceeds the limit of " +
                        std::to_string(kMaxVerifyDegree));
  }
  ScopedFault guard(*fault);
  auto const reports = run_invariant_suite(o.max_degree);
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.passed) {
      ++passed;
      out << "PASS  " << r.name << " (" << r.cases << " cases)\n";
    } else {
      out << "FAIL  " << r.name << ": " << r.counterexample << "\n";
    }
  }
  out << passed << "/" << reports.size() << " checks passed\n";
  return passed == reports.size() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Packed words, weak plane posets and their Hopf algebras", "wpp"};
  app.require_subcommand(1);
  Options o;

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List PW(n), one word per line, lexicographically");
  enumerate_cmd->add_option("n", o.n, "Word length")->required();

  auto* dp_cmd = app.add_subcommand("dp", "Print the weak plane poset of a packed word as JSON");
  dp_cmd->add_option("word", o.word1, "Packed word, e.g. 212 or 1,10,2,...")->required();

  auto* pack_cmd = app.add_subcommand("pack", "Read a weak plane poset as JSON and print its packed word");
  pack_cmd->add_option("poset", o.poset_file, "JSON file, or - for stdin")->required();

  auto* product_cmd = app.add_subcommand("product", "Product of two basis elements");
  product_cmd->add_option("left", o.word1)->required();
  product_cmd->add_option("right", o.word2)->required();

  auto* coproduct_cmd = app.add_subcommand("coproduct", "Coproduct of a basis element");
  coproduct_cmd->add_option("word", o.word1)->required();

  auto* pairing_cmd = app.add_subcommand("pairing", "Hopf pairing of two basis elements");
  pairing_cmd->add_option("left", o.word1)->required();
  pairing_cmd->add_option("right", o.word2)->required();

  for (auto* cmd : {product_cmd, coproduct_cmd, pairing_cmd}) {
    cmd->add_option("--algebra", o.algebra, "wpp, shuffle or dot")
        ->check(CLI::IsMember({"wpp", "shuffle", "dot"}));
  }
  for (auto* cmd : {product_cmd, coproduct_cmd}) {
    cmd->add_flag("--json", o.json, "Print JSON instead of text");
  }

  auto* matrix_cmd = app.add_subcommand("matrix", "Matrix of a map or pairing in degree n");
  matrix_cmd
      ->add_option("kind", o.matrix_kind,
                   "phi, phiprime, psi, phi-inverse, psi-inverse, pairing, "
                   "pairing-shuffle or pairing-dot")
      ->required();
  matrix_cmd->add_option("n", o.n, "Degree")->required();
  matrix_cmd->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* hasse_cmd = app.add_subcommand("hasse", "Covering graph of an order on PW(n)");
  hasse_cmd->add_option("n", o.n, "Word length")->required();
  hasse_cmd->add_option("order", o.order_kind, "lin or fm")
      ->required()
      ->check(CLI::IsMember({"lin", "fm"}));
  hasse_cmd->add_flag("--dot", o.dot, "Print Graphviz DOT");
  hasse_cmd->add_option("--out", o.out_file, "Write to FILE instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
  verify_cmd->add_option("--max-degree", o.max_degree, "Largest degree checked");
  verify_cmd->add_option("--inject-fault", o.fault)->group("");

  if (!args.empty() && !args[0].starts_with("-") &&
      app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "error: unknown command '" << args[0] << "'\n";
    return kExitInvalid;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else is a usage error.
    int const code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*enumerate_cmd) {
      if (o.n > kMaxEnumerationLength) {
        throw CapacityError("enumerate length " + std::to_string(o.n) +
                            " exceeds the limit of " +
                            std::to_string(kMaxEnumerationLength));
      }
      for_each_packed_word(o.n, [&out](const PackedWord& w) {
        out << w.to_string() << '\n';
      });
    } else if (*dp_cmd) {
      out << to_json(dp(word_arg(o.word1)).base()).dump() << '\n';
    } else if (*pack_cmd) {
      std::string text;
      if (o.poset_file == "-") {
        text = read_all(in);
      } else {
        std::ifstream f(o.poset_file);
        if (!f) throw ValidationError("cannot read poset file '" + o.poset_file + "'");
        text = read_all(f);
      }
      out << pack_poset(as_weak_plane(parse_poset(text))).to_string() << '\n';
    } else if (*product_cmd) {
      auto const h = hopf_structure(algebra_arg(o.algebra));
      ModuleElement const x = h.product(word_arg(o.word1), word_arg(o.word2));
      out << (o.json ? to_json(x).dump() : to_string(x)) << '\n';
    } else if (*coproduct_cmd) {
      auto const h = hopf_structure(algebra_arg(o.algebra));
      TensorElement const t = h.coproduct(word_arg(o.word1));
      out << (o.json ? to_json(t).dump() : to_string(t)) << '\n';
    } else if (*pairing_cmd) {
      out << pairing_in(algebra_arg(o.algebra), word_arg(o.word1),
                        word_arg(o.word2))
          << '\n';
    } else if (*matrix_cmd) {
      auto kind = parse_matrix_kind(o.matrix_kind);
      if (!kind) throw ValidationError("unknown matrix kind '" + o.matrix_kind + "'");
      IntMatrix const m = matrix_of(*kind, o.n);
      if (o.format == "json") {
        out << to_json(m).dump() << '\n';
      } else {
        out << to_text(m);
      }
    } else if (*hasse_cmd) {
      auto const kind = o.order_kind == "lin" ? WordOrderKind::lin : WordOrderKind::fm;
      HasseDiagram const h = hasse(o.n, kind);
      std::string text;
      if (o.dot) {
        text = to_dot(h);
      } else {
        std::ostringstream s;
        for (const auto& [lo, hi] : h.edges) s << lo << " -> " << hi << '\n';
        text = s.str();
      }
      emit(out, text, o.out_file);
    } else if (*verify_cmd) {
      return run_verify(o, out);
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace wpp::cli
