#include "wpp/fault.hpp"

#include <array>
#include <atomic>
#include <utility>

namespace wpp {

namespace {

std::atomic<Fault> g_fault{Fault::none};

constexpr std::array<std::pair<Fault, std::string_view>, 4> kNames{{
    {Fault::none, "none"},
    {Fault::product_cross_relation, "product-cross-relation"},
    {Fault::open_set_predicate, "open-set-predicate"},
    {Fault::picture_condition, "picture-condition"},
}};

}  // namespace

Fault active_fault() noexcept { return g_fault.load(std::memory_order_relaxed); }

ScopedFault::ScopedFault(Fault fault) : previous_(g_fault.exchange(fault)) {}

ScopedFault::~ScopedFault() { g_fault.store(previous_); }

std::string_view to_string(Fault fault) {
  for (auto [f, name] : kNames) {
    if (f == fault) {
      return name;
    }
  }
  return "unknown";
}

std::optional<Fault> parse_fault(std::string_view name) {
  for (auto [f, n] : kNames) {
    if (n == name) {
      return f;
    }
  }
  return std::nullopt;
}

}  // namespace wpp
