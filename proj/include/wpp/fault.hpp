#pragma once

// Fault injection for the verification harness. Each fault corrupts one
// defining condition so the invariant suites can be shown to detect it.
// Never active outside a ScopedFault.

#include <optional>
#include <string_view>

namespace wpp {

enum class Fault {
  none,
  product_cross_relation,  // cross pairs of the product run from Q to P
  open_set_predicate,      // open sets become down-closed instead of up-closed
  picture_condition,       // pictures skip the reflection condition
};

Fault active_fault() noexcept;

class ScopedFault {
 public:
  explicit ScopedFault(Fault fault);
  ~ScopedFault();
  ScopedFault(const ScopedFault&) = delete;
  ScopedFault& operator=(const ScopedFault&) = delete;

 private:
  Fault previous_;
};

std::string_view to_string(Fault fault);
std::optional<Fault> parse_fault(std::string_view name);

}  // namespace wpp
