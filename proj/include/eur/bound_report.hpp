#ifndef EUR_BOUND_REPORT_HPP
#define EUR_BOUND_REPORT_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eur/bounds.hpp"

namespace eur {

enum class BoundName {
  DeutschMulti,
  MuMulti,
  Weighted,
  ScbMax,
  MuTwo,
  BertaTwo,
  MemoryMulti,
  MemoryPure,
  StateDependent,
};

inline constexpr std::string_view to_string(BoundName name) {
  switch (name) {
    case BoundName::DeutschMulti: return "DEUTSCH_MULTI";
    case BoundName::MuMulti: return "MU_MULTI";
    case BoundName::Weighted: return "WEIGHTED";
    case BoundName::ScbMax: return "SCB_MAX";
    case BoundName::MuTwo: return "MU_TWO";
    case BoundName::BertaTwo: return "BERTA_TWO";
    case BoundName::MemoryMulti: return "MEMORY_MULTI";
    case BoundName::MemoryPure: return "MEMORY_PURE";
    case BoundName::StateDependent: return "STATE_DEPENDENT";
  }
  return "?";
}

inline constexpr BoundName all_bound_names[] = {
    BoundName::DeutschMulti, BoundName::MuMulti,     BoundName::Weighted,
    BoundName::ScbMax,       BoundName::MuTwo,       BoundName::BertaTwo,
    BoundName::MemoryMulti,  BoundName::MemoryPure,  BoundName::StateDependent,
};

/// Accepts "MU_MULTI", "mu_multi" or "mu-multi".
inline std::optional<BoundName> parse_bound_name(std::string_view text) {
  std::string key(text);
  for (char& ch : key) ch = ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (BoundName name : all_bound_names)
    if (to_string(name) == key) return name;
  return std::nullopt;
}

/// CSV column name: "mu_multi", "scb_max", ...
inline std::string column_name(BoundName name) {
  std::string out(to_string(name));
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

template <typename Real> struct BoundReport {
  BoundName bound_name;
  Real value;
  bool state_dependent;
  std::vector<std::size_t> chain_order;
  std::string note;
};

/// No state, a state of the measured system, or a joint state with memory B.
template <typename Real>
using StateInput = std::variant<std::monostate, DensityMatrix<Real>, BipartiteState<Real>>;

struct ReportOptions {
  bool best_order = false;  // maximize order-dependent bounds over basis orderings
  bool min_entropy = false;  // left-hand side is a sum of H_inf instead of Shannon entropies
};

/// Every bound applicable to `chain` and `state`. Without a state the
/// state-dependent terms are evaluated at S(rho) = 0.
template <typename Real>
std::vector<BoundReport<Real>> bound_reports(const MeasurementChain<Real>& chain,
                                             const StateInput<Real>& state = {},
                                             ReportOptions options = {}) {
  std::optional<DensityMatrix<Real>> rho;
  const BipartiteState<Real>* joint = std::get_if<BipartiteState<Real>>(&state);
  if (const auto* r = std::get_if<DensityMatrix<Real>>(&state)) rho = *r;
  if (joint) rho = partial_trace(*joint, Subsystem::A);
  if (rho) detail::require_same_dim(chain.dim(), rho->dim(), "bound report state");
  const bool has_state = rho.has_value();
  const Real entropy = has_state ? von_neumann_entropy(*rho) : Real(0);
  const auto input_order = detail::identity_order(chain.size());

  std::vector<BoundReport<Real>> out;
  {
    auto d = options.best_order ? best_order_deutsch_multi_bound(chain)
                                : OrderedBound<Real>{deutsch_multi_bound(chain), input_order};
    out.push_back({BoundName::DeutschMulti, d.value, false, d.order,
                   options.best_order ? "best cyclic order; bounds any sum of Renyi entropies"
                                      : "bounds any sum of Renyi entropies"});
  }
  if (options.min_entropy) return out;

  const auto mu = options.best_order ? best_order_mu_multi_bound(chain)
                                     : OrderedBound<Real>{mu_multi_bound(chain), input_order};
  out.push_back({BoundName::MuMulti, mu.value + Real(chain.size() - 1) * entropy, has_state,
                 mu.order, options.best_order ? "best of all orders" : ""});
  if (has_state)
    out.push_back({BoundName::StateDependent, state_dependent_bound(chain.reordered(mu.order), *rho),
                   true, mu.order, ""});
  out.push_back({BoundName::ScbMax, scb_max_bound(chain, entropy), has_state, input_order, ""});
  const auto pair = best_pair_bound(chain, entropy);
  out.push_back({BoundName::MuTwo, pair.value, has_state, pair.order, "best pair"});
  if (chain.size() == 3)
    out.push_back({BoundName::Weighted, weighted_bound(chain[0], chain[1], chain[2], entropy),
                   has_state, input_order, "left-hand side H(M1) + H(M2) + 2 H(M3)"});

  if (joint) {
    out.push_back({BoundName::MemoryMulti, mu.value + Real(chain.size() - 1) * conditional_entropy(*joint),
                   true, mu.order, "conditional entropies H(M|B)"});
    if (joint->is_pure())
      out.push_back({BoundName::MemoryPure, mu.value + conditional_entropy(*joint), true, mu.order,
                     "pure joint state"});
    OrderedBound<Real> berta{-std::numeric_limits<Real>::infinity(), {}};
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i + 1; j < chain.size(); ++j) {
        const Real value = berta_two_bound(chain[i], chain[j], *joint);
        if (value > berta.value) berta = {value, {i, j}};
      }
    out.push_back({BoundName::BertaTwo, berta.value, true, berta.order, "best pair"});
  }
  return out;
}

}  // namespace eur

#endif  // EUR_BOUND_REPORT_HPP
