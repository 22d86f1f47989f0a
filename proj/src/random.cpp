#include "ssrm/random.hpp"

#include "ssrm/normal.hpp"

namespace ssrm {

double CounterRng::next_normal() { return normal_quantile(next_uniform()); }

double normal_at(const CounterRng& rng, std::uint64_t k) {
  return normal_quantile(CounterRng::to_open_unit(rng.at(k)));
}

}  // namespace ssrm
