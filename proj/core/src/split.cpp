#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tempcal/errors.hpp"
#include "tempcal/io.hpp"
#include "tempcal/random.hpp"

namespace tempcal {

SplitResult split(const LogitDataset& data, double calib_fraction,
                  std::uint64_t seed) {
  if (!(calib_fraction > 0.0 && calib_fraction < 1.0)) {
    throw DomainError("calibration fraction must lie in (0, 1), got " +
                      std::to_string(calib_fraction));
  }
  const std::size_t n = data.n_samples();
  if (n < 2) {
    throw DataError("splitting needs at least 2 samples");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.below(i + 1)]);
  }

  const auto floor_count =
      static_cast<std::size_t>(std::floor(calib_fraction * static_cast<double>(n)));
  const std::size_t n_calib = std::max<std::size_t>(1, floor_count);

  std::vector<std::size_t> calib(order.begin(), order.begin() + n_calib);
  std::vector<std::size_t> test(order.begin() + n_calib, order.end());
  std::sort(calib.begin(), calib.end());
  std::sort(test.begin(), test.end());

  LogitDataset calib_set = data.select(calib);
  LogitDataset test_set = data.select(test);
  return {std::move(calib_set), std::move(test_set), std::move(calib), std::move(test)};
}

}  // namespace tempcal
