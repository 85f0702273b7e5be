#include "hopso/ansatz.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <numbers>
#include <vector>

#include "hopso/rng.hpp"
#include "hopso/statevector.hpp"

using hopso::AnsatzSpec;
using hopso::PauliSum;
using hopso::Statevector;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_params(hopso::RandomStream& rng, int count) {
  std::vector<double> p(count);
  for (auto& v : p) v = rng.uniform(-kPi, kPi);
  return p;
}

PauliSum random_sum(hopso::RandomStream& rng, int n_qubits, int terms) {
  PauliSum h(n_qubits);
  const char alphabet[] = {'I', 'X', 'Y', 'Z'};
  for (int t = 0; t < terms; ++t) {
    std::string label;
    for (int q = 0; q < n_qubits; ++q)
      label.push_back(alphabet[rng.uniform_index(4)]);
    h.add_term(rng.uniform(-2.0, 2.0), label);
  }
  return h;
}

}  // namespace

TEST(NumParameters, PaperConfigurations) {
  EXPECT_EQ(num_parameters(AnsatzSpec{4, 3}), 32);
  EXPECT_EQ(num_parameters(AnsatzSpec{8, 4}), 80);
  EXPECT_EQ(num_parameters(AnsatzSpec{1, 0}), 2);
}

TEST(PrepareState, AllZeroParamsGiveVacuum) {
  const AnsatzSpec spec{4, 3};
  const std::vector<double> params(num_parameters(spec), 0.0);
  const auto s = prepare_state(spec, params);
  EXPECT_NEAR(std::abs(s.amp(0)), 1.0, 1e-12);
  for (std::size_t i = 1; i < s.size(); ++i)
    EXPECT_NEAR(std::abs(s.amp(i)), 0.0, 1e-12);
}

TEST(PrepareState, SingleRyPi) {
  const AnsatzSpec spec{1, 0};
  const std::vector<double> params = {kPi, 0.0};
  const auto s = prepare_state(spec, params);
  EXPECT_NEAR(std::abs(s.amp(1)), 1.0, 1e-12);
}

TEST(PrepareState, WrongParameterCountThrows) {
  const AnsatzSpec spec{2, 1};
  EXPECT_THROW(prepare_state(spec, std::vector<double>(3, 0.0)),
               std::invalid_argument);
}

TEST(PrepareState, NormOneForRandomParameters) {
  hopso::RandomStream rng(42);
  const AnsatzSpec spec{4, 3};
  for (int rep = 0; rep < 10; ++rep) {
    const auto params = random_params(rng, num_parameters(spec));
    EXPECT_NEAR(prepare_state(spec, params).norm(), 1.0, 1e-10);
  }
}

TEST(PrepareState, DeterministicBitIdentical) {
  hopso::RandomStream rng(43);
  const AnsatzSpec spec{3, 2};
  const auto params = random_params(rng, num_parameters(spec));
  const auto a = prepare_state(spec, params);
  const auto b = prepare_state(spec, params);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(std::memcmp(a.amplitudes().data(), b.amplitudes().data(),
                        a.size() * sizeof(std::complex<double>)),
            0);
}

// params and params + 4pi give the identical state up to global phase, and
// identical expectations for every Pauli sum.
TEST(PrepareState, FourPiShiftIsExactPeriod) {
  hopso::RandomStream rng(44);
  const AnsatzSpec spec{3, 2};
  auto params = random_params(rng, num_parameters(spec));
  const auto base = prepare_state(spec, params);
  for (auto& v : params) v += 4.0 * kPi;
  const auto shifted = prepare_state(spec, params);

  std::complex<double> overlap{0.0, 0.0};
  for (std::size_t i = 0; i < base.size(); ++i)
    overlap += std::conj(base.amp(i)) * shifted.amp(i);
  EXPECT_NEAR(std::abs(overlap), 1.0, 1e-10);

  for (int rep = 0; rep < 5; ++rep) {
    const auto h = random_sum(rng, 3, 4);
    EXPECT_NEAR(expectation_sum(base, h), expectation_sum(shifted, h), 1e-10);
  }
}

// The cost-landscape periodicity: shifting any single coordinate by 2pi
// leaves every Pauli-sum expectation unchanged.
TEST(PrepareState, ExpectationsTwoPiPeriodicPerCoordinate) {
  hopso::RandomStream rng(45);
  const AnsatzSpec spec{3, 1};
  const int dim = num_parameters(spec);
  const auto params = random_params(rng, dim);
  const auto h = random_sum(rng, 3, 5);
  const double base = expectation_sum(prepare_state(spec, params), h);
  for (int j = 0; j < dim; ++j) {
    auto shifted = params;
    shifted[j] += 2.0 * kPi;
    EXPECT_NEAR(expectation_sum(prepare_state(spec, shifted), h), base, 1e-10)
        << "coordinate " << j;
  }
}
