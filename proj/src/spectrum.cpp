#include "mrspec/spectrum.hpp"

#include "mrspec/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace mrspec {

namespace {

constexpr std::string_view kOrbitalLetters = "spdfghiklmnoqrtuvwxyz";

void require_state(const QuantumState& s) {
  if (s.n < 0 || s.l < 0)
    throw DomainError("quantum numbers must be non-negative");
}

std::string describe(const QuantumState& s) {
  return "(n=" + std::to_string(s.n) + ", l=" + std::to_string(s.l) + ")";
}

} // namespace

std::string QuantumState::label() const {
  require_state(*this);
  if (static_cast<std::size_t>(l) >= kOrbitalLetters.size())
    return std::to_string(n + l + 1) + "[l=" + std::to_string(l) + "]";
  return std::to_string(n + l + 1) + kOrbitalLetters[static_cast<std::size_t>(l)];
}

QuantumState QuantumState::parse(std::string_view label) {
  const auto bad = [&](std::string_view why) {
    return ConfigError("bad state label '" + std::string(label) + "': " + std::string(why));
  };
  if (label.size() < 2)
    throw bad("expected principal number and orbital letter, e.g. 2p");
  int principal = 0;
  const auto* first = label.data();
  const auto* last = label.data() + label.size() - 1;
  auto [ptr, ec] = std::from_chars(first, last, principal);
  if (ec != std::errc{} || ptr != last)
    throw bad("principal number is not an integer");
  const auto pos = kOrbitalLetters.find(static_cast<char>(std::tolower(*last)));
  if (pos == std::string_view::npos)
    throw bad("unknown orbital letter");
  const int l = static_cast<int>(pos);
  const int n = principal - l - 1;
  if (n < 0)
    throw bad("principal number must exceed l");
  return {n, l};
}

NUParameters nu_parameters(const PotentialParams& p, const QuantumState& s) {
  require_state(s);
  const double one_minus_2a = 1.0 - 2.0 * p.alpha;
  const double ll = static_cast<double>(s.l) * (s.l + 1);
  const double a = std::sqrt(one_minus_2a * one_minus_2a + 4.0 * ll);
  return {a, 0.5 * (a - 1.0)};
}

double epsilon_raw(const PotentialParams& p, const QuantumState& s) {
  const auto [a, Lambda] = nu_parameters(p, s);
  const double n1 = s.n + 1.0;
  const double ll = static_cast<double>(s.l) * (s.l + 1);
  return (p.A - n1 * n1 - ll - (2.0 * s.n + 1.0) * Lambda) / (2.0 * (n1 + Lambda));
}

double epsilon_of(const PotentialParams& p, const QuantumState& s) {
  if (!is_bound(p, s))
    throw NoBoundStateError("state " + describe(s) + " is not bound: A = " +
                            std::to_string(p.A) + " <= A_c = " +
                            std::to_string(critical_coupling(s, p.alpha)));
  return epsilon_raw(p, s);
}

double energy(const PotentialParams& p, const UnitSystem& u, const QuantumState& s) {
  const double eps = epsilon_raw(p, s);
  return -energy_scale(u, p.b) * eps * eps;
}

NUSolution solve_state(const PotentialParams& p, const UnitSystem& u, const QuantumState& s) {
  const auto [a, Lambda] = nu_parameters(p, s);
  const double eps = epsilon_of(p, s);
  return {a, Lambda, eps, -energy_scale(u, p.b) * eps * eps};
}

double critical_coupling(const QuantumState& s, double alpha) {
  const double Lambda = nu_parameters(PotentialParams{0.0, alpha, 1.0}, s).Lambda;
  const double m = s.n + 1.0 + Lambda;
  return m * m - Lambda * (Lambda + 1.0) + static_cast<double>(s.l) * (s.l + 1);
}

bool is_bound(const PotentialParams& p, const QuantumState& s) {
  return p.A > critical_coupling(s, p.alpha);
}

std::vector<StateEnergy> enumerate_bound_states(const PotentialParams& p, const UnitSystem& u,
                                                int l_max) {
  if (l_max < 0)
    throw DomainError("l_max must be non-negative");
  p.validate();
  std::vector<StateEnergy> out;
  for (int l = 0; l <= l_max; ++l) {
    // A_c grows without bound in n, so this terminates.
    for (int n = 0; is_bound(p, {n, l}); ++n)
      out.push_back({{n, l}, energy(p, u, {n, l})});
  }
  std::stable_sort(out.begin(), out.end(), [](const StateEnergy& x, const StateEnergy& y) {
    if (x.energy != y.energy)
      return x.energy < y.energy;
    if (x.state.l != y.state.l)
      return x.state.l < y.state.l;
    return x.state.n < y.state.n;
  });
  return out;
}

double hulthen_coupling(double Z, double delta, const UnitSystem& u) {
  if (!(delta > 0.0))
    throw DomainError("screening parameter delta must be positive");
  return 2.0 * u.mu * Z * u.e2 / (u.hbar * u.hbar * delta);
}

double hulthen_energy(double A, double b, const UnitSystem& u, const QuantumState& s) {
  require_state(s);
  if (!(b > 0.0))
    throw DomainError("screening length b must be positive");
  const double N = s.n + s.l + 1.0;
  if (!(A > N * N))
    throw NoBoundStateError("Hulthen state " + describe(s) + " is not bound");
  const double gap = A - N * N;
  return -gap * gap * u.hbar * u.hbar / (8.0 * u.mu * b * b * N * N);
}

double coulomb_energy(double Z, const UnitSystem& u, const QuantumState& s) {
  require_state(s);
  if (!(Z > 0.0))
    throw DomainError("nuclear charge Z must be positive");
  const double N = s.n + s.l + 1.0;
  const double a0 = u.hbar * u.hbar / (u.mu * u.e2);
  const double eps0 = Z * Z * u.hbar * u.hbar / (2.0 * u.mu * a0 * a0);
  return -eps0 / (N * N);
}

} // namespace mrspec
