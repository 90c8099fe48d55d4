#include "mrspec/units.hpp"

#include "mrspec/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace mrspec {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw DomainError(std::string(what) + " must be positive and finite");
}

} // namespace

UnitSystem UnitSystem::atomic() { return UnitSystem{}; }

UnitSystem UnitSystem::molecular(double reduced_mass_amu, std::string label) {
  require_positive(reduced_mass_amu, "reduced mass");
  UnitSystem u;
  u.hbar = kHbarCEvPm;
  u.mu = reduced_mass_amu * kAmuRestEnergyEv;
  u.e2 = kFineStructure * kHbarCEvPm;
  u.hbar_c = kHbarCEvPm;
  u.label = std::move(label);
  u.energy_unit = "eV";
  u.length_unit = "pm";
  return u;
}

UnitSystem UnitSystem::hydrogen() { return molecular(kElectronMassAmu, "hydrogen"); }

UnitSystem UnitSystem::custom(double hbar, double mu, double e2) {
  require_positive(hbar, "hbar");
  require_positive(mu, "mu");
  require_positive(e2, "e^2");
  UnitSystem u;
  u.hbar = hbar;
  u.mu = mu;
  u.e2 = e2;
  u.label = "custom";
  u.energy_unit = "energy";
  u.length_unit = "length";
  return u;
}

double energy_scale(const UnitSystem& u, double b) {
  if (!(b > 0.0))
    throw DomainError("screening length b must be positive");
  return u.hbar * u.hbar / (2.0 * u.mu * b * b);
}

MoleculeRegistry MoleculeRegistry::defaults() {
  MoleculeRegistry reg;
  for (const auto& m : {Molecule{"HCl", 0.9801045}, Molecule{"CH", 0.929931},
                        Molecule{"LiH", 0.8801221}, Molecule{"CO", 6.8606719}})
    reg.entries_.emplace(m.name, m);
  return reg;
}

MoleculeRegistry MoleculeRegistry::parse(std::string_view text, std::string_view source) {
  MoleculeRegistry reg = defaults();
  std::map<std::string, int, std::less<>> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    const auto where = std::string(source) + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(where + ": expected `name = mass_amu`");
    const auto name = std::string(trim(line.substr(0, eq)));
    const auto value_text = std::string(trim(line.substr(eq + 1)));
    if (name.empty())
      throw ConfigError(where + ": empty molecule name");

    double mass = 0.0;
    std::size_t used = 0;
    try {
      mass = std::stod(value_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value_text.size())
      throw ConfigError(where + ": cannot parse mass '" + value_text + "'");
    if (!(mass > 0.0) || !std::isfinite(mass))
      throw ConfigError(where + ": reduced mass must be positive");

    if (auto [it, inserted] = seen.emplace(name, line_no); !inserted)
      throw ConfigError(where + ": duplicate molecule '" + name + "' (first defined on line " +
                        std::to_string(it->second) + ")");
    reg.entries_.insert_or_assign(name, Molecule{name, mass});
  }
  return reg;
}

MoleculeRegistry MoleculeRegistry::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open molecule registry " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path.string());
}

MoleculeRegistry MoleculeRegistry::from_environment() {
  const char* path = std::getenv("MRSPEC_REGISTRY");
  if (path == nullptr || *path == '\0')
    return defaults();
  return from_file(path);
}

const Molecule& MoleculeRegistry::lookup(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end())
    throw NotFoundError("unknown molecule '" + std::string(name) + "'");
  return it->second;
}

bool MoleculeRegistry::contains(std::string_view name) const {
  return entries_.find(name) != entries_.end();
}

std::vector<Molecule> MoleculeRegistry::molecules() const {
  std::vector<Molecule> out;
  out.reserve(entries_.size());
  for (const auto& [_, m] : entries_)
    out.push_back(m);
  return out;
}

std::vector<Molecule> molecule_registry() { return MoleculeRegistry::defaults().molecules(); }

} // namespace mrspec
