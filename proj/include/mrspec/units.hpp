#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mrspec {

/// Rest energy of one atomic mass unit, eV.
inline constexpr double kAmuRestEnergyEv = 931.494e6;
/// hbar*c as quoted for the molecular tables, eV * Angstrom.
inline constexpr double kHbarCEvAngstrom = 1973.29;
/// Same constant in eV * pm, the length unit of the molecular preset.
inline constexpr double kHbarCEvPm = kHbarCEvAngstrom * 100.0;
inline constexpr double kFineStructure = 1.0 / 137.035999084;
inline constexpr double kElectronMassAmu = 5.48579909065e-4;

/// A consistent set of units for hbar, the reduced mass and the Coulomb
/// coupling e^2.
///
/// The molecular presets work in c = 1 units: `hbar` holds hbar*c (eV pm) and
/// `mu` holds mu*c^2 (eV), so hbar^2/(2 mu b^2) comes out in eV for b in pm.
struct UnitSystem {
  double hbar = 1.0;
  double mu = 1.0;
  /// e^2 in energy * length (1 in atomic units, alpha*hbar*c otherwise).
  double e2 = 1.0;
  /// hbar*c in energy * length; only meaningful for the eV/pm presets.
  std::optional<double> hbar_c;
  std::string label = "atomic";
  std::string energy_unit = "hartree";
  std::string length_unit = "bohr";

  /// hbar = mu = e = 1; hartree and bohr.
  static UnitSystem atomic();
  /// eV and pm for a diatomic molecule of the given reduced mass.
  static UnitSystem molecular(double reduced_mass_amu, std::string label = "molecular");
  /// eV and pm with the electron mass; the Coulomb limit gives -13.6 eV.
  static UnitSystem hydrogen();
  /// User-supplied hbar and mu (and optionally e^2), dimensionless labels.
  static UnitSystem custom(double hbar, double mu, double e2 = 1.0);

  /// hbar^2 / (2 mu).
  double kinetic_coefficient() const { return hbar * hbar / (2.0 * mu); }
};

/// hbar^2 / (2 mu b^2) in the energy unit of `u`. Throws DomainError for b <= 0.
double energy_scale(const UnitSystem& u, double b);

struct Molecule {
  std::string name;
  double reduced_mass_amu = 0.0;
};

/// Name -> reduced mass lookup for the diatomic molecules of the tables.
class MoleculeRegistry {
public:
  /// HCl, CH, LiH and CO.
  static MoleculeRegistry defaults();

  /// Defaults overlaid with the entries of a registry file
  /// (`name = mass_amu` per line, `#` starts a comment). A name listed twice
  /// in the file is a ConfigError; a file entry may redefine a default.
  static MoleculeRegistry from_file(const std::filesystem::path& path);
  static MoleculeRegistry parse(std::string_view text, std::string_view source = "<string>");

  /// Defaults, or `from_file($MRSPEC_REGISTRY)` when the variable is set.
  static MoleculeRegistry from_environment();

  /// Throws NotFoundError for unknown names.
  const Molecule& lookup(std::string_view name) const;
  bool contains(std::string_view name) const;

  /// Sorted by name.
  std::vector<Molecule> molecules() const;

private:
  std::map<std::string, Molecule, std::less<>> entries_;
};

std::vector<Molecule> molecule_registry();

} // namespace mrspec
