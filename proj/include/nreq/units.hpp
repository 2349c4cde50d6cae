#ifndef NREQ_UNITS_HPP
#define NREQ_UNITS_HPP

// Physical constants and unit bridges. Internally everything runs in
// natural units (hbar = c = 1, energies in eV); conversions happen only
// at the interfaces below.

namespace nreq::units {

// hbar*c in eV*nm; the single point where volumes in nm^3 become eV^-3.
inline constexpr double hbar_c_ev_nm = 197.3269804;

// Boltzmann constant, eV per kelvin.
inline constexpr double k_boltzmann_ev_per_k = 8.617333262e-5;

// 1 eV in joules; a torque in natural units is an energy, so this is
// also the eV -> N*m conversion factor.
inline constexpr double ev_to_joule = 1.602176634e-19;

// Electron preset: cyclotron frequency in eV per tesla of applied field,
// hbar*e/m_e expressed in eV/T (CODATA, pinned to 6 digits).
inline constexpr double omega_c_ev_per_tesla = 1.15767e-4;

inline constexpr double volume_nm3_to_natural(double v_nm3) {
    return v_nm3 / (hbar_c_ev_nm * hbar_c_ev_nm * hbar_c_ev_nm);
}

inline constexpr double beta_from_kelvin(double t_kelvin) {
    return 1.0 / (k_boltzmann_ev_per_k * t_kelvin);
}

} // namespace nreq::units

#endif
