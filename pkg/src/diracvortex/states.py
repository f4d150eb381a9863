"""Quantum numbers, energies and the four exact spinor families.

A state is labelled by the sign of its spin, the sign of its orbital angular
momentum, the magnitude l >= 0 of the latter, and the radial index p >= 0.
States with l = 0 belong to the (spin>0, OAM>=0) and (spin<0, OAM<=0)
families; the two mixed-sign families start at l = 1.

All spinors are evaluated unnormalised, exactly as the closed forms read;
``normalization_constant`` supplies the separate multiplier that makes the
transverse integral of the probability density equal one per unit length.
"""

from dataclasses import dataclass
import math

import numpy as np

from .laguerre import eval_laguerre, factorial_ratio

#: family keys in the canonical order used throughout
FAMILIES = ((1, 1), (-1, 1), (1, -1), (-1, -1))


@dataclass(frozen=True)
class QuantumNumbers:
    spin_sign: int
    oam_sign: int
    l: int
    p: int

    def __post_init__(self):
        if self.spin_sign not in (-1, 1) or self.oam_sign not in (-1, 1):
            raise ValueError("spin_sign and oam_sign must be +1 or -1")
        if self.l < 0 or self.p < 0:
            raise ValueError("l and p must be >= 0")
        if self.l == 0 and self.spin_sign != self.oam_sign:
            raise ValueError(
                "l = 0 states belong to the (spin>0, OAM>=0) and (spin<0, OAM<=0) "
                "families; use oam_sign = spin_sign"
            )

    @property
    def family(self):
        return (self.spin_sign, self.oam_sign)

    @property
    def canonical_jz(self) -> float:
        """Eigenvalue of -i d/dphi + Sigma_z/2: oam_sign*l + spin_sign/2."""
        return self.oam_sign * self.l + 0.5 * self.spin_sign

    @property
    def interaction_index(self) -> int:
        """Landau plus Zeeman energy squared in units of 2 B|e| (an integer)."""
        return (2 * self.p + self.l * (1 + self.oam_sign) + 1 + self.spin_sign) // 2

    def spin_orbit_partner(self):
        """The opposite-spin state sharing squared energy and canonical J_z.

        Returns None for the protected ground family (spin<0, OAM<=0, p=0),
        which has no degenerate opposite-spin companion.
        """
        s, o, l, p = self.spin_sign, self.oam_sign, self.l, self.p
        if (s, o) == (1, 1):
            return QuantumNumbers(-1, 1, l + 1, p)
        if (s, o) == (-1, 1):
            return QuantumNumbers(1, 1, l - 1, p)
        if (s, o) == (1, -1):
            return QuantumNumbers(-1, -1, l - 1, p + 1)
        if p == 0:
            return None
        return QuantumNumbers(1, -1, l + 1, p - 1)


@dataclass(frozen=True)
class BeamParameters:
    """Magnetic coupling beB = B|e| (energy^2), mass m and momentum k along the field."""
    beB: float
    m: float = 1.0
    k: float = 0.0

    def __post_init__(self):
        if self.beB < 0.0:
            raise ValueError("beB must be >= 0")
        if self.m <= 0.0:
            raise ValueError("mass must be > 0")


@dataclass(frozen=True)
class EnergyDecomposition:
    landau_sq: float
    zeeman_sq: float
    total: float

    @property
    def interaction_sq(self) -> float:
        """Landau plus Zeeman squared energy; exactly zero for the ground family."""
        return self.landau_sq + self.zeeman_sq


@dataclass(frozen=True)
class SpinorValue:
    components: np.ndarray          # 4 complex entries
    point: tuple                    # (r, phi, z, t) with r the rescaled radius


def energy(qn: QuantumNumbers, bp: BeamParameters) -> EnergyDecomposition:
    """Landau, Zeeman and total energy of the state.

    landau_sq = beB (2p + l(1 + oam_sign) + 1) is independent of l for
    negative orbital angular momentum (kinetic and magnetic parts cancel);
    zeeman_sq = spin_sign * beB.  The total is
    sqrt(m^2 + k^2 + landau_sq + zeeman_sq) and never drops below
    sqrt(m^2 + k^2), reached exactly by the p = 0 ground family where the
    Zeeman shift cancels the lowest Landau level.
    """
    landau_sq = bp.beB * (2 * qn.p + qn.l * (1 + qn.oam_sign) + 1)
    zeeman_sq = float(qn.spin_sign) * bp.beB
    total = math.sqrt(bp.m**2 + bp.k**2 + landau_sq + zeeman_sq)
    return EnergyDecomposition(landau_sq, zeeman_sq, total)


def scalar_mode(qn: QuantumNumbers, bp: BeamParameters, point) -> complex:
    """Scalar vortex profile r^l e^{-r^2/2} L_p^l(r^2) e^{i(kz - Et +- l phi)}."""
    r, phi, z, t = point
    if r < 0.0:
        raise ValueError("radius must be >= 0")
    en = energy(qn, bp).total
    radial = r**qn.l * math.exp(-0.5 * r * r) * eval_laguerre(qn.p, qn.l, r * r)
    phase = np.exp(1j * (bp.k * z - en * t + qn.oam_sign * qn.l * phi))
    return complex(radial * phase)


def _spin_orbit_radial(qn: QuantumNumbers, r2):
    """Family-specific (sign * factor, l-power, Laguerre value) of the mixing term."""
    l, p = qn.l, qn.p
    fam = qn.family
    if fam == (1, 1):
        return 1.0, l + 1, eval_laguerre(p, l + 1, r2)
    if fam == (-1, 1):
        return -float(p + l), l - 1, eval_laguerre(p, l - 1, r2)
    if fam == (1, -1):
        return -float(p + 1), l - 1, eval_laguerre(p + 1, l - 1, r2)
    return 1.0, l + 1, eval_laguerre(p - 1, l + 1, r2)


def evaluate_spinor(qn: QuantumNumbers, bp: BeamParameters, point,
                    include_spin_orbit: bool = True) -> SpinorValue:
    """The exact four-component solution at a spacetime point, unnormalised.

    The value is the main bispinor column (entries m + E and +-k) times the
    scalar mode plus the opposite-spin mixing column, whose amplitude carries
    sqrt(2 beB) and one unit of orbital angular momentum transferred from
    spin.  ``include_spin_orbit=False`` drops the mixing term, which is used
    by the half-integer angular-momentum checks.  For the ground family
    (spin<0, OAM<=0, p=0) the mixing term is identically zero.
    """
    r, phi, z, t = point
    if r < 0.0:
        raise ValueError("radius must be >= 0")
    en = energy(qn, bp).total
    m, k = bp.m, bp.k
    envelope = math.exp(-0.5 * r * r)
    carrier = np.exp(1j * (bp.k * z - en * t))
    vortex = np.exp(1j * qn.oam_sign * qn.l * phi)
    main = r**qn.l * eval_laguerre(qn.p, qn.l, r * r) * envelope * carrier * vortex

    comp = np.zeros(4, dtype=complex)
    spin_up = qn.spin_sign > 0
    if spin_up:
        comp[0] = (m + en) * main
        comp[2] = k * main
    else:
        comp[1] = (m + en) * main
        comp[3] = -k * main

    if include_spin_orbit:
        factor, lpow, lag = _spin_orbit_radial(qn, r * r)
        # e^{+i phi} for spin up, e^{-i phi} for spin down
        twist = np.exp(1j * qn.spin_sign * phi)
        so = (math.sqrt(2.0 * bp.beB) * 1j * factor * r**lpow * lag
              * envelope * carrier * vortex * twist)
        comp[3 if spin_up else 2] = so
    return SpinorValue(comp, (r, phi, z, t))


def normalization_constant(qn: QuantumNumbers, bp: BeamParameters) -> float:
    """Multiplier making the transverse integral of the density equal one.

    The unnormalised integral is 2 pi E (E + m) (l+p)!/p! per unit length.
    """
    en = energy(qn, bp).total
    return 1.0 / math.sqrt(2.0 * math.pi * en * (en + bp.m) * factorial_ratio(qn.l, qn.p))


@dataclass(frozen=True)
class SpectrumEntry:
    qn: QuantumNumbers
    energy: EnergyDecomposition
    canonical_jz: float
    partner: QuantumNumbers | None


def spectrum_table(bp: BeamParameters, max_levels: int):
    """Enumerate the low-lying levels sorted by (canonical J_z, squared energy).

    Includes every state whose Landau plus Zeeman squared energy is below
    2 beB max_levels, i.e. interaction index <= max_levels - 1.  Because that
    energy is l-independent for negative orbital angular momentum, l is
    additionally capped at max_levels to keep the table finite (a window in
    total angular momentum, matching a level scheme truncated symmetrically).
    With max_levels = 1 only the protected p = 0 ground family survives.

    Each entry carries the opposite-spin partner sharing (squared energy,
    canonical J_z); the ground family, which has none, gets partner = None.
    """
    if max_levels < 1:
        raise ValueError("max_levels must be >= 1")
    entries = []
    for spin, oam in FAMILIES:
        lmin = 0 if spin == oam else 1
        for l in range(lmin, max_levels + 1):
            for p in range(0, max_levels):
                qn = QuantumNumbers(spin, oam, l, p)
                if qn.interaction_index > max_levels - 1:
                    continue
                entries.append(SpectrumEntry(qn, energy(qn, bp), qn.canonical_jz,
                                             qn.spin_orbit_partner()))
    entries.sort(key=lambda e: (round(2 * e.canonical_jz), e.qn.interaction_index,
                                FAMILIES.index(e.qn.family), e.qn.l, e.qn.p))
    return entries
