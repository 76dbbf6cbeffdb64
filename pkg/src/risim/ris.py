"""Active/passive RIS element model.

Each element chains a receive antenna, an LNA, an N_d-way power splitter and
one digital phase shifter per branch.  The per-branch transmission
coefficient is the product of the three stage coefficients; its magnitude is
set by the gain/loss budget and its phase by the shifter state.  Passive
arrays keep the same phase quantization but reflect with at most unit
magnitude and draw no amplifier power.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * math.pi

#: Codeword spaces larger than this many entries are reported as
#: :data:`SPACE_TOO_LARGE` instead of an exact count.
DEFAULT_SPACE_LIMIT = 2**40

#: Marker returned by :func:`codeword_space_size` when M**K exceeds the limit.
SPACE_TOO_LARGE = math.inf


@dataclass(frozen=True)
class PhaseShifterSpec:
    """Digital phase shifter with ``levels`` uniformly spaced states.

    ``levels`` must be a power of two (binary control word), so the step
    2*pi/levels times levels recovers 2*pi exactly in floating point.
    """

    levels: int = 16
    insertion_loss_db: float = 3.0

    def __post_init__(self):
        m = int(self.levels)
        if m < 2 or (m & (m - 1)) != 0:
            raise ValueError(f"phase levels must be a power of two >= 2, got {self.levels}")
        if self.insertion_loss_db < 0:
            raise ValueError("insertion_loss_db must be >= 0")

    @property
    def step(self) -> float:
        """Phase increment between adjacent states, radians."""
        return TWO_PI / self.levels


@dataclass(frozen=True)
class AmplifierSpec:
    """LNA model: flat gain, per-branch input noise, gain-scaled power draw.

    The power draw is anchored at (p_ref_mw, g_ref_db) and scaled linearly
    with the gain: P(g) = p_ref_mw * 10**((g - g_ref_db)/10).  The default
    reference is a 300 mW amplifier at 20 dB.
    """

    gain_db: float = 20.0
    noise_var: float = 0.0
    p_ref_mw: float = 300.0
    g_ref_db: float = 20.0

    def __post_init__(self):
        if self.noise_var < 0:
            raise ValueError("noise_var must be >= 0")
        if self.p_ref_mw <= 0:
            raise ValueError("p_ref_mw must be > 0")

    def power_mw(self) -> float:
        """Power drawn at the configured gain, scaled from the reference point."""
        return self.p_ref_mw * 10.0 ** ((self.gain_db - self.g_ref_db) / 10.0)


@dataclass(frozen=True)
class RisArrayConfig:
    """One RIS array: k_ris elements, each feeding n_d phase-shifted branches.

    The K = k_ris * n_d branches are the controllable transmit antennas; a
    codeword assigns one shifter state to each.  Passive arrays have a single
    branch per element, inject no amplifier noise and reflect with magnitude
    10**(-insertion_loss_db/20) <= 1.
    """

    mode: str = "active"
    k_ris: int = 16
    n_d: int = 1
    splitter_loss_db: float = 9.0
    shifter: PhaseShifterSpec = field(default_factory=PhaseShifterSpec)
    amp: AmplifierSpec = field(default_factory=AmplifierSpec)
    p_dps_mw: float = 0.005
    element_spacing: float = 0.5 * 299792458.0 / 3.5e9

    def __post_init__(self):
        if self.mode not in ("active", "passive"):
            raise ValueError(f"mode must be 'active' or 'passive', got {self.mode!r}")
        if self.k_ris < 1 or self.n_d < 1:
            raise ValueError("k_ris and n_d must be >= 1")
        if self.mode == "passive":
            if self.n_d != 1:
                raise ValueError("passive arrays have a single branch per element (n_d = 1)")
            if self.amp.noise_var != 0.0:
                raise ValueError("passive arrays cannot inject amplifier noise")
        if self.p_dps_mw < 0:
            raise ValueError("p_dps_mw must be >= 0")
        if self.element_spacing <= 0:
            raise ValueError("element_spacing must be > 0")

    @property
    def k(self) -> int:
        """Total number of controllable branches, K = k_ris * n_d."""
        return self.k_ris * self.n_d

    @property
    def levels(self) -> int:
        return self.shifter.levels


def active_array(k_ris: int, n_d: int = 1, levels: int = 2, gain_db: float = 20.0,
                 noise_var: float = 0.0, splitter_loss_db: float = 9.0,
                 insertion_loss_db: float = 3.0, **kwargs) -> RisArrayConfig:
    """Convenience constructor for an active array."""
    return RisArrayConfig(
        mode="active", k_ris=k_ris, n_d=n_d,
        splitter_loss_db=splitter_loss_db,
        shifter=PhaseShifterSpec(levels=levels, insertion_loss_db=insertion_loss_db),
        amp=AmplifierSpec(gain_db=gain_db, noise_var=noise_var),
        **kwargs,
    )


def passive_array(k_ris: int, levels: int = 2, insertion_loss_db: float = 0.0,
                  **kwargs) -> RisArrayConfig:
    """Convenience constructor for a passive (reflect-only) array."""
    return RisArrayConfig(
        mode="passive", k_ris=k_ris, n_d=1, splitter_loss_db=0.0,
        shifter=PhaseShifterSpec(levels=levels, insertion_loss_db=insertion_loss_db),
        amp=AmplifierSpec(gain_db=0.0, noise_var=0.0),
        **kwargs,
    )


@dataclass(frozen=True)
class PhaseCodeword:
    """A full assignment of shifter states: one index in [0, M) per branch."""

    indices: tuple[int, ...]

    @classmethod
    def of(cls, indices) -> "PhaseCodeword":
        return cls(tuple(int(i) for i in np.asarray(indices).ravel()))

    @classmethod
    def zeros(cls, cfg: RisArrayConfig) -> "PhaseCodeword":
        return cls((0,) * cfg.k)

    def __len__(self) -> int:
        return len(self.indices)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.indices, dtype=np.int64)

    def with_index(self, k: int, m: int) -> "PhaseCodeword":
        """Copy with position k set to phase index m."""
        items = list(self.indices)
        items[k] = int(m)
        return PhaseCodeword(tuple(items))


def validate_codeword(codeword: PhaseCodeword, cfg: RisArrayConfig) -> None:
    if len(codeword) != cfg.k:
        raise ValueError(f"codeword length {len(codeword)} != K = {cfg.k}")
    m = cfg.levels
    for i in codeword.indices:
        if not 0 <= i < m:
            raise ValueError(f"phase index {i} outside [0, {m})")


def coefficient_magnitude(cfg: RisArrayConfig) -> float:
    """|Phi| common to every branch; the phase index only rotates it."""
    if cfg.mode == "passive":
        return 10.0 ** (-cfg.shifter.insertion_loss_db / 20.0)
    net_db = cfg.amp.gain_db - cfg.splitter_loss_db - cfg.shifter.insertion_loss_db
    return 10.0 ** (net_db / 20.0)


def element_coefficient(index: int, cfg: RisArrayConfig) -> complex:
    """Transmission coefficient of one branch at the given shifter state.

    Magnitude comes from the gain/loss budget (amplifier minus splitter and
    shifter losses for active arrays; reflection loss only for passive
    arrays); the argument is index * 2*pi/M.
    """
    m = cfg.levels
    if not 0 <= index < m:
        raise ValueError(f"phase index {index} outside [0, {m})")
    phase = index * cfg.shifter.step
    return coefficient_magnitude(cfg) * complex(math.cos(phase), math.sin(phase))


def phi_diagonal(codeword: PhaseCodeword, cfg: RisArrayConfig) -> np.ndarray:
    """Diagonal of the K x K transmission matrix as a length-K vector."""
    validate_codeword(codeword, cfg)
    phases = codeword.as_array() * cfg.shifter.step
    return coefficient_magnitude(cfg) * np.exp(1j * phases)


def build_phi(codeword: PhaseCodeword, cfg: RisArrayConfig) -> np.ndarray:
    """Dense K x K diagonal transmission matrix for a codeword."""
    return np.diag(phi_diagonal(codeword, cfg))


def power_consumption(cfg: RisArrayConfig) -> float:
    """Total static power draw of the array in milliwatts.

    Passive: K shifters only.  Active: one gain-scaled LNA per element plus
    the K shifters.  The per-LNA figure is available separately as
    ``cfg.amp.power_mw()``.
    """
    p_shifters = cfg.k * cfg.p_dps_mw
    if cfg.mode == "passive":
        return p_shifters
    return cfg.k_ris * cfg.amp.power_mw() + p_shifters


def codeword_space_size(cfg: RisArrayConfig, limit: float = DEFAULT_SPACE_LIMIT):
    """Number of distinct codewords M**K, or SPACE_TOO_LARGE above ``limit``."""
    exponent = cfg.k * math.log2(cfg.levels)
    if exponent > math.log2(limit) + 1e-9:
        return SPACE_TOO_LARGE
    size = cfg.levels**cfg.k
    return size if size <= limit else SPACE_TOO_LARGE


def random_codeword(cfg: RisArrayConfig, rng: np.random.Generator) -> PhaseCodeword:
    """Uniform i.i.d. draw over the codeword space; deterministic per rng state."""
    return PhaseCodeword.of(rng.integers(0, cfg.levels, size=cfg.k))
