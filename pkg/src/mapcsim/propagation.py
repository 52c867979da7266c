"""Path loss, received power and SINR computations.

Path loss follows the TGax enterprise model: free-space-like attenuation up
to a breakpoint distance, a steeper 35 dB/decade slope beyond it, and a
fixed per-wall penalty applied uniformly to every link.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .deployment import Deployment
from .errors import ConfigError


@dataclass(frozen=True)
class PathLossParams:
    breakpoint_m: float = 10.0
    wall_count: int = 3
    center_freq_ghz: float = 5.0

    def __post_init__(self):
        if self.breakpoint_m <= 0:
            raise ConfigError("breakpoint_m must be positive")
        if self.wall_count < 0:
            raise ConfigError("wall_count must be >= 0")
        if self.center_freq_ghz <= 0:
            raise ConfigError("center_freq_ghz must be positive")


@dataclass(frozen=True)
class RssiMatrix:
    """Received power (dBm) at every STA, from every AP, at every Tx power.

    rssi_dbm has shape (num_stas, num_aps, num_power_levels) and
    tx_power_levels_dbm is sorted ascending, so rssi_dbm is nondecreasing
    along its last axis.
    """

    rssi_dbm: np.ndarray
    tx_power_levels_dbm: tuple[float, ...]

    @property
    def num_stas(self) -> int:
        return self.rssi_dbm.shape[0]

    @property
    def num_aps(self) -> int:
        return self.rssi_dbm.shape[1]

    @property
    def num_power_levels(self) -> int:
        return self.rssi_dbm.shape[2]

    @property
    def max_power_index(self) -> int:
        return self.num_power_levels - 1


def path_loss_db(distance_m: float, params: PathLossParams) -> float:
    """Path loss in dB at the given link distance."""
    if distance_m <= 0:
        raise ValueError("distance_m must be positive")
    d = distance_m
    bp = params.breakpoint_m
    beyond_bp = 35.0 * math.log10(d / bp) if d > bp else 0.0
    return (
        40.05
        + 20.0 * math.log10(min(d, bp) * params.center_freq_ghz / 2.4)
        + beyond_bp
        + 7.0 * params.wall_count
    )


def build_rssi_matrix(
    dep: Deployment,
    params: PathLossParams,
    tx_power_levels_dbm: Sequence[float],
) -> RssiMatrix:
    """Fill the (STA, AP, power) RSSI table for a deployment."""
    levels = tuple(float(p) for p in tx_power_levels_dbm)
    if not levels:
        raise ConfigError("at least one transmit power level is required")
    if list(levels) != sorted(levels):
        raise ConfigError("tx_power_levels_dbm must be sorted ascending")

    n, m = dep.total_stas, dep.num_aps
    loss = np.empty((n, m))
    for s, (sx, sy) in enumerate(dep.sta_positions):
        for a, (ax, ay) in enumerate(dep.ap_positions):
            d = math.hypot(sx - ax, sy - ay)
            loss[s, a] = path_loss_db(d, params)
    rssi = np.asarray(levels)[None, None, :] - loss[:, :, None]
    return RssiMatrix(rssi_dbm=rssi, tx_power_levels_dbm=levels)


def dbm_to_mw(dbm: float) -> float:
    return 10.0 ** (dbm / 10.0)


def sinr_db(target_rssi_dbm: float, interferer_rssis_dbm: Sequence[float], noise_floor_dbm: float) -> float:
    """SINR of a link given co-channel interferer powers, all in dBm."""
    denom = dbm_to_mw(noise_floor_dbm)
    for rssi in interferer_rssis_dbm:
        denom += dbm_to_mw(rssi)
    return 10.0 * math.log10(dbm_to_mw(target_rssi_dbm) / denom)


def thermal_noise_dbm(bandwidth_hz: float = 80e6, noise_figure_db: float = 7.0) -> float:
    """Thermal noise floor: -174 dBm/Hz plus bandwidth and receiver noise figure."""
    return -174.0 + 10.0 * math.log10(bandwidth_hz) + noise_figure_db
