"""PHY abstractions: MCS lookup, data rates, and frame airtimes.

Rates assume an 80 MHz channel with a single spatial stream (980 data
subcarriers), 12.8 us OFDM symbols and 0.8 us guard interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import ConfigError

# Data bits per OFDM symbol for MCS 0-10 at 80 MHz / 1 SS:
# 980 subcarriers x bits-per-subcarrier x coding rate.
_BITS_PER_SYMBOL = (
    980 * 1 * 1 / 2,   # MCS 0, BPSK 1/2
    980 * 2 * 1 / 2,   # MCS 1, QPSK 1/2
    980 * 2 * 3 / 4,   # MCS 2, QPSK 3/4
    980 * 4 * 1 / 2,   # MCS 3, 16-QAM 1/2
    980 * 4 * 3 / 4,   # MCS 4, 16-QAM 3/4
    980 * 6 * 2 / 3,   # MCS 5, 64-QAM 2/3
    980 * 6 * 3 / 4,   # MCS 6, 64-QAM 3/4
    980 * 6 * 5 / 6,   # MCS 7, 64-QAM 5/6
    980 * 8 * 3 / 4,   # MCS 8, 256-QAM 3/4
    980 * 8 * 5 / 6,   # MCS 9, 256-QAM 5/6
    980 * 10 * 3 / 4,  # MCS 10, 1024-QAM 3/4
)

# Default minimum SINR (dB) needed to run each MCS with a low error rate.
# Representative 80 MHz requirement values; override via the config file
# if a different link-adaptation table is wanted.
DEFAULT_MCS_MIN_SINR_DB = (2.0, 5.0, 8.0, 11.0, 15.0, 18.0, 20.0, 25.0, 29.0, 31.0, 34.0)

SERVICE_BITS = 16
TAIL_BITS = 6


@dataclass(frozen=True)
class McsEntry:
    index: int
    bits_per_symbol: float
    min_sinr_db: float


@dataclass(frozen=True)
class TimingConstants:
    """Frame and slot durations (microseconds) plus DCF constants."""

    legacy_preamble_us: float = 20.0
    ofdm_symbol_us: float = 12.8
    guard_interval_us: float = 0.8
    t_map_rts_us: float = 80.0
    t_map_cts_us: float = 62.0
    t_cts_timeout_us: float = 41.0
    t_map_tf_us: float = 76.0
    t_empty_slot_us: float = 9.0
    t_sifs_us: float = 16.0
    t_difs_us: float = 34.0
    t_rts_us: float = 28.0      # legacy RTS at 24 Mbps
    t_cts_us: float = 24.0      # legacy CTS at 24 Mbps
    t_ack_us: float = 24.0      # legacy ACK at 24 Mbps
    payload_bytes: int = 1500
    cw_min: int = 15

    def __post_init__(self):
        for name in (
            "legacy_preamble_us", "ofdm_symbol_us", "guard_interval_us",
            "t_map_rts_us", "t_map_cts_us", "t_cts_timeout_us", "t_map_tf_us",
            "t_empty_slot_us", "t_sifs_us", "t_difs_us", "t_rts_us",
            "t_cts_us", "t_ack_us",
        ):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        if self.payload_bytes <= 0:
            raise ConfigError("payload_bytes must be positive")
        if self.cw_min <= 0:
            raise ConfigError("cw_min must be positive")

    @property
    def symbol_us(self) -> float:
        """Duration of one data OFDM symbol including guard interval."""
        return self.ofdm_symbol_us + self.guard_interval_us


def build_mcs_table(min_sinr_db: Sequence[float] = DEFAULT_MCS_MIN_SINR_DB) -> list[McsEntry]:
    """Build the MCS 0-10 table from a list of 11 SINR thresholds (dB)."""
    if len(min_sinr_db) != len(_BITS_PER_SYMBOL):
        raise ConfigError(f"expected {len(_BITS_PER_SYMBOL)} MCS thresholds, got {len(min_sinr_db)}")
    thresholds = [float(t) for t in min_sinr_db]
    if any(b >= a for a, b in zip(thresholds, thresholds[1:])):
        raise ConfigError("MCS SINR thresholds must be strictly increasing")
    return [McsEntry(i, _BITS_PER_SYMBOL[i], thresholds[i]) for i in range(len(thresholds))]


def select_mcs(sinr_db: float, table: Sequence[McsEntry]) -> Optional[McsEntry]:
    """Highest-index MCS whose threshold is met, or None if even MCS0 fails."""
    chosen = None
    for entry in table:
        if sinr_db >= entry.min_sinr_db:
            chosen = entry
        else:
            break
    return chosen


def data_rate_mbps(mcs: McsEntry, timing: TimingConstants = TimingConstants()) -> float:
    return mcs.bits_per_symbol / timing.symbol_us


def ppdu_airtime_us(payload_bytes: int, mcs: McsEntry, timing: TimingConstants) -> float:
    """Airtime of one data PPDU: preamble plus whole OFDM symbols.

    The payload is framed with 16 service bits and 6 tail bits and padded
    up to a full symbol.
    """
    if payload_bytes <= 0:
        raise ValueError("payload_bytes must be positive")
    bits = SERVICE_BITS + 8 * payload_bytes + TAIL_BITS
    n_symbols = math.ceil(bits / mcs.bits_per_symbol)
    return timing.legacy_preamble_us + n_symbols * timing.symbol_us
