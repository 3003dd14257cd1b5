"""Communication and metrology protocols."""

from .bell import (
    chsh_expectation,
    chsh_sample,
    densecode_send,
    teleport,
    teleport_branches,
)
from .clock import clock_phase_demo
from .money import QuantumBill, money_counterfeit, money_issue, money_verify
from .qkd import BB84Session, bb84_run, otp_decrypt, otp_encrypt

__all__ = [
    "BB84Session",
    "QuantumBill",
    "bb84_run",
    "chsh_expectation",
    "chsh_sample",
    "clock_phase_demo",
    "densecode_send",
    "money_counterfeit",
    "money_issue",
    "money_verify",
    "otp_decrypt",
    "otp_encrypt",
    "teleport",
    "teleport_branches",
]
