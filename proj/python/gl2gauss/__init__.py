"""Exact Gauss sums on GL2(Z/p^l Z) and their building blocks."""

from ._core import (
    CharSpec,
    CycElem,
    Error,
    Ring,
    chi,
    counts,
    degree,
    enumerate_specs,
    g_brute,
    g_closed,
    odoni_value,
    psum,
    psum_brute,
    root_of_unity,
    tau,
    tau_x4,
    verify,
)

__all__ = [
    "CharSpec",
    "CycElem",
    "Error",
    "Ring",
    "chi",
    "counts",
    "degree",
    "enumerate_specs",
    "g_brute",
    "g_closed",
    "odoni_value",
    "psum",
    "psum_brute",
    "root_of_unity",
    "tau",
    "tau_x4",
    "verify",
]
