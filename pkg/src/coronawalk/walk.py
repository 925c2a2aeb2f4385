"""Continuous-time walk evolution U(t) = exp(-itM) from a spectral
decomposition, plus the closed-form corona transition element.

M is either the Laplacian (XYZ model) or the adjacency matrix (XY model).
Everything is evaluated through eigenprojectors, never a series matrix
exponential, so unitarity holds to the quality of the projector algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corona_spectrum import CoronaSpectrum
from .graphs import Graph, adjacency, laplacian
from .spectral import SpectralDecomposition

WALK_KINDS = ("laplacian", "adjacency")

# Below this fidelity the phase value/|value| is reported as None.
PHASE_FLOOR = 1e-24


@dataclass(frozen=True)
class TransitionElement:
    """One matrix element <u|U(t)|v> with its fidelity |value|^2 and unit
    phase value/|value| (None when the fidelity is numerically zero)."""

    t: float
    u: int
    v: int
    value: complex
    fidelity: float
    phase: complex | None


def _element(t: float, u: int, v: int, value: complex) -> TransitionElement:
    fidelity = float(abs(value) ** 2)
    phase = complex(value / abs(value)) if fidelity >= PHASE_FLOOR else None
    return TransitionElement(t=float(t), u=u, v=v, value=complex(value), fidelity=fidelity, phase=phase)


def walk_matrix(g: Graph, kind: str = "laplacian") -> np.ndarray:
    """The walk Hamiltonian: L(G) for kind "laplacian", A(G) for "adjacency"."""
    if kind not in WALK_KINDS:
        raise ValueError(f"kind must be one of {WALK_KINDS}, got {kind!r}")
    return laplacian(g) if kind == "laplacian" else adjacency(g)


def _check_vertex(d: SpectralDecomposition, x: int) -> None:
    if not (0 <= x < d.dim):
        raise ValueError(f"vertex {x} out of range for dim {d.dim}")


def transition_values(d: SpectralDecomposition, u: int, v: int, ts) -> np.ndarray:
    """<u|U(t)|v> = sum_lam e^{-i lam t} <u|F_lam|v> on an array of times."""
    _check_vertex(d, u)
    _check_vertex(d, v)
    ts = np.asarray(ts, dtype=float)
    weights = d.projectors[:, u, v]
    return np.exp(-1j * np.outer(ts, d.eigenvalues)) @ weights


def evolve_element(d: SpectralDecomposition, u: int, v: int, t: float) -> TransitionElement:
    value = transition_values(d, u, v, np.array([float(t)]))[0]
    return _element(t, u, v, value)


def evolve_operator(d: SpectralDecomposition, t: float) -> np.ndarray:
    """The full unitary U(t) = sum_lam e^{-i lam t} F_lam."""
    phases = np.exp(-1j * float(t) * d.eigenvalues)
    return np.tensordot(phases, d.projectors.astype(complex), axes=1)


def _check_base_consistency(cs: CoronaSpectrum, g_decomp: SpectralDecomposition) -> None:
    lams = np.array([entry.lam for entry in cs.class_c])
    if len(lams) != len(g_decomp.eigenvalues) or not np.allclose(
        lams, g_decomp.eigenvalues, atol=1e-8, rtol=0.0
    ):
        raise ValueError("corona spectrum was built from a different base graph")
    mults = tuple(entry.multiplicity for entry in cs.class_c)
    if mults != g_decomp.multiplicities:
        raise ValueError("corona spectrum was built from a different base graph")


def corona_transition_values(
    cs: CoronaSpectrum, g_decomp: SpectralDecomposition, u: int, v: int, ts
) -> np.ndarray:
    """Closed-form <(u,0)|U(t)|(v,0)> on the corona, for base vertices u, v.

    value(t) = e^{-it(m+1)/2} * sum over eigenvalues lam of L(G) of
        e^{-it lam/2} <u|F_lam|v> (cos(t D/2) - i ((m+lam-1)/D) sin(t D/2)),
    with D = sqrt((m+lam-1)^2 + 4m). The satellites enter only through m, so
    the element between base vertices never sees their structure.
    """
    _check_base_consistency(cs, g_decomp)
    _check_vertex(g_decomp, u)
    _check_vertex(g_decomp, v)
    m = cs.m
    ts = np.asarray(ts, dtype=float)
    lam = g_decomp.eigenvalues
    weights = g_decomp.projectors[:, u, v]
    delta = np.sqrt((m + lam - 1.0) ** 2 + 4.0 * m)
    coef = (m + lam - 1.0) / delta
    half_t = 0.5 * ts
    osc = np.cos(np.outer(half_t, delta)) - 1j * coef[None, :] * np.sin(np.outer(half_t, delta))
    terms = np.exp(-1j * np.outer(half_t, lam)) * osc
    return np.exp(-1j * (m + 1.0) * half_t) * (terms @ weights)


def corona_transition_element(
    cs: CoronaSpectrum, g_decomp: SpectralDecomposition, u: int, v: int, t: float
) -> TransitionElement:
    value = corona_transition_values(cs, g_decomp, u, v, np.array([float(t)]))[0]
    return _element(t, u, v, value)


def fidelity_curve(source, u: int, v: int, t_grid, *, g_decomp: SpectralDecomposition | None = None) -> list:
    """TransitionElement records over a time grid, in grid order.

    source is either a SpectralDecomposition (any walk matrix) or a
    CoronaSpectrum, in which case g_decomp (the base decomposition) is
    required and the closed-form corona element is used.
    """
    ts = np.asarray(list(t_grid), dtype=float)
    if ts.size == 0:
        raise ValueError("time grid must be nonempty")
    if isinstance(source, CoronaSpectrum):
        if g_decomp is None:
            raise ValueError("a CoronaSpectrum source needs the base decomposition")
        values = corona_transition_values(source, g_decomp, u, v, ts)
    elif isinstance(source, SpectralDecomposition):
        if g_decomp is not None:
            raise ValueError("g_decomp only applies to a CoronaSpectrum source")
        values = transition_values(source, u, v, ts)
    else:
        raise TypeError(f"expected SpectralDecomposition or CoronaSpectrum, got {type(source).__name__}")
    return [_element(t, u, v, value) for t, value in zip(ts, values)]
