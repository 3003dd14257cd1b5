"""Experiment catalog behind the ``qisim`` command line.

Each experiment turns ``(params, seed, trials)`` into a list of result rows
``{quantity, value, expected, closed_form, stderr, z_score}``.  Monte-Carlo
rows carry the closed-form expectation, a standard error and a z-score;
deterministic rows leave the statistical columns empty.  Everything is a
pure function of its inputs, so output is byte-reproducible.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Tuple

import numpy as np

from . import __version__
from .cqed.jc import (
    dispersive_chi,
    dispersive_chi_numeric,
    jc_block_energies,
    jc_spectrum,
)
from .cqed.kerr import ModeSpec, kerr_expansion, quartic_oracle
from .cqed.lc import LCParams, OnePortNetwork, find_modes, lc_quantize
from .cqed.transmon import (
    TransmonParams,
    charge_dispersion,
    transition_energies,
    transmon_perturbative,
)
from .gates import apply_qft, bell_state
from .measurement import (
    PointerModel,
    conditional_state,
    pointer_probability,
    polarization,
    sample_pointer,
    unconditional_rho,
)
from .protocols.bell import chsh_expectation, chsh_sample, densecode_send, teleport, MESSAGES
from .protocols.clock import clock_overlaps_closed_form, clock_phase_demo
from .protocols.money import counterfeit_pass_count, genuine_pass_count
from .protocols.qkd import bb84_detection_count, bb84_run, detection_probability
from .qec import (
    ErrorChannelSpec,
    encode3,
    entropy_accounting,
    inject_error,
    qec_cycle,
    repetition_logical_error,
    repetition_monte_carlo,
)
from .rng import child_rng
from .states import PureState, binary_entropy

COLUMNS = ("quantity", "value", "expected", "closed_form", "stderr", "z_score")


def row(quantity, value, expected=None, closed_form="", stderr=None):
    z = None
    if expected is not None and stderr is not None and stderr > 0:
        z = (value - expected) / stderr
    return {
        "quantity": quantity,
        "value": float(value),
        "expected": None if expected is None else float(expected),
        "closed_form": closed_form,
        "stderr": None if stderr is None else float(stderr),
        "z_score": None if z is None else float(z),
    }


def rate_row(quantity, hits, n, p, closed_form):
    """Empirical frequency with a binomial standard error at the expected ``p``."""
    se = math.sqrt(p * (1 - p) / n) if n > 0 else None
    return row(quantity, hits / n, p, closed_form, se)


@dataclass(frozen=True)
class Param:
    default: object
    doc: str

    def parse(self, text):
        kind = type(self.default)
        if kind is bool:
            return text.lower() in ("1", "true", "yes")
        return kind(text)


@dataclass(frozen=True)
class Experiment:
    name: str
    summary: str
    references: Tuple[str, ...]
    params: Dict[str, Param]
    default_trials: int
    func: Callable = field(repr=False)

    def resolve(self, overrides):
        unknown = sorted(set(overrides) - set(self.params))
        if unknown:
            raise KeyError(
                f"unknown parameter(s) {', '.join(unknown)} for '{self.name}'; "
                f"allowed: {', '.join(sorted(self.params))}"
            )
        out = {k: p.default for k, p in self.params.items()}
        for k, v in overrides.items():
            out[k] = self.params[k].parse(v) if isinstance(v, str) else v
        return out


CATALOG: Dict[str, Experiment] = {}


def experiment(name, summary, references, params, default_trials=0):
    def wrap(fn):
        CATALOG[name] = Experiment(name, summary, tuple(references), params, default_trials, fn)
        return fn

    return wrap


# ---------------------------------------------------------------------------


@experiment(
    "money",
    "Counterfeit and genuine pass rates for quantum money",
    ["quantum money, counterfeit pass probability (3/4)^N"],
    {
        "N": Param(8, "qubits per bill"),
        "angle": Param(0.0, "rotation of the forger's orthogonal axes in the xz-plane"),
    },
    100_000,
)
def _money(p, seed, trials):
    n = p["N"]
    strategy = ("rotated_axes", p["angle"])
    forged = counterfeit_pass_count(n, trials, child_rng(seed, 0).integers(2**63), strategy)
    genuine = genuine_pass_count(n, trials, child_rng(seed, 1).integers(2**63))
    return [
        rate_row("counterfeit_pass_rate", forged, trials, 0.75**n, "(3/4)^N"),
        rate_row("genuine_pass_rate", genuine, trials, 1.0, "1"),
    ]


@experiment(
    "bb84",
    "BB84 sifting and intercept-resend detection",
    ["BB84 protocol steps a-e, detection probability 1-(3/4)^M"],
    {
        "n_raw": Param(10_000, "raw qubits in the sifting session"),
        "M": Param(20, "tested sifted bits per session"),
    },
    10_000,
)
def _bb84(p, seed, trials):
    s = bb84_run(p["n_raw"], p["M"], False, child_rng(seed, 0))
    rows = [
        rate_row("sift_fraction", s.sifted_indices.size, s.n_raw, 0.5, "1/2"),
        row("no_eve_test_errors", s.test_errors, 0, "0"),
        row("no_eve_key_matches", float(np.array_equal(s.key, s.alice_key)), 1, "1"),
    ]
    if trials > 0:
        hits = bb84_detection_count(p["M"], trials, int(child_rng(seed, 1).integers(2**63)))
        rows.append(
            rate_row("eve_detection_rate", hits, trials, detection_probability(p["M"]), "1-(3/4)^M")
        )
    return rows


@experiment(
    "densecode",
    "Superdense coding round trip for all four messages",
    ["dense coding table 00->X, 01->I, 10->iY, 11->Z"],
    {},
)
def _densecode(p, seed, trials):
    return [row(f"roundtrip_{m}", float(densecode_send(m) == m), 1, "exact") for m in MESSAGES]


@experiment(
    "teleport",
    "Teleportation fidelity and Bell-outcome statistics",
    ["teleportation branch decomposition and correction table"],
    {"theta": Param(1.1, "input polar angle"), "phi": Param(0.4, "input azimuth")},
    10_000,
)
def _teleport(p, seed, trials):
    from .gates import spin_eigenstates

    psi = spin_eigenstates(p["theta"], p["phi"])[0]
    counts = np.zeros(4, dtype=int)
    worst = 1.0
    for i in range(max(trials, 1)):
        out, k, _ = teleport(psi, child_rng(seed, i))
        counts[k] += 1
        worst = min(worst, out.fidelity(psi))
    n = max(trials, 1)
    rows = [row("min_fidelity", worst, 1.0, "1")]
    rows += [rate_row(f"p_B{k}", counts[k], n, 0.25, "1/4") for k in range(4)]
    return rows


def _chsh_state(label):
    if label in ("B0", "B1", "B2", "B3"):
        return bell_state(int(label[1]))
    return PureState.from_labels(label)


@experiment(
    "chsh",
    "CHSH correlator S, exact and sampled",
    ["CHSH S = <XX'> + <ZZ'> - <XZ'> + <ZX'>, S(B0) = -2 sqrt2"],
    {"state": Param("B0", "B0..B3 or a product label such as 'uu'")},
    100_000,
)
def _chsh(p, seed, trials):
    psi = _chsh_state(p["state"])
    exact = chsh_expectation(psi)
    ref = -2 * math.sqrt(2) if p["state"] == "B0" else None
    rows = [row("S_exact", exact, ref, "-2*sqrt(2)" if ref is not None else "")]
    if trials > 0:
        est, se = chsh_sample(psi, trials, child_rng(seed, 0))
        rows.append(row("S_sampled", est, exact, "exact S", se))
    return rows


@experiment(
    "clock",
    "Phase accumulation of product vs GHZ-form clocks",
    ["entangled clock overlaps [(1+e^{-iwt})/2]^N and (1+e^{-iNwt})/2"],
    {
        "N": Param(4, "number of spins"),
        "omega0": Param(1.0, "precession frequency"),
        "t": Param(math.pi / 4, "time"),
    },
)
def _clock(p, seed, trials):
    prod, ghz = clock_phase_demo(p["N"], p["omega0"], p["t"])
    cp, cg = clock_overlaps_closed_form(p["N"], p["omega0"], p["t"])
    return [
        row("product_overlap_re", prod.real, cp.real, "[(1+e^{-iwt})/2]^N"),
        row("product_overlap_im", prod.imag, cp.imag, "[(1+e^{-iwt})/2]^N"),
        row("ghz_overlap_re", ghz.real, cg.real, "(1+e^{-iNwt})/2"),
        row("ghz_overlap_im", ghz.imag, cg.imag, "(1+e^{-iNwt})/2"),
    ]


def _qft_input(kind, n):
    size = 2**n
    if kind == "period2":
        return (np.arange(size) % 2 == 0).astype(float)
    if kind == "constant":
        return np.ones(size)
    if kind.startswith("basis"):
        f = np.zeros(size)
        f[int(kind.split(":")[1])] = 1.0
        return f
    raise ValueError(f"unknown QFT input {kind!r}")


@experiment(
    "qft",
    "Quantum Fourier transform spectral weights",
    ["classical DFT and quantum Fourier transform of an amplitude vector"],
    {
        "n": Param(3, "qubits"),
        "input": Param("period2", "period2, constant or basis:j"),
    },
)
def _qft(p, seed, trials):
    f = _qft_input(p["input"], p["n"])
    out = apply_qft(f).amps
    size = f.size
    dft = np.fft.ifft(f / np.linalg.norm(f)) * np.sqrt(size)
    return [
        row(f"S({j})", abs(out[j]) ** 2, abs(dft[j]) ** 2, "|DFT_j|^2") for j in range(size)
    ]


@experiment(
    "sterngerlach",
    "Pointer entanglement, conditional and unconditional back-action",
    ["pointer model P(R), conditional amplitudes and dephasing by <Phi_up|Phi_down>"],
    {
        "alpha": Param(math.sqrt(0.5), "up amplitude (real; beta = sqrt(1-alpha^2))"),
        "d": Param(0.5, "pointer displacement"),
        "sigma": Param(1.0, "pointer width"),
        "R": Param(0.3, "pointer reading to condition on"),
    },
    10_000,
)
def _stern(p, seed, trials):
    a = p["alpha"]
    b = math.sqrt(max(0.0, 1 - a * a))
    pm = PointerModel(p["d"], p["sigma"])
    rho = unconditional_rho(a, b, pm.overlap())
    cond = conditional_state(a, b, pm, p["R"])
    rows = [
        row("overlap_grid", pm.overlap_on_grid(), pm.overlap(), "exp(-d^2/(2 sigma^2))"),
        row("P(R)", pointer_probability(a, b, pm, p["R"])),
        row("conditional_sz", polarization(cond)[2]),
        row("unconditional_offdiag", abs(rho.mat[0, 1]), a * b * pm.overlap(), "|alpha beta| overlap"),
    ]
    if trials > 0:
        r = sample_pointer(a, b, pm, child_rng(seed, 0), size=trials)
        mean = (a * a - b * b) * p["d"]
        var = p["sigma"] ** 2 + p["d"] ** 2 - mean**2
        rows.append(row("pointer_mean", r.mean(), mean, "(|a|^2-|b|^2) d", math.sqrt(var / trials)))
    return rows


@experiment(
    "repetition",
    "Classical 3-bit repetition code failure rate",
    ["repetition code p_logical = 3p^2 - 2p^3"],
    {"p": Param(0.01, "bit-flip probability")},
    100_000,
)
def _repetition(p, seed, trials):
    pl = repetition_logical_error(p["p"])
    rows = [row("p_logical_closed_form", pl, pl, "3p^2-2p^3")]
    if trials > 0:
        fails = repetition_monte_carlo(p["p"], trials, seed)
        rows.append(rate_row("p_logical_monte_carlo", fails, trials, pl, "3p^2-2p^3"))
    return rows


@experiment(
    "qec3",
    "3-qubit bit-flip code under a coherent X2 error",
    ["coherent error sqrt(1-|e|^2) I + e X2, syndrome table, entropy accounting"],
    {"epsilon": Param(0.3, "error amplitude")},
    10_000,
)
def _qec3(p, seed, trials):
    eps = p["epsilon"]
    ideal = encode3(0.6, 0.8)
    bad = inject_error(ideal, ErrorChannelSpec("coherent", 2, eps))
    flips = 0
    worst = 1.0
    for i in range(trials):
        fixed, rec = qec_cycle(bad, child_rng(seed, i))
        flips += rec.inferred == "X2"
        worst = min(worst, fixed.state.fidelity(ideal.state))
    shannon, ent = entropy_accounting(eps)
    h2 = binary_entropy(min(eps * eps, 1.0))
    rows = []
    if trials > 0:
        rows.append(rate_row("p_syndrome_X2", flips, trials, eps * eps, "|e|^2"))
        rows.append(row("min_fidelity_after_correction", worst, 1.0, "1"))
    rows.append(row("syndrome_shannon_bits", shannon, h2, "H2(|e|^2)"))
    rows.append(row("removed_entanglement_bits", ent, h2, "H2(|e|^2)"))
    return rows


@experiment(
    "lc",
    "LC oscillator quantization and slope-impedance calibration",
    ["LC quantization: Omega = 1/sqrt(LC), Z = sqrt(L/C), zero-point fluctuations"],
    {"L": Param(1.0, "inductance"), "C": Param(1.0, "capacitance")},
)
def _lc(p, seed, trials):
    omega, z, phi, q = lc_quantize(LCParams(p["L"], p["C"]))
    (w_num, z_num), = find_modes(OnePortNetwork.parallel_lc(p["L"], p["C"]))
    return [
        row("Omega", omega, 1 / math.sqrt(p["L"] * p["C"]), "1/sqrt(LC)"),
        row("Z", z, math.sqrt(p["L"] / p["C"]), "sqrt(L/C)"),
        row("Phi_ZPF", phi, math.sqrt(z / 2), "sqrt(Z/2)"),
        row("Q_ZPF", q, math.sqrt(1 / (2 * z)), "sqrt(1/(2Z))"),
        row("Omega_from_admittance_zero", w_num, omega, "1/sqrt(LC)"),
        row("Z_from_admittance_slope", z_num, z, "sqrt(L/C)"),
    ]


@experiment(
    "modes",
    "Normal modes of a one-port reactive network from admittance zeros",
    ["admittance zeros define modes; the slope sets the impedance"],
    {
        "C0": Param(1.0, "shunt capacitance"),
        "L1": Param(1.0, "branch 1 inductance"),
        "C1": Param(1.0, "branch 1 capacitance"),
        "L2": Param(0.1, "branch 2 inductance"),
        "C2": Param(0.5, "branch 2 capacitance"),
    },
)
def _modes(p, seed, trials):
    net = OnePortNetwork(p["C0"], ((p["L1"], p["C1"]), (p["L2"], p["C2"])))
    rows = []
    for j, (w, z) in enumerate(find_modes(net)):
        rows.append(row(f"omega_{j}", w))
        rows.append(row(f"Z_{j}", z))
    return rows


@experiment(
    "transmon",
    "Transmon levels from the charge basis vs the perturbative expansion",
    ["transmon H = 4E_C(n-n_g)^2 - E_J cos(phi); Omega01 ~ sqrt(8 E_J E_C) - E_C, alpha ~ E_C"],
    {
        "EJ": Param(50.0, "Josephson energy"),
        "EC": Param(1.0, "charging energy"),
        "ng": Param(0.0, "offset charge"),
    },
)
def _transmon(p, seed, trials):
    e01, e12 = transition_energies(TransmonParams(p["EJ"], p["EC"], p["ng"]))
    omega, o01, o12, alpha = transmon_perturbative(p["EJ"], p["EC"])
    return [
        row("E01", e01, o01, "sqrt(8 EJ EC) - EC"),
        row("E12", e12, o12, "sqrt(8 EJ EC) - 2 EC"),
        row("anharmonicity", e12 - e01, -alpha, "-EC"),
        row("charge_dispersion_E01", charge_dispersion(p["EJ"], p["EC"])),
    ]


@experiment(
    "jc",
    "Jaynes-Cummings spectrum against the per-block closed form",
    ["Jaynes-Cummings Hamiltonian and its excitation-number doublets"],
    {
        "wr": Param(5.0, "cavity frequency"),
        "wq": Param(6.0, "qubit frequency"),
        "g": Param(0.1, "coupling"),
        "n_max": Param(10, "Fock cutoff"),
    },
)
def _jc(p, seed, trials):
    evals = jc_spectrum(p["wr"], p["wq"], p["g"], p["n_max"])
    ref = [-p["wq"] / 2]
    for n in range(1, 4):
        ref += list(jc_block_energies(p["wr"], p["wq"], p["g"], n))
    ref = sorted(ref)[:5]
    return [row(f"E{k}", evals[k], ref[k], "w_r(n-1/2) +- sqrt(D^2/4 + g^2 n)") for k in range(5)]


@experiment(
    "dispersive",
    "Dispersive shift: exact JC vs -g^2/Delta",
    ["dispersive coupling chi = -g^2/Delta (Delta = w_r - w_q)"],
    {"wr": Param(5.0, "cavity frequency"), "wq": Param(6.0, "qubit frequency"), "g": Param(0.1, "coupling")},
)
def _dispersive(p, seed, trials):
    num = dispersive_chi_numeric(p["wr"], p["wq"], p["g"])
    formula = dispersive_chi(p["wr"], p["wq"], p["g"])
    return [
        row("chi_numeric", num, formula, "-g^2/Delta"),
        row("chi_formula", formula),
        row("relative_error", abs(num - formula) / abs(formula)),
    ]


@experiment(
    "kerr",
    "Kerr coefficients: normal-ordered expansion vs exact quartic diagonalization",
    ["V = sum dw_j n_j + 1/2 sum chi_jk n_j n_k from -(E_J/4!) phi^4"],
    {
        "EJ": Param(3.0, "Josephson energy"),
        "w1": Param(1.0, "mode 1 frequency"),
        "phi1": Param(0.1, "mode 1 phi_zpf"),
        "w2": Param(1.37, "mode 2 frequency (0 for a single mode)"),
        "phi2": Param(0.08, "mode 2 phi_zpf"),
        "n_max": Param(8, "Fock cutoff per mode"),
    },
)
def _kerr(p, seed, trials):
    modes = [ModeSpec(p["w1"], p["phi1"])]
    if p["w2"] > 0:
        modes.append(ModeSpec(p["w2"], p["phi2"]))
    ana = kerr_expansion(modes, p["EJ"])
    fit = quartic_oracle(modes, p["EJ"], p["n_max"])
    rows = []
    m = len(modes)
    for j in range(m):
        rows.append(row(f"delta_omega_{j}", fit.delta_omega[j], ana.delta_omega[j], "normal-ordered RWA"))
    for j in range(m):
        for k in range(j, m):
            rows.append(row(f"chi_{j}{k}", fit.chi[j, k], ana.chi[j, k], "normal-ordered RWA"))
    rows.append(row("fit_residual", fit.residual))
    return rows


# ---------------------------------------------------------------------------


def list_experiments():
    """Catalog entries in stable (alphabetical) order."""
    return [CATALOG[k] for k in sorted(CATALOG)]


def run(name, params=None, seed=0, trials=None):
    """Run one experiment and return a ``{meta, results}`` report."""
    exp = CATALOG[name]
    resolved = exp.resolve(params or {})
    trials = exp.default_trials if trials is None else int(trials)
    if trials < 0:
        raise ValueError("trials must be non-negative")
    rows = exp.func(resolved, int(seed), trials)
    meta = {
        "name": name,
        "params": {k: resolved[k] for k in sorted(resolved)},
        "seed": int(seed),
        "trials": trials,
        "version": __version__,
        "references": list(exp.references),
    }
    return {"meta": meta, "results": rows}
