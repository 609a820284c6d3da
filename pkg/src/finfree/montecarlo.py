"""Haar-unitary Monte Carlo cross-checks for the exact layer.

Sampling is chunked; chunk c of a run with seed s uses the generator seeded
by SeedSequence(entropy=s, spawn_key=(c,)), and chunk results are folded in
index order, so a report is a pure function of (d, n, seed, chunk_size) down
to the byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _chunk_rng(seed: int, chunk_index: int) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(chunk_index,))
    return np.random.default_rng(ss)


def haar_batch(d: int, m: int, rng: np.random.Generator) -> np.ndarray:
    """m Haar-distributed d x d unitaries, stacked along axis 0.

    QR of complex Ginibre matrices, with the R diagonal's phases pushed into
    Q so the distribution is exactly Haar rather than QR-convention biased.
    """
    z = rng.standard_normal((m, d, d)) + 1j * rng.standard_normal((m, d, d))
    z /= np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.einsum("mii->mi", r)
    mod = np.abs(diag)
    phases = np.where(mod == 0, 1.0 + 0j, diag / np.where(mod == 0, 1.0, mod))
    return q * phases[:, None, :]


def haar_sample(d: int, seed: int) -> np.ndarray:
    """One Haar unitary (the first element of chunk 0 for this seed)."""
    return haar_batch(d, 1, _chunk_rng(seed, 0))[0]


def _elementary_from_traces(traces: np.ndarray) -> np.ndarray:
    """Newton's identities per sample: traces (m, d) -> e_1..e_d (m, d)."""
    m, d = traces.shape
    e = np.zeros((m, d + 1), dtype=complex)
    e[:, 0] = 1.0
    for j in range(1, d + 1):
        acc = np.zeros(m, dtype=complex)
        for i in range(1, j + 1):
            acc += (-1) ** (i - 1) * e[:, j - i] * traces[:, i - 1]
        e[:, j] = acc / j
    return e[:, 1:]


@dataclass
class McReport:
    """Means and standard errors of per-sample statistics, with provenance."""

    d: int
    n: int
    seed: int
    chunk_size: int
    mode: str
    labels: list
    means: list
    se_re: list
    se_im: list
    unitarity_residual_max: float
    extras: dict = field(default_factory=dict)

    def mean(self, label) -> complex:
        return self.means[self.labels.index(label)]

    def se(self, label) -> tuple:
        i = self.labels.index(label)
        return self.se_re[i], self.se_im[i]

    def to_json_dict(self) -> dict:
        payload = {
            "d": self.d,
            "n": self.n,
            "seed": self.seed,
            "chunk_size": self.chunk_size,
            "mode": self.mode,
            "unitarity_residual_max": repr(self.unitarity_residual_max),
            "statistics": [
                {
                    "label": label,
                    "mean_re": repr(mean.real),
                    "mean_im": repr(mean.imag),
                    "se_re": repr(sr),
                    "se_im": repr(si),
                }
                for label, mean, sr, si in zip(
                    self.labels, self.means, self.se_re, self.se_im
                )
            ],
        }
        if self.extras:
            payload["extras"] = {k: repr(v) for k, v in sorted(self.extras.items())}
        return payload


class _Accumulator:
    """Streaming sums for mean and standard error of complex samples."""

    def __init__(self, width: int):
        self.count = 0
        self.sum = np.zeros(width, dtype=complex)
        self.sq_re = np.zeros(width)
        self.sq_im = np.zeros(width)

    def add(self, samples: np.ndarray):
        self.count += samples.shape[0]
        self.sum += samples.sum(axis=0)
        self.sq_re += (samples.real**2).sum(axis=0)
        self.sq_im += (samples.imag**2).sum(axis=0)

    def finalize(self):
        n = self.count
        mean = self.sum / n
        if n > 1:
            var_re = np.maximum(self.sq_re - n * mean.real**2, 0.0) / (n - 1)
            var_im = np.maximum(self.sq_im - n * mean.imag**2, 0.0) / (n - 1)
        else:
            var_re = np.zeros_like(self.sq_re)
            var_im = np.zeros_like(self.sq_im)
        se_re = np.sqrt(var_re / n)
        se_im = np.sqrt(var_im / n)
        return mean, se_re, se_im


def _iter_chunks(n: int, chunk_size: int):
    if n < 1 or chunk_size < 1:
        raise ValueError("need n >= 1 and chunk_size >= 1")
    index = 0
    done = 0
    while done < n:
        take = min(chunk_size, n - done)
        yield index, take
        index += 1
        done += take


def mc_charpoly(spec_a, spec_b, n: int, seed: int, mode: str = "commutator",
                chunk_size: int = 4096) -> McReport:
    """Sampled means of e_1..e_d for a two-matrix word in A and UBU*.

    mode selects the word: 'commutator' (AT - TA), 'sum' (A + T), or
    'product' (AT), with T = UBU* and A, B diagonal with the given spectra.
    """
    a = np.array([float(v) for v in _as_floats(spec_a)])
    b = np.array([float(v) for v in _as_floats(spec_b)])
    if a.shape != b.shape:
        raise ValueError("spectra must have equal length")
    d = a.size
    if mode not in ("commutator", "sum", "product"):
        raise ValueError(f"unknown mode {mode!r}")
    acc = _Accumulator(d)
    residual = 0.0
    eye = np.eye(d)
    for index, take in _iter_chunks(n, chunk_size):
        u = haar_batch(d, take, _chunk_rng(seed, index))
        residual = max(
            residual,
            float(np.abs(u @ u.conj().transpose(0, 2, 1) - eye).max()),
        )
        t = (u * b[None, None, :]) @ u.conj().transpose(0, 2, 1)
        if mode == "commutator":
            w = a[None, :, None] * t - t * a[None, None, :]
        elif mode == "sum":
            w = t + a[None, :, None] * eye[None, :, :]
        else:
            w = a[None, :, None] * t
        traces = np.empty((take, d), dtype=complex)
        power = w
        for j in range(d):
            traces[:, j] = np.einsum("mii->m", power)
            if j + 1 < d:
                power = power @ w
        acc.add(_elementary_from_traces(traces))
    mean, se_re, se_im = acc.finalize()
    return McReport(
        d=d,
        n=n,
        seed=seed,
        chunk_size=chunk_size,
        mode=mode,
        labels=[f"e_{k}" for k in range(1, d + 1)],
        means=[complex(v) for v in mean],
        se_re=[float(v) for v in se_re],
        se_im=[float(v) for v in se_im],
        unitarity_residual_max=residual,
    )


def mc_commutator_charpoly(spec_a, spec_b, n: int, seed: int,
                           chunk_size: int = 4096) -> McReport:
    return mc_charpoly(spec_a, spec_b, n, seed, "commutator", chunk_size)


def mc_entry_moments(d: int, n: int, seed: int, chunk_size: int = 4096) -> McReport:
    """Sampled |u_11|^2 and |u_11|^4 of Haar unitaries."""
    acc = _Accumulator(2)
    residual = 0.0
    eye = np.eye(d)
    for index, take in _iter_chunks(n, chunk_size):
        u = haar_batch(d, take, _chunk_rng(seed, index))
        residual = max(
            residual,
            float(np.abs(u @ u.conj().transpose(0, 2, 1) - eye).max()),
        )
        sq = np.abs(u[:, 0, 0]) ** 2
        acc.add(np.stack([sq, sq**2], axis=1).astype(complex))
    mean, se_re, se_im = acc.finalize()
    return McReport(
        d=d,
        n=n,
        seed=seed,
        chunk_size=chunk_size,
        mode="entry_moments",
        labels=["abs_u11_sq", "abs_u11_4th"],
        means=[complex(v) for v in mean],
        se_re=[float(v) for v in se_re],
        se_im=[float(v) for v in se_im],
        unitarity_residual_max=residual,
    )


def mc_conjugation_mean(spec_x, n: int, seed: int, chunk_size: int = 4096) -> McReport:
    """Sampled mean of U X U* entrywise, X diagonal with the given spectrum.

    The exact mean is (tr X / d) times the identity; the report labels are
    'entry_i_j' in row-major order.
    """
    x = np.array([float(v) for v in _as_floats(spec_x)])
    d = x.size
    acc = _Accumulator(d * d)
    residual = 0.0
    eye = np.eye(d)
    for index, take in _iter_chunks(n, chunk_size):
        u = haar_batch(d, take, _chunk_rng(seed, index))
        residual = max(
            residual,
            float(np.abs(u @ u.conj().transpose(0, 2, 1) - eye).max()),
        )
        t = (u * x[None, None, :]) @ u.conj().transpose(0, 2, 1)
        acc.add(t.reshape(take, d * d))
    mean, se_re, se_im = acc.finalize()
    return McReport(
        d=d,
        n=n,
        seed=seed,
        chunk_size=chunk_size,
        mode="conjugation",
        labels=[f"entry_{i}_{j}" for i in range(1, d + 1) for j in range(1, d + 1)],
        means=[complex(v) for v in mean],
        se_re=[float(v) for v in se_re],
        se_im=[float(v) for v in se_im],
        unitarity_residual_max=residual,
        extras={"trace_over_d": float(x.sum() / d)},
    )


def _as_floats(values):
    out = []
    for v in values:
        out.append(float(v))
    return out


def within_band(exact, mean, se, sigmas: float = 4.0, floor: float = 1e-9) -> bool:
    """|mean - exact| <= sigmas*se + floor*max(1, |exact|).

    The additive floor only matters when the per-sample statistic is an
    exact constant (se == 0), where pure se bands have zero width.
    """
    exact = float(exact)
    return abs(mean - exact) <= sigmas * se + floor * max(1.0, abs(exact))
