"""Closed-form independence-number formulas and averaging bounds.

Collects the published exact values and bounds for the supported
families: the Hamming-diameter layer count S(n, D), Nagy's value for
J(n, 3, 1), the complete solution of jpm(n, 3, 1), the Frankl-Kupavskii
values for jkl and the signed Kneser families, the parity-family values,
the vertex-transitive averaging bound, and the monotone ratio sequence
alpha/|V| computed exactly by the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .families import GraphSpec, build_graph, jpm
from .solver import SolveBudget, solve_exact

PROVEN = "proven"
ASYMPTOTIC = "asymptotic"
CONJECTURED = "conjectured"


def kleitman_S(n: int, D: int) -> int:
    """Maximum size of a set family on [n] with Hamming diameter <= D.

    For D >= n the whole power set qualifies, so 2^n is returned.
    """
    if n < 0 or D < 0:
        raise ValueError(f"need n, D >= 0, got n={n}, D={D}")
    if D >= n:
        return 1 << n
    d, odd = divmod(D, 2)
    total = sum(comb(n, j) for j in range(d + 1))
    if odd:
        total += comb(n - 1, d)
    return total


def nagy_alpha(n: int) -> int:
    """Independence number of J(n, 3, 1): n, n-1, or n-2 by n mod 4."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    r = n % 4
    if r == 0:
        return n
    if r == 1:
        return n - 1
    return n - 2


def c_mod4(n: int) -> int:
    """The correction term for jpm(n, 3, 1): 0, 1, 2, 2 as n mod 4 = 0..3."""
    r = n % 4
    return r if r < 2 else 2


def jpm31_alpha(n: int) -> int:
    """Exact independence number of jpm(n, 3, 1)."""
    return max(6 * n - 28, 4 * n - 4 * c_mod4(n))


@dataclass(frozen=True)
class PredictedAlpha:
    spec: GraphSpec
    value: int
    source: str
    validity: str        # proven | asymptotic | conjectured
    valid_range: str     # human-readable n-range the formula is stated for

    def __str__(self) -> str:
        return f"{self.spec}: {self.value} [{self.source}, {self.validity} {self.valid_range}]"


def _jkl_predicted(spec: GraphSpec):
    n, k, l, s = spec.n, spec.k, spec.l, spec.t
    if l == 1 and s == -2 and n >= 2 * k:
        if n <= k * k:
            return PredictedAlpha(spec, k * comb(n - 1, k),
                                  "frankl-kupavskii-one-negative", PROVEN,
                                  f"2k <= n <= k^2 (k={k})")
        value = k * comb(k * k - 1, k) + sum(comb(i, k) for i in range(k * k, n))
        return PredictedAlpha(spec, value, "frankl-kupavskii-one-negative",
                              PROVEN, f"n > k^2 (k={k})")
    if s == -2 * l and 2 * k <= n <= 3 * k - l:
        total = k * spec.vertex_count()
        if total % n == 0:
            return PredictedAlpha(spec, total // n, "frankl-kupavskii-fractional",
                                  PROVEN, "2k <= n <= 3k-l")
    return None


def _jpm_predicted(spec: GraphSpec):
    n, k, t = spec.n, spec.k, spec.t
    if t == -k:
        # antipodal perfect matching: one endpoint per edge
        return PredictedAlpha(spec, spec.vertex_count() // 2,
                              "antipodal-matching", PROVEN, "all n")
    if k == 2:
        if t == -1 and n >= 5:
            return PredictedAlpha(spec, comb(n, 2), "ratio-limit-k2", PROVEN, "n >= 5")
        if t == 0 and n >= 5:
            return PredictedAlpha(spec, 2 * (n - 1), "fixed-place-k2", PROVEN, "n >= 5")
        if t == 1 and n >= 3:
            value = 2 * n if n % 2 == 0 else 2 * (n - 1)
            return PredictedAlpha(spec, value, "matching-lift-k2", PROVEN, "n >= 3")
    if k == 3:
        if t == 1:
            return PredictedAlpha(spec, jpm31_alpha(n),
                                  "cherkashin-kulikov-raigorodskii", PROVEN, "all n")
        if t == -1 and n >= 7:
            return PredictedAlpha(spec, comb(n, 3), "fano-averaging", PROVEN, "n >= 7")
        if t == 0 and n >= 9:
            return PredictedAlpha(spec, 2 * comb(n - 1, 2), "fixed-place-k3",
                                  PROVEN, "n >= 9")
    if k == 4 and t == 1 and n % 2 == 0:
        return PredictedAlpha(spec, 2 * n * (n - 2), "pair-blocks",
                              CONJECTURED, "even n > n0")
    if t is not None and t < 0 and t % 2 != 0:
        value = kleitman_S(k, -t - 1) * comb(n, k)
        if t == -1 and n > k * (1 << (k + 1)):
            return PredictedAlpha(spec, value, "simple-hypergraph-averaging",
                                  PROVEN, f"n > k*2^(k+1) = {k * (1 << (k + 1))}")
        return PredictedAlpha(spec, value, "b-simple-hypergraph-averaging",
                              ASYMPTOTIC, "n > n0(k, t)")
    if t == 0:
        return PredictedAlpha(spec, 2 * comb(n - 1, k - 1), "fixed-place",
                              ASYMPTOTIC, "n > c*k^3*2^k")
    return None


def _kpm_predicted(spec: GraphSpec):
    n, k, t = spec.n, spec.k, spec.t
    if 0 <= t < k:
        return PredictedAlpha(spec, comb(n - t - 1, k - t - 1),
                              "kneser-fixed-signplaces", ASYMPTOTIC, "n >= n0(k)")
    if t < 0 and t % 2 != 0:
        return PredictedAlpha(spec, kleitman_S(k, -t - 1) * comb(n, k),
                              "kneser-diameter-layers", ASYMPTOTIC, "n >= n0(k)")
    # even t < 0 has no closed form: it adds the independence number of a
    # jkl graph; see kneser_even_t_value.
    return None


def kneser_even_t_value(spec: GraphSpec, alpha_jkl: int) -> int:
    """Predicted alpha of kpm(n, k, t) for even t < 0, given the
    independence number of jkl(n, k - |t|/2, |t|/2, t)."""
    n, k, t = spec.n, spec.k, spec.t
    if spec.kind != "kpm" or t is None or t >= 0 or t % 2 != 0:
        raise ValueError(f"needs a kpm spec with even negative t, got {spec}")
    return alpha_jkl + kleitman_S(k, -t - 2) * comb(n, k)


def _parity_predicted(spec: GraphSpec):
    n, k = spec.n, spec.k
    value = None
    if spec.parity == "odd" and k % 2 == 0:
        value = comb(n // 2, k // 2)
        source = "pair-supports"
    elif spec.parity == "even" and k % 2 == 1:
        value = comb((n - 1) // 2, (k - 1) // 2)
        source = "pair-supports-fixed-point"
    if value is None:
        return None
    if spec.kind == "jpmparity":
        value <<= k
        source += "-sign-lift"
    return PredictedAlpha(spec, value, source, ASYMPTOTIC, "n >= n0(k)")


def predicted_alpha(spec: GraphSpec) -> PredictedAlpha | None:
    """The published formula value covering the spec, if any."""
    spec.validate()
    if spec.kind == "jpm":
        return _jpm_predicted(spec)
    if spec.kind == "j":
        if spec.k == 3 and spec.t == 1 and spec.n >= 4:
            return PredictedAlpha(spec, nagy_alpha(spec.n), "nagy", PROVEN, "n >= 4")
        if spec.k == 2 and spec.t == 1:
            return PredictedAlpha(spec, spec.n // 2, "disjoint-pairs", PROVEN, "all n")
        return None
    if spec.kind == "kpm":
        return _kpm_predicted(spec)
    if spec.kind == "jkl":
        return _jkl_predicted(spec)
    return _parity_predicted(spec)


def katona_upper_bound(v_g: int, v_h: int, alpha_h: int) -> int:
    """floor(|G| * alpha(H) / |H|): an upper bound on alpha(G) whenever G
    is vertex-transitive and H is a subgraph of G.  Vertex-transitivity
    is the caller's responsibility; it is not checked."""
    if v_h <= 0 or v_h > v_g or alpha_h > v_h:
        raise ValueError(f"need 0 < |H| <= |G| and alpha(H) <= |H|, "
                         f"got |G|={v_g}, |H|={v_h}, alpha={alpha_h}")
    return v_g * alpha_h // v_h


@dataclass(frozen=True)
class RatioPoint:
    n: int
    alpha: int
    n_vertices: int
    ratio: Fraction


@dataclass(frozen=True)
class RatioSequence:
    k: int
    t: int
    points: tuple[RatioPoint, ...]
    complete: bool   # False when the budget ran out partway

    def ratios(self) -> list[Fraction]:
        return [p.ratio for p in self.points]

    def is_non_increasing(self) -> bool:
        r = self.ratios()
        return all(r[i] >= r[i + 1] for i in range(len(r) - 1))


def ratio_sequence(k: int, t: int, n_range, budget: SolveBudget | None = None,
                   engine: str = "auto") -> RatioSequence:
    """Exact alpha / |V| for jpm(n, k, t) over n_range, as exact rationals.

    Solves each instance with the exact solver; if any instance exceeds
    the budget the sequence is returned truncated with complete=False.
    """
    points = []
    complete = True
    for n in n_range:
        spec = jpm(n, k, t)
        cert = solve_exact(build_graph(spec), budget=budget, engine=engine)
        if not cert.verified:
            complete = False
            break
        m = spec.vertex_count()
        points.append(RatioPoint(n, cert.alpha, m, Fraction(cert.alpha, m)))
    return RatioSequence(k, t, tuple(points), complete)
