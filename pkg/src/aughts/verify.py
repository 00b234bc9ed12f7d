"""Self-verification suites: every closed-form identity against brute force.

Each suite returns a result object with a check count and, on failure, the
first counterexample as a printable string.  The CLI `verify` subcommand
drives these and exits nonzero if anything fails; nothing here should ever
fail on a correct build.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations as iter_permutations

from aughts import atlas, intmat, orbits
from aughts.signed_perm import (
    Permutation,
    SignedPermElement,
    format_element,
    identity_element,
    matrix_to_msih,
    msih_inverse,
    msih_mul,
    to_matrix,
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: int = 0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    def ok(self) -> None:
        self.checks += 1

    def fail(self, message: str) -> None:
        self.checks += 1
        self.failures += 1
        if self.counterexample is None:
            self.counterexample = message

    def check(self, condition: bool, message: str) -> None:
        if condition:
            self.ok()
        else:
            self.fail(message)

    @property
    def passed(self) -> bool:
        return self.failures == 0


def involution_suite(n_max: int) -> SuiteResult:
    res = SuiteResult("involutions")
    for n in range(1, n_max + 1):
        for j in range(1, n + 1):
            k = intmat.make_k(n, j)
            res.check(
                intmat.mat_mul(k, k).is_identity(),
                f"K({j})^2 != Id at n={n}",
            )
    rng = random.Random(1105)
    for _ in range(50):
        n = rng.randint(1, 6)
        x = tuple(rng.randint(-50, 50) for _ in range(n))
        j = rng.randint(1, n)
        res.check(
            orbits.apply_k(orbits.apply_k(x, j), j) == x,
            f"operator {j} applied twice moved {x}",
        )
    return res


def braid_suite(n_max: int) -> SuiteResult:
    res = SuiteResult("braid-relations")
    for n in range(2, n_max + 1):
        for j in range(1, n + 1):
            for ell in range(1, n + 1):
                if j == ell:
                    continue
                kj, kl = intmat.make_k(n, j), intmat.make_k(n, ell)
                prod = intmat.mat_mul(kj, kl)
                res.check(
                    intmat.mat_pow(prod, 3).is_identity(),
                    f"(K({j})K({ell}))^3 != Id at n={n}",
                )
                res.check(
                    intmat.mat_mul(prod, kj) == intmat.mat_mul(intmat.mat_mul(kl, kj), kl),
                    f"palindrome identity fails at n={n}, j={j}, l={ell}",
                )
    return res


def closed_form_suite(n_max: int, trials: int = 1000, seed: int = 1789) -> SuiteResult:
    res = SuiteResult("closed-form-products")
    # pair products, fully
    for n in range(2, n_max + 1):
        for j in range(1, n + 1):
            for ell in range(1, n + 1):
                if j == ell:
                    continue
                res.check(
                    intmat.product_closed_form(n, (j, ell))
                    == intmat.k_word_product(n, (j, ell)),
                    f"pair closed form fails at n={n}, ({j},{ell})",
                )
    # random distinct tuples
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(2, n_max)
        s = rng.randint(1, n)
        js = tuple(rng.sample(range(1, n + 1), s))
        res.check(
            intmat.product_closed_form(n, js) == intmat.k_word_product(n, js),
            f"closed form fails at n={n}, tuple {js}",
        )
    # full-cycle orders, both directions, matrix vs symmetric group
    for n in range(1, n_max + 1):
        down = intmat.matrix_order(intmat.full_cycle_matrix(n, "down"), limit=n + 2)
        via_sym = atlas.full_cycle_order_via_sym(n)
        res.check(down == n + 1, f"down cycle order {down} != {n + 1}")
        res.check(via_sym == n + 1, f"symmetric-group order {via_sym} != {n + 1}")
    return res


def rank_one_suite(n_max: int) -> SuiteResult:
    res = SuiteResult("rank-one-identities")
    for n in range(1, n_max + 1):
        for j in range(1, n + 1):
            row = intmat.alternating_row(n, j)
            res.check(row[j - 1] == -1, f"r({j}).e({j}) != -1 at n={n}")
            res.check(
                sum(v * v for v in row) == n, f"r({j}).r({j})^T != n at n={n}"
            )
            for ell in range(1, n + 1):
                res.check(
                    row[ell - 1] == intmat.sign_pow(j + ell - 1),
                    f"r({j}).e({ell}) sign wrong at n={n}",
                )
                if ell != j:
                    lhs = intmat.mat_mul(
                        intmat.pivot_outer(n, ell), intmat.pivot_outer(n, j)
                    )
                    rhs = intmat.mat_scale(intmat.pivot_outer(n, ell), -1)
                    res.check(
                        lhs == rhs,
                        f"e({ell})r({ell}) e({j})r({j}) != -e({ell})r({ell}) at n={n}",
                    )
            for k in range(1, n + 1):
                res.check(
                    intmat.mat_pow(intmat.pivot_outer(n, j), k)
                    == intmat.mat_scale(intmat.pivot_outer(n, j), intmat.sign_pow(k + 1)),
                    f"(e({j})r({j}))^{k} identity fails at n={n}",
                )
    return res


def oracle_suite(n_max: int) -> SuiteResult:
    """Symbolic multiplication against the matrix product, all pairs."""
    res = SuiteResult("matrix-symbol-oracle")
    for n in range(1, min(n_max, 4) + 1):
        elements = _all_elements(n)
        mats = {e: to_matrix(e) for e in elements}
        for a in elements:
            for b in elements:
                res.check(
                    to_matrix(msih_mul(a, b)) == intmat.mat_mul(mats[a], mats[b]),
                    f"oracle fails at n={n}: {format_element(a)} * {format_element(b)}",
                )
        ident = identity_element(n)
        for e in elements:
            res.check(
                msih_mul(e, msih_inverse(e)) == ident,
                f"inverse law fails at n={n}: {format_element(e)}",
            )
            res.check(
                matrix_to_msih(mats[e]) == e,
                f"round trip fails at n={n}: {format_element(e)}",
            )
        res.notes.append(f"n={n}: {len(elements) ** 2} oracle pairs checked")
    return res


def group_suite(n_max: int) -> SuiteResult:
    res = SuiteResult("group-structure")
    from math import factorial

    for n in range(1, n_max + 1):
        cat = atlas.catalog(n)
        res.check(
            len(cat) == factorial(n + 1),
            f"|M({n})| = {len(cat)} != {factorial(n + 1)}",
        )
        blocks = atlas.coset_decomposition(cat)
        res.check(
            len(blocks) == n + 1 and all(len(b) == factorial(n) for b in blocks.values()),
            f"coset decomposition wrong at n={n}",
        )
        if n <= atlas.ISOMORPHISM_MAX_N:
            witness = atlas.verify_isomorphism(n)
            res.check(
                len(witness.backward) == factorial(n + 1),
                f"isomorphism not bijective at n={n}",
            )
            res.notes.append(f"|M({n})| = {len(cat)}; isomorphic to S_{n + 1}: OK")
    if n_max >= 3:
        cat3 = atlas.catalog(3)
        spectrum = atlas.order_spectrum(cat3)
        res.check(
            spectrum == {1: 1, 2: 9, 3: 8, 4: 6},
            f"order spectrum at n=3 is {spectrum}",
        )
        res.check(12 not in spectrum, "n=3 has an element of order 12")
        hist = cat3.distance_histogram()
        res.check(
            hist.get(4) == 5 and max(hist) == 4,
            f"distance histogram at n=3 is {hist}",
        )
        res.notes.append(f"order spectrum of M(3): {spectrum}")
    return res


def orbit_suite() -> SuiteResult:
    res = SuiteResult("orbits")
    traj = orbits.run_word((10, 8, 15), orbits.HAMILTONIAN_WORD_3D)
    res.check(traj.closed, "24-step word does not close on (10,8,15)")
    res.check(
        traj.distinct_nodes == 24,
        f"24-step word visits {traj.distinct_nodes} distinct nodes",
    )
    graph = orbits.reach_graph((10, 8, 15))
    res.check(
        (len(graph.nodes), len(graph.edges)) == (24, 36),
        f"reach graph has {len(graph.nodes)} nodes / {len(graph.edges)} edges",
    )
    for x in ((0, 0), (1, 0), (1, 2), (3, 5), (7, -4), (-6, 11)):
        o = orbits.orbit2d(x)
        res.check(len(o.nodes) in (1, 3, 6), f"orbit size of {x} is {len(o.nodes)}")
        res.check(o.semi_perimeter % 2 == 0, f"odd semi-perimeter at {x}")
        res.check(
            o.box_side == o.semi_perimeter // 2, f"box side law fails at {x}"
        )
        res.check(
            (2 * o.semi_perimeter) % 4 == 0, f"orbit length not divisible by 4 at {x}"
        )
    res.check(
        orbits.semi_perimeter((7, 0)) == 28, "axis orbit semi-perimeter wrong"
    )
    res.check(orbits.orbit_rep((-2, -1)) == (1, 2), "canonical representative wrong")
    res.check(
        orbits.orbit_distance((1, 0), (2, 0)) is None,
        "distinct orbits reported as connected",
    )
    return res


def _all_elements(n: int) -> list[SignedPermElement]:
    """Direct enumeration of the (n+1)! symbolic elements (no BFS)."""
    out: list[SignedPermElement] = []
    for images in iter_permutations(range(1, n + 1)):
        sigma = Permutation.of(images)
        out.append(SignedPermElement.of(sigma, 1, 0))
        for h in range(1, n + 1):
            out.append(SignedPermElement.of(sigma, h, 1))
    return out


def run_all(n_max: int) -> list[SuiteResult]:
    if not 1 <= n_max <= 6:
        raise ValueError(f"n_max must be in 1..6, got {n_max}")
    suites = [
        involution_suite(max(n_max, 8)),
        braid_suite(max(n_max, 8)),
        closed_form_suite(max(n_max, 8)),
        rank_one_suite(max(n_max, 8)),
        oracle_suite(n_max),
        group_suite(n_max),
        orbit_suite(),
    ]
    return suites
