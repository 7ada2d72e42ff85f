"""Oracle-versus-engine verification suites.

Each suite returns a :class:`SuiteResult`; the first mismatch found is kept
as the counterexample and the suite stops there.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import counting, oracle
from .errors import ConsistencyError
from .grid import (build_lattice, build_lattice_with_quotient, build_quotient, check_cover_preserving,
                   check_rules, quotient_size_formula, source_cells)
from .lattice import is_distributive, is_semimodular, is_slim
from .perm import PartialPermutation, avoids_321, block_canonical, inversions

__all__ = ["SuiteResult", "tables_vs_census", "counts_vs_brute", "catalan_vs_avoiders",
           "lattice_structure", "quotient_formula", "isomorphism_vs_blocks", "run_all"]


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f"  first counterexample: {self.counterexample}"
        return f"{status} {self.name}: {self.checked} checked{tail}"


def tables_vs_census(max_h: int) -> SuiteResult:
    res = SuiteResult(f"p/i/t/it/b tables vs brute census, h<={max_h}")
    tables = {kind: counting.build_table(kind, max_h) for kind in counting.KINDS}
    for h in range(max_h + 1):
        census = oracle.brute_census(h)
        for kind in counting.KINDS:
            # degree 0: the empty permutation is neither irreducible nor counted by i/it
            want = tables[kind].row(h)
            got = census.row(kind)
            if h == 0 and kind in ("i", "it"):
                got = [0]
            for k, (a, b) in enumerate(zip(want, got)):
                res.checked += 1
                if a != b:
                    res.counterexample = f"{kind}({h},{k}): table {a}, brute {b}"
                    return res
    return res


def counts_vs_brute(max_n: int) -> SuiteResult:
    res = SuiteResult(f"N(n) and diagram counts vs brute force, n<={max_n}")
    for n in range(1, max_n + 1):
        for name, fast, slow in (("ssl", counting.count_ssl, oracle.brute_count_ssl),
                                 ("ssd", counting.count_ssd, oracle.brute_count_ssd)):
            res.checked += 1
            a, b = fast(n), slow(n)
            if a != b:
                res.counterexample = f"{name}(n={n}): engine {a}, brute {b}"
                return res
    return res


def catalan_vs_avoiders(max_h: int) -> SuiteResult:
    res = SuiteResult(f"321-avoiders vs Catalan numbers, h<={max_h}")
    for h in range(max_h + 1):
        fast = slow = 0
        for pi in oracle.enumerate_permutations(h):
            fast += avoids_321(pi)
            slow += not oracle.naive_contains_321(pi.image)
            if avoids_321(pi) == oracle.naive_contains_321(pi.image):
                res.counterexample = f"avoids_321 disagrees with the triple scan at {pi}"
                return res
        res.checked += 1
        cat = counting.count_distributive_diagrams(h)
        if not fast == slow == cat:
            res.counterexample = f"h={h}: {fast} avoiders, Catalan {cat}"
            return res
    return res


def lattice_structure(max_h: int) -> SuiteResult:
    """Size, semimodularity, slimness, distributivity, source cells and the
    congruence rules for every permutation of degree <= max_h."""
    res = SuiteResult(f"lattice structure of every permutation, h<={max_h}")
    for h in range(max_h + 1):
        for pi in oracle.enumerate_permutations(h):
            res.checked += 1
            try:
                L, q = build_lattice_with_quotient(pi, check=True)
            except ConsistencyError as exc:
                res.counterexample = f"{pi or '()'}: {exc}"
                return res
            problem = None
            if L.size != h + 1 + inversions(pi):
                problem = f"size {L.size} != h+1+inv"
            elif not is_semimodular(L):
                problem = "not semimodular"
            elif not is_slim(L):
                problem = "not slim"
            elif is_distributive(L) != avoids_321(pi):
                problem = "distributivity disagrees with 321-avoidance"
            elif q is not None:
                if q.block_count != quotient_size_formula(h, h, pi.graph()):
                    problem = "block count differs from the size formula"
                elif source_cells(q).pairs != pi.graph().pairs:
                    problem = "source cells do not recover the permutation"
                else:
                    try:
                        check_rules(q)
                        check_cover_preserving(q, L)
                    except ConsistencyError as exc:
                        problem = str(exc)
            if problem:
                res.counterexample = f"{pi or '()'}: {problem}"
                return res
    return res


def _partials(m: int, n: int, k: int):
    from itertools import combinations, permutations
    for rows in combinations(range(1, m + 1), k):
        for cols in permutations(range(1, n + 1), k):
            yield tuple(zip(rows, cols))


def quotient_formula(max_dim: int, max_k: int, random_extra: int = 0, seed: int = 0) -> SuiteResult:
    """Size formula against union-find block counts on every small grid."""
    import random
    res = SuiteResult(f"quotient size formula, m,n<={max_dim}, k<={max_k} exhaustive + {random_extra} random")
    cases = []
    for m, n in product(range(1, max_dim + 1), repeat=2):
        for k in range(min(max_k, m, n) + 1):
            cases.extend((m, n, pairs) for pairs in _partials(m, n, k))
    # random cases use k > max_k, so grids need both sides above max_k
    rng = random.Random(seed)
    big = range(max_k + 1, max_dim + 1)
    for _ in range(random_extra if big else 0):
        m, n = rng.choice(big), rng.choice(big)
        k = rng.randint(max_k + 1, min(m, n))
        rows = sorted(rng.sample(range(1, m + 1), k))
        cols = rng.sample(range(1, n + 1), k)
        cases.append((m, n, tuple(zip(rows, cols))))
    for m, n, pairs in cases:
        res.checked += 1
        tau = PartialPermutation(m, n, pairs)
        got = build_quotient(m, n, tau).block_count
        want = quotient_size_formula(m, n, tau)
        if got != want:
            res.counterexample = f"{m}x{n} {pairs}: union-find {got}, formula {want}"
            return res
    return res


def isomorphism_vs_blocks(max_h: int) -> SuiteResult:
    res = SuiteResult(f"lattice isomorphism <=> equal blocks, all pairs in S_h, h<={max_h}")
    for h in range(max_h + 1):
        perms = list(oracle.enumerate_permutations(h))
        lattices = [build_lattice(pi) for pi in perms]
        forms = [block_canonical(pi) for pi in perms]
        for a in range(len(perms)):
            for b in range(len(perms)):
                res.checked += 1
                iso = oracle.lattices_isomorphic(lattices[a], lattices[b])
                if iso != (forms[a] == forms[b]):
                    res.counterexample = f"{perms[a]} vs {perms[b]}: isomorphic={iso}"
                    return res
    return res


def run_all(max_h: int = 6, max_n: int = 9, deep: bool = False) -> list[SuiteResult]:
    results = [
        tables_vs_census(max_h),
        counts_vs_brute(max_n),
        catalan_vs_avoiders(min(max_h, 8)),
        lattice_structure(min(max_h, 5)),
        quotient_formula(min(max_h, 4), 3),
    ]
    if deep:
        results.append(isomorphism_vs_blocks(min(max_h, 4)))
    return results
