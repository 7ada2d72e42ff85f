"""Exact count tables for permutations by inversion number.

Five triangular tables are built bottom-up, all in Python integers:

* ``p(h, k)``  permutations of degree h with k inversions
* ``i(h, k)``  the irreducible ones among them
* ``t(h, k)``  involutions
* ``it(h, k)`` irreducible involutions
* ``b(h, k)``  blocks (sectionally-inverse-or-equal classes)

From these, ``count_ssl`` counts slim, semimodular lattices of a given size
and ``count_ssd`` counts their planar diagrams up to similarity.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .errors import ConsistencyError, InvalidSizeError, TableRangeError

__all__ = [
    "KINDS", "CountTable", "InversionPolynomial", "inversion_polynomial",
    "perm_table", "irreducible_table", "involution_table",
    "irreducible_involution_table", "block_table", "build_table", "build_tables",
    "count_ssl", "count_ssd", "count_distributive_diagrams",
    "TableCache", "CACHE_FORMAT_VERSION",
]

log = logging.getLogger(__name__)

KINDS = ("p", "i", "t", "it", "b")
CACHE_FORMAT_VERSION = 1


def _row_len(h: int, max_k: int, budget: int | None) -> int:
    top = min(max_k, h * (h - 1) // 2)
    if budget is not None:
        top = min(top, budget - h)
    return max(top + 1, 0)


@dataclass(frozen=True)
class CountTable:
    """Rows ``h = 0..max_h`` of one counting function.

    Row ``h`` stores ``k = 0..min(max_k, h(h-1)/2)``; when a ``budget`` is
    set it is further clamped to ``h + k <= budget``. Reading ``k`` above
    ``h(h-1)/2`` gives 0; reading outside the built range raises
    :class:`TableRangeError`.
    """

    kind: str
    max_h: int
    max_k: int
    rows: tuple[tuple[int, ...], ...]
    budget: int | None = None

    def __getitem__(self, hk: tuple[int, int]) -> int:
        h, k = hk
        if h < 0 or k < 0 or h > self.max_h or k > self.max_k:
            raise TableRangeError(f"{self.kind}({h},{k}) outside h<={self.max_h}, k<={self.max_k}")
        if self.budget is not None and h + k > self.budget:
            raise TableRangeError(f"{self.kind}({h},{k}) outside budget h+k<={self.budget}")
        row = self.rows[h]
        return row[k] if k < len(row) else 0

    def row(self, h: int) -> list[int]:
        """Row ``h`` up to ``min(max_k, h(h-1)/2)``."""
        return [self[h, k] for k in range(min(self.max_k, h * (h - 1) // 2) + 1)]

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """``(h, k, value)`` for every stored entry, row-major."""
        for h, row in enumerate(self.rows):
            for k, v in enumerate(row):
                yield h, k, v

    def restrict(self, max_h: int, max_k: int) -> "CountTable":
        if max_h > self.max_h or max_k > self.max_k:
            raise TableRangeError("cannot restrict a table to a larger range")
        if self.budget is not None:
            raise TableRangeError("budgeted tables cannot be restricted")
        rows = tuple(row[: _row_len(h, max_k, None)] for h, row in enumerate(self.rows[: max_h + 1]))
        return CountTable(self.kind, max_h, max_k, rows)


@dataclass(frozen=True)
class InversionPolynomial:
    """Coefficients of the inversion generating function of S_h."""

    degree_bound: int
    coefficients: tuple[int, ...]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def inversion_polynomial(h: int) -> InversionPolynomial:
    """Full coefficient list of prod_{j=1}^{h} (1 + x + ... + x^{j-1})."""
    if h < 0:
        raise InvalidSizeError(f"degree must be nonnegative, got {h}")
    table = perm_table(h, h * (h - 1) // 2)
    return InversionPolynomial(h * (h - 1) // 2, tuple(table.rows[h]))


def _default_max_k(max_h: int) -> int:
    return max_h * (max_h - 1) // 2


def _perm_rows(max_h: int, max_k: int, budget: int | None) -> list[list[int]]:
    rows = [[1]]
    for h in range(1, max_h + 1):
        prev = rows[-1]
        width = _row_len(h, max_k, budget)
        # multiply by 1 + x + ... + x^(h-1) with a sliding-window sum
        new = []
        window = 0
        for k in range(width):
            if k < len(prev):
                window += prev[k]
            if k - h >= 0 and k - h < len(prev):
                window -= prev[k - h]
            new.append(window)
        rows.append(new)
    return rows


def _at(rows: list[list[int]], h: int, k: int) -> int:
    # out-of-range reads are 0 inside recurrences
    if h < 0 or k < 0:
        return 0
    row = rows[h]
    return row[k] if k < len(row) else 0


def _irreducible_rows(full: list[list[int]], max_h: int, max_k: int, budget: int | None) -> list[list[int]]:
    # irr(h,k) = full(h,k) - sum_{s<h} sum_t irr(s,t) full(h-s, k-t)
    irr: list[list[int]] = [[0] * _row_len(0, max_k, budget)]
    for h in range(1, max_h + 1):
        width = _row_len(h, max_k, budget)
        row = []
        for k in range(width):
            acc = _at(full, h, k)
            for s in range(1, h):
                irow = irr[s]
                frow = full[h - s]
                lo = max(0, k - len(frow) + 1)
                hi = min(k, len(irow) - 1)
                for t in range(lo, hi + 1):
                    acc -= irow[t] * frow[k - t]
            row.append(acc)
        irr.append(row)
    return irr


def _involution_rows(max_h: int, max_k: int, budget: int | None) -> list[list[int]]:
    rows = [[1]]
    for h in range(1, max_h + 1):
        width = _row_len(h, max_k, budget)
        row = []
        for k in range(width):
            acc = _at(rows, h - 1, k)
            for s in range(2, h + 1):
                acc += _at(rows, h - 2, k - 2 * s + 3)
            row.append(acc)
        rows.append(row)
    return rows


def _block_rows(irr, irr_inv, max_h: int, max_k: int, budget: int | None) -> list[list[int]]:
    rows = [[1]]
    for h in range(1, max_h + 1):
        width = _row_len(h, max_k, budget)
        row = []
        for k in range(width):
            acc = 0
            for s in range(1, h + 1):
                a, c = irr[s], irr_inv[s]
                brow = rows[h - s]
                lo = max(0, k - len(brow) + 1)
                hi = min(k, len(a) - 1)
                for t in range(lo, hi + 1):
                    acc += (a[t] + c[t]) * brow[k - t]
            if acc & 1:
                raise ConsistencyError(f"halved block sum is odd at b({h},{k}) = {acc}/2")
            row.append(acc >> 1)
        rows.append(row)
    return rows


def _check_sandwich(p, i, it, b) -> None:
    for h in range(len(p)):
        for k in range(len(p[h])):
            if not (0 <= it[h][k] <= i[h][k] <= p[h][k] and 0 <= b[h][k] <= p[h][k]):
                raise ConsistencyError(f"sandwich inequality fails at ({h},{k})")


def _check_symmetry(p, max_k: int) -> None:
    for h, row in enumerate(p):
        top = h * (h - 1) // 2
        for k, v in enumerate(row):
            if top - k < len(row) and row[top - k] != v:
                raise ConsistencyError(f"p({h},.) is not symmetric at k={k}")


def _build_rows(max_h: int, max_k: int, budget: int | None) -> dict[str, list[list[int]]]:
    p = _perm_rows(max_h, max_k, budget)
    i = _irreducible_rows(p, max_h, max_k, budget)
    t = _involution_rows(max_h, max_k, budget)
    it = _irreducible_rows(t, max_h, max_k, budget)
    b = _block_rows(i, it, max_h, max_k, budget)
    _check_symmetry(p, max_k)
    _check_sandwich(p, i, it, b)
    return {"p": p, "i": i, "t": t, "it": it, "b": b}


def _build_all(max_h: int, max_k: int, budget: int | None) -> dict[str, CountTable]:
    rows = _build_rows(max_h, max_k, budget)
    return {name: CountTable(name, max_h, max_k, tuple(map(tuple, r)), budget)
            for name, r in rows.items()}


def _validate_range(max_h: int, max_k: int | None) -> int:
    if max_h < 0:
        raise InvalidSizeError(f"max_h must be nonnegative, got {max_h}")
    if max_k is None:
        return _default_max_k(max_h)
    if max_k < 0:
        raise InvalidSizeError(f"max_k must be nonnegative, got {max_k}")
    return max_k


def build_table(kind: str, max_h: int, max_k: int | None = None, *,
                budget: int | None = None, cache: "TableCache | None" = None) -> CountTable:
    """Build (or load from ``cache``) the table of one counting function."""
    if kind not in KINDS:
        raise ValueError(f"unknown table kind {kind!r}; expected one of {', '.join(KINDS)}")
    max_k = _validate_range(max_h, max_k)
    if cache is not None and budget is None:
        hit = cache.load(kind, max_h, max_k)
        if hit is not None:
            return hit
    tables = _build_all(max_h, max_k, budget)
    if cache is not None and budget is None:
        for table in tables.values():
            if not cache.store(table):
                break
    return tables[kind]


def build_tables(max_h: int, max_k: int | None = None) -> dict[str, CountTable]:
    """All five tables from one bottom-up build, keyed by kind."""
    return _build_all(max_h, _validate_range(max_h, max_k), None)


def perm_table(max_h: int, max_k: int | None = None) -> CountTable:
    max_k = _validate_range(max_h, max_k)
    return CountTable("p", max_h, max_k, tuple(map(tuple, _perm_rows(max_h, max_k, None))))


def irreducible_table(max_h: int, max_k: int | None = None) -> CountTable:
    max_k = _validate_range(max_h, max_k)
    p = _perm_rows(max_h, max_k, None)
    return CountTable("i", max_h, max_k, tuple(map(tuple, _irreducible_rows(p, max_h, max_k, None))))


def involution_table(max_h: int, max_k: int | None = None) -> CountTable:
    max_k = _validate_range(max_h, max_k)
    return CountTable("t", max_h, max_k, tuple(map(tuple, _involution_rows(max_h, max_k, None))))


def irreducible_involution_table(max_h: int, max_k: int | None = None) -> CountTable:
    max_k = _validate_range(max_h, max_k)
    t = _involution_rows(max_h, max_k, None)
    return CountTable("it", max_h, max_k, tuple(map(tuple, _irreducible_rows(t, max_h, max_k, None))))


def block_table(max_h: int, max_k: int | None = None) -> CountTable:
    return build_table("b", max_h, max_k)


# memo for count_ssl / count_ssd: largest budget built so far
_memo: dict[str, CountTable] = {}


def _budget_table(kind: str, budget: int) -> CountTable:
    table = _memo.get(kind)
    if table is None or table.budget < budget:
        _memo.update(_build_all(budget, budget, budget))
        table = _memo[kind]
    return table


def _check_size(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidSizeError(f"size must be a positive integer, got {n!r}")


def count_ssl(n: int) -> int:
    """Number of slim, semimodular lattices with ``n`` elements, up to isomorphism."""
    _check_size(n)
    b = _budget_table("b", n - 1)
    return sum(b[h, n - h - 1] for h in range(n))


def count_ssd(n: int) -> int:
    """Number of planar slim, semimodular diagrams with ``n`` elements, up to similarity."""
    _check_size(n)
    p = _budget_table("p", n - 1)
    return sum(p[h, n - h - 1] for h in range(n))


def count_distributive_diagrams(h: int) -> int:
    """Catalan number C_h, by C_{m+1} = C_m * 2(2m+1) / (m+2)."""
    if not isinstance(h, int) or h < 0:
        raise InvalidSizeError(f"length must be a nonnegative integer, got {h!r}")
    c = 1
    for m in range(h):
        c, rem = divmod(c * 2 * (2 * m + 1), m + 2)
        if rem:
            raise ConsistencyError("Catalan recurrence left a remainder")
    return c


class TableCache:
    """Directory of JSON table files keyed by ``(kind, max_h, max_k)``.

    A file that fails to parse or validate is ignored and recomputed.
    Unwritable directories only produce a warning.
    """

    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    def path(self, kind: str, max_h: int, max_k: int) -> Path:
        return self.directory / f"v{CACHE_FORMAT_VERSION}-{kind}-h{max_h}-k{max_k}.json"

    def load(self, kind: str, max_h: int, max_k: int) -> CountTable | None:
        # an exact hit first, then any larger table that can be restricted
        candidates = [self.path(kind, max_h, max_k)]
        if self.directory.is_dir():
            candidates += sorted(self.directory.glob(f"v{CACHE_FORMAT_VERSION}-{kind}-h*-k*.json"))
        for path in candidates:
            table = _read_table(path)
            if table is None or table.kind != kind:
                continue
            if table.max_h >= max_h and table.max_k >= max_k:
                return table.restrict(max_h, max_k)
        return None

    def store(self, table: CountTable) -> bool:
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                fh.write(dumps_table(table))
            os.replace(tmp, self.path(table.kind, table.max_h, table.max_k))
        except OSError as exc:
            log.warning("table cache %s is not writable (%s); continuing uncached", self.directory, exc)
            return False
        return True


def dumps_table(table: CountTable) -> str:
    """JSON cache payload: a header plus row-major decimal strings."""
    rows = [[str(v) for v in row] for row in table.rows]
    doc = {
        "format-version": CACHE_FORMAT_VERSION,
        "kind": table.kind,
        "max_h": table.max_h,
        "max_k": table.max_k,
        "sha256": _digest(rows),
        "rows": rows,
    }
    return json.dumps(doc, sort_keys=True)


def _digest(rows: list[list[str]]) -> str:
    return hashlib.sha256(json.dumps(rows).encode()).hexdigest()


def loads_table(text: str) -> CountTable:
    """Inverse of :func:`dumps_table`; raises ``ValueError`` on any defect."""
    doc = json.loads(text)
    if doc.get("format-version") != CACHE_FORMAT_VERSION:
        raise ValueError("unsupported cache format version")
    kind, max_h, max_k = doc["kind"], doc["max_h"], doc["max_k"]
    if kind not in KINDS or not isinstance(max_h, int) or not isinstance(max_k, int):
        raise ValueError("bad cache header")
    raw = doc["rows"]
    if doc.get("sha256") != _digest(raw):
        raise ValueError("checksum mismatch")
    if len(raw) != max_h + 1:
        raise ValueError("row count does not match max_h")
    rows = []
    for h, row in enumerate(raw):
        if len(row) != _row_len(h, max_k, None):
            raise ValueError(f"row {h} has the wrong length")
        values = tuple(int(v) for v in row)
        if any(v < 0 for v in values):
            raise ValueError("negative entry")
        rows.append(values)
    return CountTable(kind, max_h, max_k, tuple(rows))


def _read_table(path: Path) -> CountTable | None:
    try:
        return loads_table(path.read_text())
    except FileNotFoundError:
        return None
    except (OSError, ValueError, KeyError, TypeError) as exc:
        log.warning("ignoring corrupt cache file %s (%s)", path, exc)
        return None
