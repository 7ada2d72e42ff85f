import json
import math

import pytest

from slimcount import counting
from slimcount.counting import (
    CountTable, TableCache, block_table, build_table, count_distributive_diagrams, count_ssd,
    count_ssl, dumps_table, involution_table, inversion_polynomial, irreducible_involution_table,
    irreducible_table, loads_table, perm_table,
)
from slimcount.errors import InvalidSizeError, TableRangeError
from slimcount.oracle import brute_census, enumerate_permutations, naive_contains_321


def test_perm_table_examples():
    p = perm_table(6)
    assert p.row(3) == [1, 2, 2, 1]
    assert all(p[h, 0] == 1 for h in range(7))
    assert p[2, 3] == 0


def test_perm_table_matches_brute_row():
    assert perm_table(3).row(3) == brute_census(3).row("p")


def test_irreducible_examples():
    i = irreducible_table(4)
    assert i[3, 2] == 2
    assert i[2, 0] == 0
    assert i[1, 0] == 1


def test_involution_examples():
    t = involution_table(5)
    assert t.row(3) == [1, 2, 0, 1]
    assert t[4, 3] == 2
    # the recurrence by hand: t(3,3) + t(2,2) + t(2,0)
    assert t[3, 3] + t[2, 2] + t[2, 0] == 2
    assert all(t[h, 0] == 1 for h in range(6))


def test_irreducible_involution_examples():
    it = irreducible_involution_table(4)
    assert it[3, 3] == 1
    assert it[2, 1] == 1
    assert it[1, 0] == 1


def test_block_examples():
    b = block_table(5)
    assert b[3, 2] == 1
    assert b[4, 1] == 3
    assert all(b[h, 0] == 1 for h in range(6))
    assert block_table(0).rows == ((1,),)


def test_count_ssl_paper_small_values():
    assert [count_ssl(n) for n in range(1, 10)] == [1, 1, 1, 2, 3, 5, 9, 16, 29]


def test_count_ssd_examples():
    p = perm_table(5)
    assert count_ssd(1) == 1
    assert count_ssd(6) == p[5, 0] + p[4, 1] + p[3, 2] == 6
    assert count_ssd(4) == 2


def test_catalan():
    assert count_distributive_diagrams(0) == 1
    assert count_distributive_diagrams(3) == math.comb(6, 3) // 4 == 5
    assert count_distributive_diagrams(8) == 1430
    for h in range(60):
        assert count_distributive_diagrams(h) == math.comb(2 * h, h) // (h + 1)


def test_catalan_matches_avoiders():
    for h in range(9):
        avoiders = sum(1 for pi in enumerate_permutations(h) if not naive_contains_321(pi.image))
        assert avoiders == count_distributive_diagrams(h)


@pytest.mark.parametrize("fn", [count_ssl, count_ssd])
def test_invalid_size(fn):
    with pytest.raises(InvalidSizeError):
        fn(0)


def test_range_errors():
    p = perm_table(4, 3)
    assert p[4, 3] == 6  # within range
    assert p[2, 3] == 0  # beyond h(h-1)/2 but inside the table
    for h, k in [(5, 0), (4, 4), (-1, 0), (0, -1)]:
        with pytest.raises(TableRangeError):
            p[h, k]


def test_inversion_polynomial():
    g = inversion_polynomial(5)
    assert len(g.coefficients) == 11
    assert g.coefficients == g.coefficients[::-1]
    assert g(1) == math.factorial(5)
    # product formula evaluated at x = 2
    assert g(2) == math.prod(2 ** j - 1 for j in range(1, 6))


def telephone(h):
    a = [1, 1]
    for m in range(2, h + 1):
        a.append(a[-1] + (m - 1) * a[-2])
    return a[h]


def test_row_sums():
    p, t = perm_table(20), involution_table(20)
    for h in range(21):
        assert sum(p.row(h)) == math.factorial(h)
        assert sum(t.row(h)) == telephone(h)


def test_symmetry_and_sandwich():
    tables = {k: build_table(k, 12) for k in counting.KINDS}
    for h in range(13):
        top = h * (h - 1) // 2
        for k in range(top + 1):
            assert tables["p"][h, k] == tables["p"][h, top - k]
            assert tables["it"][h, k] <= tables["i"][h, k] <= tables["p"][h, k]
            assert tables["b"][h, k] <= tables["p"][h, k]


def test_tables_match_census():
    tables = {k: build_table(k, 7) for k in counting.KINDS}
    for h in range(1, 8):
        census = brute_census(h)
        for kind in counting.KINDS:
            assert tables[kind].row(h) == census.row(kind), (kind, h)


def test_block_row_sums_match_census():
    b = block_table(6)
    for h in range(7):
        assert sum(b.row(h)) == len(brute_census(h).block_reps)


def test_memoization_soundness():
    counting._memo.clear()
    late = [count_ssl(n) for n in range(1, 31)]
    counting._memo.clear()
    count_ssl(12)  # build a small table first, then extend
    early = [count_ssl(n) for n in range(1, 31)]
    rect = build_table("b", 29, 29)
    assert late == early == [sum(rect[h, n - h - 1] for h in range(n)) for n in range(1, 31)]


def test_rectangular_and_full_tables_agree():
    full = build_table("b", 9)
    rect = build_table("b", 9, 5)
    for h in range(10):
        assert rect.row(h) == full.row(h)[:6]


def test_cache_round_trip(tmp_path):
    cache = TableCache(tmp_path)
    built = build_table("i", 8, 10, cache=cache)
    assert sorted(p.name for p in tmp_path.iterdir()) == sorted(
        f"v1-{k}-h8-k10.json" for k in counting.KINDS)
    again = build_table("i", 8, 10, cache=cache)
    assert again.rows == built.rows
    # a smaller request is served by restricting the stored table
    assert cache.load("i", 5, 4).rows == build_table("i", 5, 4).rows
    assert loads_table(dumps_table(built)).rows == built.rows


def test_cache_corruption_recomputes(tmp_path, caplog):
    cache = TableCache(tmp_path)
    good = build_table("p", 6, cache=cache)
    path = cache.path("p", 6, 15)
    doc = json.loads(path.read_text())
    doc["rows"][6][3] = "999"
    path.write_text(json.dumps(doc))
    assert cache.load("p", 6, 15) is None
    assert build_table("p", 6, cache=cache).rows == good.rows
    path.write_text("{not json")
    assert cache.load("p", 6, 15) is None
    assert "corrupt" in caplog.text


def test_cache_unwritable(tmp_path, caplog):
    blocker = tmp_path / "file"
    blocker.write_text("")
    cache = TableCache(blocker / "sub")
    table = build_table("t", 5, cache=cache)
    assert table.row(4) == involution_table(5).row(4)
    assert "not writable" in caplog.text


def test_n50_is_fast_and_exact():
    import time
    counting._memo.clear()
    start = time.perf_counter()
    value = count_ssl(50)
    assert time.perf_counter() - start < 1.0
    assert isinstance(value, int)


def test_count_table_entries():
    table = CountTable("p", 2, 1, ((1,), (1,), (1, 1)))
    assert list(table.entries()) == [(0, 0, 1), (1, 0, 1), (2, 0, 1), (2, 1, 1)]
