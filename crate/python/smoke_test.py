"""Smoke test for the trace_recon extension module.

Build first, e.g. `pip install -e crates/python --no-build-isolation`.
"""

import sys

import trace_recon as tr


def brute_common(x, y, t):
    return len(set(tr.insertion_ball(x, t)) & set(tr.insertion_ball(y, t)))


def main():
    assert tr.edit_distance("1011", "0011") == 2
    assert tr.insertion_ball_size(4, 2) == 22
    assert len(tr.insertion_ball("1011", 2)) == 22
    assert brute_common("1011", "0011", 2) == 12
    assert tr.deletion_ball("0110", 1) == ["010", "011", "110"]

    assert [tr.n_plus(4, 2, l) for l in (2, 1, 0)] == [6, 12, 22]
    assert tr.required_traces(500, 2, 2) == 7
    big = tr.n_plus(500, 40, 2)
    assert isinstance(big, int) and big.bit_length() > 64

    value, witness = tr.oracle_n_plus(5, 2, 1)
    assert value == tr.n_plus(5, 2, 1)
    assert brute_common(*witness, 2) == value

    assert tr.vt_checksum("1011") == 3
    code = tr.vt_enumerate(8, 7)
    assert all(tr.vt_checksum(c) == 7 for c in code)
    x = code[len(code) // 2]
    for i in range(len(x) + 1):
        assert tr.vt_decode(x[:i] + x[i + 1:], 8, 7) == x or i == len(x)
        for s in "01":
            assert tr.vt_decode(x[:i] + s + x[i:], 8, 7) == x

    assert tr.fp_set(7) == [1, 2, 4]
    assert tr.fp_set(8) == [1, 2, 3, 7]
    for e, f in tr.worst_pairs(8, 7, t=2):
        assert tr.edit_distance(e, f) == 4
        assert brute_common(e, f, 2) == tr.n_plus(8, 2, 2)

    shared = sorted(set(tr.insertion_ball("1011", 2)) & set(tr.insertion_ball("0011", 2)))
    assert tr.reconstruct(shared, ["1011", "0011"]) == ("ambiguous", ["0011", "1011"])
    own = [w for w in tr.insertion_ball(x, 2) if not any(
        tr.edit_distance(c, w) == 2 for c in code if c != x)][:7]
    assert tr.reconstruct(own, code) == ("unique", [x])

    m = tr.ChannelModel(0.3, 500, q=2, l=2)
    assert m.threshold(2) == 7 and m.threshold(3) == 3009
    assert m.optimal_output_length(10)[0] == 2
    assert abs(m.expected_ratio(3, 2) - 8.563) < 0.05
    rows = m.table(4)
    assert [r[0] for r in rows] == [0, 1, 2, 3, 4]
    lo, hi = m.race_bounds()
    assert 0.0 <= lo <= hi <= 1.0

    for call in (lambda: tr.n_plus(4, 1, 3), lambda: tr.ChannelModel(1.5, 10), lambda: tr.edit_distance("01a", "0")):
        try:
            call()
        except tr.TraceReconError:
            pass
        else:
            raise AssertionError("expected TraceReconError")
    try:
        tr.oracle_n_plus(8, 3, 1, budget=1)
    except tr.BudgetExceeded:
        pass
    else:
        raise AssertionError("expected BudgetExceeded")

    assert tr.vt_enumerate(3, 0) == ["000", "101"]
    print("smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
