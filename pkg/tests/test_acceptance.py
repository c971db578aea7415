"""Acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL ...`` line straight to the
terminal, whatever pytest's capture mode, and then asserts.
"""

import itertools
import math
import random
import time

import pytest

from invariant_oracles import attribution_problems
from palrec.bitblocks import FULL, TOY
from palrec.cli import bench_marks, bench_text, run_bench
from palrec.combinatorics import is_palindrome, leading_count_bound
from palrec.engine import ENGINE_KINDS, new_engine
from palrec.iterator import PalIterator, next_pal, pal_len, rad, to_center
from palrec.linear import LinearEngine, replicate
from palrec.nlogn import NLogNEngine
from palrec.oracle import pal_power_prefix_bits, pal_power_split, suffix_palindrome_centers
from palrec.recognizer import PalPowerRecognizer
from test_bitblocks import toy_exhaustive_windows

PAL3_EXAMPLE = b"abaaba" + b"babacabababaabaabaabababacabab" + b"abababa"


@pytest.fixture
def report(capsys):
    def emit(number, failures, summary):
        verdict = "PASS" if not failures else "FAIL"
        line = f"criterion {number}: {verdict} {summary}"
        if failures:
            line += "; " + "; ".join(str(f) for f in failures[:5])
        with capsys.disabled():
            print("\n" + line)
        assert not failures, line

    return emit


def structured_text(rnd, n):
    kind = rnd.randrange(4)
    if kind == 0:
        return bytes(rnd.choice(b"ab") for _ in range(n))
    if kind == 1:
        unit = bytes(rnd.choice(b"abc") for _ in range(rnd.randint(1, 12)))
        w = bytearray((unit * (n // len(unit) + 1))[:n])
        for _ in range(rnd.randint(0, 3)):
            w[rnd.randrange(n)] = rnd.choice(b"abcd")
        return bytes(w)
    if kind == 2:
        w = bytes(rnd.choice(b"ab") for _ in range(rnd.randint(1, 30)))
        while len(w) < n:
            w = w + rnd.choice([b"", b"c", b"a", b"b"]) + w[::-1]
        return w[:n]
    u = bytes(rnd.choice(b"ab") for _ in range(rnd.randint(0, 5)))
    v = bytes(rnd.choice(b"ab") for _ in range(rnd.randint(1, 5)))
    core = (u + v) * rnd.randint(3, 30) + u
    return ((core + b"c" + core[::-1] + b"d" + core) * 3)[:n]


# -- 1: oracle equivalence ----------------------------------------------------


def test_criterion_1_oracle_equivalence(report):
    # A recognizer's verdict on a prefix does not depend on later letters, so
    # checking every prefix of the maximal-length strings covers every shorter
    # string. Level j of a Pal^4 recognizer is exactly a Pal^j recognizer.
    failures = []
    strings = 0
    for alphabet, length in ((b"ab", 14), (b"abc", 9)):
        for t in itertools.product(alphabet, repeat=length):
            w = bytes(t)
            strings += 1
            want = [pal_power_prefix_bits(w, k) for k in (1, 2, 3, 4)]
            for kind in ENGINE_KINDS:
                r = PalPowerRecognizer(4, kind)
                for i, a in enumerate(w, 1):
                    r.feed(a)
                    got = r.level_verdicts()
                    for k in range(4):
                        if got[k] != want[k][i]:
                            failures.append((w[:i], k + 1, kind))
    report(1, failures, f"{strings} maximal strings, every prefix, k=1..4, engines {','.join(ENGINE_KINDS)}")


# -- 2: goldens ---------------------------------------------------------------


def test_criterion_2_goldens(report):
    failures = []

    it = PalIterator()
    it.extend(b"aabacabaa")
    rads = [0, 0, 1, 0, 0, 1, 0, 0, 0, 4, 0, 0, 0, 1, 0, 0, 1, 0, 0]
    if [rad(it, x) for x in range(1, 20)] != rads:
        failures.append("rad table of aabacabaa")
    chain = [next_pal(it, to_center(c)) for c in (5, 8.5, 9)]
    if chain != [to_center(c) for c in (8.5, 9, 9.5)] or pal_len(it, to_center(5)) != 9:
        failures.append("nextPal table of aabacabaa")

    it = PalIterator()
    it.extend(b"aabacaba")
    before = it.suffix_centers()
    it.append(ord("a"))
    if before != [to_center(c) for c in (5, 7, 8, 8.5)] or it.suffix_centers() != [
        to_center(c) for c in (5, 8.5, 9, 9.5)
    ]:
        failures.append("list transition on aabacaba + a")

    for kind in ENGINE_KINDS:
        for bits in itertools.product((0, 1), repeat=8):
            e = new_engine(bits[0], kind)
            out = [e.append(a, b) for a, b in zip(b"abababa", bits[1:])]
            if out[-1] != (bits[0] | bits[2] | bits[4] | bits[6]):
                failures.append(f"res[7] of abababa, {kind}, m={bits}")
                break
    w = b"ababababacabababab" + b"a"
    m = [0] * (len(w) + 1)
    m[2] = 1
    e = NLogNEngine(0)
    for a, b in zip(w[:-1], m[1:-1]):
        e.append(a, b)
    z_before = e.z_at(0)
    e.append(w[-1], m[-1])
    if (z_before, e.z_at(0)) != (1, 0) or not e.debug_check_z():
        failures.append("z[0] reset on the non-cubic call")

    e = LinearEngine(1, FULL)
    for a in b"baaaabaaa":
        e.append(a, 0)
    old_centers = [c for c in e.it.suffix_centers() if c != e.it.s]
    kinds = []
    survivors = []
    for a in b"ab":
        before = e.predictable
        e.append(a, 0)
        kinds.append(e.predictable - before)
        survivors.append([c for c in old_centers if e.it.is_suffix_center(c)])
    if old_centers != [16, 17, 18, 19] or kinds != [1, 1] or e.it.s != 12:
        failures.append(f"baaaabaaa + a, b predictable flags {kinds}")
    if survivors != [[17, 18, 19], [17]]:
        failures.append(f"baaaabaaa + a, b surviving centers {survivors}")

    oracle = pal_power_prefix_bits(PAL3_EXAMPLE, 3)
    parts = pal_power_split(PAL3_EXAMPLE, 3)
    if len(PAL3_EXAMPLE) != 43 or oracle[-1] != 1 or not all(is_palindrome(p) for p in parts):
        failures.append("43-letter fixture not confirmed by the oracle")
    for kind in ENGINE_KINDS:
        r = PalPowerRecognizer(3, kind)
        if [0] + r.feed_all(PAL3_EXAMPLE) != oracle:
            failures.append(f"43-letter string, {kind}")
    report(2, failures, "rad/nextPal table, list transition, res[7] and z reset, predictable flags, 43-letter Pal^3")


# -- 3: invariant suites ------------------------------------------------------


def suffix_lengths_step(prev, w, i):
    """Suffix-palindrome lengths of w[:i] from those of w[:i-1]."""
    a = w[i - 1]
    out = {L + 2 for L in prev if i - L - 2 >= 0 and w[i - L - 2] == a}
    out.update((0, 1))
    return out


def test_criterion_3_invariant_suites(report):
    failures = []
    rnd = random.Random(3)

    for t in itertools.product(b"ab", repeat=12):
        w = bytes(t)
        it = PalIterator()
        for i, a in enumerate(w, 1):
            it.append(a)
            if it.suffix_centers() != suffix_palindrome_centers(w[:i]):
                failures.append(("list", w[:i]))
                break
    w = bytes(rnd.choice(b"ab") for _ in range(10_000))
    it = PalIterator()
    lengths = {0}
    for i, a in enumerate(w, 1):
        it.append(a)
        lengths = suffix_lengths_step(lengths, w, i)
        # a suffix of length L in a text of length i has doubled center 2i - L + 1
        if it.suffix_centers() != sorted(2 * i - L + 1 for L in lengths):
            failures.append(("list", "random 10^4", i))
            break

    for t in itertools.product(b"ab", repeat=12):
        w = bytes(t)
        m = [rnd.randint(0, 1) for _ in range(13)]
        e = NLogNEngine(m[0])
        for a, b in zip(w, m[1:]):
            e.append(a, b)
            if not e.debug_check_z():
                failures.append(("z", w[: e.it.n], m, e.z_violation))
                break

    for params in (TOY, FULL):
        for _ in range(1000):
            w = structured_text(rnd, rnd.randint(1, 500))
            m = [1 if rnd.random() < 0.3 else 0 for _ in range(len(w) + 1)]
            e = LinearEngine(m[0], params, debug=True)
            for a, b in zip(w, m[1:]):
                e.append(a, b)
                problems = attribution_problems(e)
                if problems:
                    failures.append(("attribution", params.width, w[: e.it.n], problems[:2]))
                    break
            if e.z_violations:
                failures.append(("z block", params.width, w, e.z_violations[:2]))
    report(3, failures, "iterator list, z invariant, main-invariant attribution for beta=7 and full width")


# -- 4: amortization counters -------------------------------------------------


def counter_texts():
    rnd = random.Random(4)
    texts = [bench_text(f, 20_000, 4) for f in ("equal", "aab", "random2", "random26", "periodic_pal")]
    fib = [b"a", b"ab"]
    while len(fib[-1]) < 20_000:
        fib.append(fib[-1] + fib[-2])
    texts.append(fib[-1][:20_000])
    for _ in range(60):
        x = bytes(rnd.choice(b"ab") for _ in range(rnd.randint(1, 200)))
        texts.append(x + x[::-1] + (x[::-1] * 3)[: rnd.randint(0, 300)])
    return texts


def test_criterion_4_amortization_counters(report):
    failures = []
    for w in counter_texts():
        n = len(w)
        for params in (TOY, FULL):
            beta = params.width - 1
            e = LinearEngine(1, params)
            run = rec = 0
            for a in w + b"#":
                s = e.it.s
                before = e.recalcs
                e.append(a, 1)
                if e.it.s == s:
                    run += 1
                    rec += e.recalcs - before
                else:
                    if run and rec != run // beta:
                        failures.append(f"beta={beta} run={run} recalcs={rec} expected {run // beta}")
                    run = rec = 0
            if e.it.manacher_iters > 2 * (n + 1):
                failures.append(f"manacher_iters={e.it.manacher_iters} > 2n")
            if e.it.unlinks > 2 * (n + 1):
                failures.append(f"unlinks={e.it.unlinks} > 2n")
        e = NLogNEngine(1)
        for i, a in enumerate(w, 1):
            before = e.loop_iters
            e.append(a, 0)
            if e.loop_iters - before > leading_count_bound(i):
                failures.append(f"leading loop {e.loop_iters - before} at n={i}")
                break
    failures = sorted(set(failures), key=failures.index)
    report(4, failures, "Manacher <= 2n, unlinks <= 2n, recalculations = floor(run/beta), leading loop <= log_1.5(n)+2")


# -- 5: linearity at scale ----------------------------------------------------


def test_criterion_5_linearity_at_scale(report):
    failures = []
    notes = []
    sizes = (10**5, 10**6, 10**7)
    equal_1e6 = None
    for family in ("equal", "aab", "random2", "random26", "periodic_pal"):
        times = []
        for n in sizes:
            w = bench_text(family, n, 0)
            marks = bench_marks(n, 0)
            nanos, _, _ = run_bench("linear", w, marks)
            times.append(nanos)
            if family == "equal" and n == 10**6:
                equal_1e6 = (w, marks, nanos)
            del w, marks
        ratios = [b / a for a, b in zip(times, times[1:])]
        notes.append(f"{family} " + "/".join(f"{r:.1f}" for r in ratios))
        if max(ratios) > 15:
            failures.append(f"{family} ratios {ratios}")
    w, marks, linear_nanos = equal_1e6
    budget = 10 * linear_nanos / 1e9
    naive_nanos, _, naive_done = run_bench("naive", w, marks, budget)
    if naive_done and naive_nanos < 10 * linear_nanos:
        failures.append(f"naive {naive_nanos / 1e9:.1f}s vs linear {linear_nanos / 1e9:.1f}s")
    notes.append(f"naive on equal 10^6 {'finished' if naive_done else 'unfinished'} after "
                 f"{naive_nanos / 1e9:.0f}s, linear {linear_nanos / 1e9:.1f}s")
    report(5, failures, "time(10n)/time(n): " + ", ".join(notes))


# -- 6: toy-width exhaustion --------------------------------------------------


def test_criterion_6_toy_width_exhaustion(report):
    failures = []
    bad = toy_exhaustive_windows(range(1, 65))
    if bad is not None:
        failures.append(("window", bad))
    width = TOY.width
    for p in range(1, 9):
        for pattern in range(1 << min(p, width)):
            for q in range(width):
                d = (1 << (q + 1)) - 1
                unrolled = 0
                for k in range(math.ceil(q / p) + 1):
                    unrolled |= d & (pattern << (k * p))
                if replicate(TOY, pattern, p) & d != unrolled:
                    failures.append(("replicate", p, pattern, q))
    report(6, failures, "all windows on arrays of 1..64 bits at beta=7, series replication for p <= 8")
