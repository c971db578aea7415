"""Command-line entry point: ``python -m palrec <command> ...``.

Exit codes: 0 accept or clean, 1 reject or mismatch, 2 usage error.
"""

import argparse
import itertools
import random
import sys
import time

from .engine import ENGINE_KINDS, new_engine
from .iterator import from_center
from .oracle import lpal_prefix_bits, pal_power_prefix_bits
from .recognizer import PalPowerRecognizer

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

BENCH_FAMILIES = ("equal", "aab", "random2", "random26", "periodic_pal")
DEFAULT_SIZES = "100000,1000000,10000000"


class UsageError(Exception):
    pass


def read_input(path, strip_newline):
    if path is None or path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    if strip_newline:
        data = data.rstrip(b"\r\n")
    return data


def parse_sizes(text):
    try:
        sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes value {text!r}") from None
    if not sizes or min(sizes) < 0:
        raise UsageError(f"bad --sizes value {text!r}")
    return sizes


def fmt_center(c):
    x = from_center(c)
    return str(int(x)) if x == int(x) else str(x)


# -- recognize / trace -------------------------------------------------------


def cmd_recognize(args, out, err):
    data = read_input(args.input, args.strip_newline)
    r = PalPowerRecognizer(args.k, args.engine)
    feed = r.feed
    if args.final:
        v = 0
        for a in data:
            v = feed(a)
        out.write(b"ACCEPT\n" if v else b"REJECT\n")
    else:
        bits = bytearray(feed(a) + 48 for a in data)
        v = bits[-1] - 48 if bits else 0
        out.write(bytes(bits) + b"\n")
    return EXIT_OK if v else EXIT_FAIL


def cmd_trace(args, out, err):
    data = read_input(args.input, args.strip_newline)
    r = PalPowerRecognizer(args.k, args.engine)
    it = r.engines[0].it
    out.write(b"n\tletter\tmax_pal\tsuffix_centers\tverdicts\n")
    for a in data:
        r.feed(a)
        centers = " ".join(fmt_center(c) for c in it.suffix_centers())
        verdicts = "".join(str(v) for v in r.level_verdicts())
        line = f"{it.n}\t{chr(a)}\t{fmt_center(it.s)}\t{centers}\t{verdicts}\n"
        out.write(line.encode("latin-1"))
    return EXIT_OK


# -- oracle ------------------------------------------------------------------


def cmd_oracle(args, out, err):
    data = read_input(args.input, args.strip_newline)
    bits = pal_power_prefix_bits(data, args.k)
    if args.final:
        out.write(b"ACCEPT\n" if bits[-1] else b"REJECT\n")
    else:
        out.write(bytes(b + 48 for b in bits[1:]) + b"\n")
    return EXIT_OK if bits[-1] else EXIT_FAIL


# -- fuzz --------------------------------------------------------------------


def _inject_fault(engine):
    """Test-only: flip the z bit a long series reads first, once per recalculation."""
    original = engine.recalc_z

    def faulty(g):
        original(g)
        engine.z.set(g.j_w, 1 - engine.z.get(g.j_w))

    engine.recalc_z = faulty


def _recognizer(k, kind, fault):
    r = PalPowerRecognizer(k, kind)
    if fault and kind == "linear":
        for e in r.engines:
            _inject_fault(e)
    return r


def _first_diff(got, want):
    for i, (g, w) in enumerate(zip(got, want)):
        if g != w:
            return i
    return None


def fuzz_cases(args):
    """Deterministic case list: exhaustive small strings, then seeded random ones."""
    for alphabet, limit in ((b"ab", args.max_ab), (b"abc", args.max_abc)):
        for length in range(limit + 1):
            for t in itertools.product(alphabet, repeat=length):
                yield bytes(t)
    rnd = random.Random(args.seed)
    for _ in range(args.random_cases):
        sigma = rnd.choice((2, 3, 4, 26))
        n = rnd.randint(1, args.random_len)
        if rnd.random() < 0.5:
            yield bytes(97 + rnd.randrange(sigma) for _ in range(n))
        else:
            unit = bytes(97 + rnd.randrange(sigma) for _ in range(rnd.randint(1, 9)))
            w = bytearray((unit * (n // len(unit) + 1))[:n])
            for _ in range(rnd.randint(0, 3)):
                w[rnd.randrange(n)] = 97 + rnd.randrange(sigma)
            yield bytes(w)


def check_case(w, ks, kinds, fault=False):
    """Return ``(k, kind, prefix_index)`` of the first mismatch for ``w`` or None."""
    for k in ks:
        want = pal_power_prefix_bits(w, k)
        for kind in kinds:
            r = _recognizer(k, kind, fault)
            got = [0] + [r.feed(a) for a in w]
            i = _first_diff(got, want)
            if i is not None:
                return k, kind, i
    return None


def check_lpal_case(w, m, kinds):
    want = lpal_prefix_bits(m, w)
    for kind in kinds:
        e = new_engine(m[0], kind)
        got = [0] + [e.append(a, b) for a, b in zip(w, m[1:])]
        i = _first_diff(got, want)
        if i is not None:
            return kind, i
    return None


def cmd_fuzz(args, out, err):
    kinds = [args.engine] if args.engine_given else list(ENGINE_KINDS)
    ks = list(range(1, args.k + 1))
    cases = 0
    for w in fuzz_cases(args):
        cases += 1
        bad = check_case(w, ks, kinds, args.inject_fault)
        if bad is not None:
            k, kind, i = bad
            w_min = w[:i]
            err.write(
                f"MISMATCH string={w_min.decode('latin-1')!r} k={k} engine={kind} prefix={i}\n".encode()
            )
            return EXIT_FAIL
    rnd = random.Random(args.seed + 1)
    for _ in range(args.random_cases):
        n = rnd.randint(1, args.random_len)
        sigma = rnd.choice((2, 3, 26))
        w = bytes(97 + rnd.randrange(sigma) for _ in range(n))
        dens = rnd.choice((0.01, 0.1, 0.5))
        m = [1 if rnd.random() < dens else 0 for _ in range(n + 1)]
        cases += 1
        bad = check_lpal_case(w, m, kinds)
        if bad is not None:
            kind, i = bad
            marks = "".join(map(str, m[: i + 1]))
            err.write(
                f"MISMATCH string={w[:i].decode('latin-1')!r} m={marks} engine={kind} prefix={i}\n".encode()
            )
            return EXIT_FAIL
    err.write(f"fuzz: {cases} cases clean\n".encode())
    return EXIT_OK


# -- bench -------------------------------------------------------------------


def bench_text(family, n, seed=0):
    rnd = random.Random(seed)
    if family == "equal":
        return b"a" * n
    if family == "aab":
        return (b"aab" * (n // 3 + 1))[:n]
    if family == "random2":
        return _random_bytes(rnd, n, b"ab")
    if family == "random26":
        return _random_bytes(rnd, n, bytes(range(97, 123)))
    if family == "periodic_pal":
        # concatenations of palindromes (uv)^e u with random short u, v
        parts = []
        total = 0
        while total < n:
            u = _small_pal(rnd)
            v = _small_pal(rnd) or b"c"
            piece = (u + v) * rnd.randint(3, 40) + u
            parts.append(piece)
            total += len(piece)
        return b"".join(parts)[:n]
    raise UsageError(f"unknown family {family!r}")


def _random_bytes(rnd, n, alphabet):
    # modulo mapping of random bytes; the slight bias is irrelevant for timing
    table = bytes(alphabet[i % len(alphabet)] for i in range(256))
    return rnd.randbytes(n).translate(table)


def _small_pal(rnd):
    half = bytes(rnd.choice(b"ab") for _ in range(rnd.randint(0, 3)))
    mid = rnd.choice((b"", b"a", b"b"))
    return half + mid + half[::-1]


def bench_marks(n, seed=0):
    """Seeded ``m`` bits for benchmark runs, about one in eight set."""
    raw = random.Random(seed ^ 0x5EED).randbytes(n + 1)
    return bytes(1 if x < 32 else 0 for x in raw)


def run_bench(kind, w, marks, budget=None):
    """Time one engine over ``w``; returns (nanos, counters, finished)."""
    e = new_engine(marks[0], kind)
    append = e.append
    t0 = time.perf_counter_ns()
    finished = True
    if budget is None:
        for a, b in zip(w, itertools.islice(marks, 1, None)):
            append(a, b)
    else:
        deadline = t0 + int(budget * 1e9)
        step = 256
        for start in range(0, len(w), step):
            for a, b in zip(w[start:start + step], marks[start + 1:start + 1 + step]):
                append(a, b)
            if time.perf_counter_ns() > deadline:
                finished = False
                break
    nanos = time.perf_counter_ns() - t0
    return nanos, e.counters(), finished


COUNTER_COLUMNS = ("manacher_iters", "unlinks", "recalcs", "loop_iters", "max_loop", "z_words")


def cmd_bench(args, out, err):
    sizes = parse_sizes(args.sizes)
    families = args.families.split(",") if args.families else list(BENCH_FAMILIES)
    for f in families:
        if f not in BENCH_FAMILIES:
            raise UsageError(f"unknown family {f!r}; expected one of {BENCH_FAMILIES}")
    kinds = [args.engine] if args.engine_given else ["linear"]
    header = ["family", "n", "engine", "nanos", "finished"] + list(COUNTER_COLUMNS)
    out.write(("\t".join(header) + "\n").encode())
    summary = []
    for family in families:
        for n in sizes:
            w = bench_text(family, n, args.seed)
            marks = bench_marks(n, args.seed)
            for kind in kinds:
                nanos, c, done = run_bench(kind, w, marks, args.budget)
                row = [family, str(n), kind, str(nanos), "1" if done else "0"]
                row += [str(c.get(col, "")) for col in COUNTER_COLUMNS]
                out.write(("\t".join(row) + "\n").encode())
                out.flush()
                summary.append(f"{family:>13} n={n:<9} {kind:<6} {nanos / 1e9:8.2f}s"
                               + ("" if done else " (budget hit)"))
    err.write(("\n".join(summary) + "\n").encode())
    return EXIT_OK


# -- selftest ----------------------------------------------------------------


EXAMPLE_PAL3 = b"abaaba" + b"babacabababaabaabaabababacabab" + b"abababa"


def cmd_selftest(args, out, err):
    problems = []
    for kind in ENGINE_KINDS:
        r = PalPowerRecognizer(3, kind)
        if [r.feed(a) for a in EXAMPLE_PAL3][-1] != 1:
            problems.append(f"{kind}: 43-letter example not accepted for k=3")
    quick = argparse.Namespace(max_ab=8, max_abc=5, seed=args.seed, random_cases=20, random_len=200)
    for w in fuzz_cases(quick):
        bad = check_case(w, (1, 2, 3), ENGINE_KINDS)
        if bad is not None:
            problems.append(f"mismatch on {w!r}: {bad}")
            break
    for line in problems:
        err.write((line + "\n").encode())
    out.write(b"selftest ok\n" if not problems else b"selftest FAILED\n")
    return EXIT_FAIL if problems else EXIT_OK


# -- argument parsing --------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int, default=None,
                        help="number of palindromes (default 1; fuzz checks 1..4)")
    common.add_argument("--engine", choices=ENGINE_KINDS, default=None,
                        help="engine backend (default linear)")
    common.add_argument("--seed", type=int, default=0)
    mode = common.add_mutually_exclusive_group()
    common.set_defaults(final=False)
    mode.add_argument("--per-prefix", dest="final", action="store_false",
                      help="print one 0/1 verdict per input byte (default)")
    mode.add_argument("--final", dest="final", action="store_true",
                      help="print only ACCEPT or REJECT for the whole input")
    nl = common.add_mutually_exclusive_group()
    nl.add_argument("--strip-newline", dest="strip_newline", action="store_true", default=True,
                    help="drop trailing CR/LF bytes from the input (default)")
    nl.add_argument("--keep-newline", dest="strip_newline", action="store_false",
                    help="treat trailing newlines as letters")

    p = argparse.ArgumentParser(prog="palrec", description="Online recognition of L·Pal and Pal^k.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("recognize", "per-prefix or final Pal^k verdicts"),
        ("trace", "per-letter iterator state and level verdicts (TSV)"),
        ("oracle", "brute-force Pal^k verdicts"),
    ):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("input", nargs="?", default=None, help="input file (default stdin)")
    fz = sub.add_parser("fuzz", parents=[common], help="compare engines against the oracles")
    fz.add_argument("--max-ab", type=int, default=14, help="exhaustive length over {a,b}")
    fz.add_argument("--max-abc", type=int, default=9, help="exhaustive length over {a,b,c}")
    fz.add_argument("--random-cases", type=int, default=200)
    fz.add_argument("--random-len", type=int, default=2000)
    fz.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    bn = sub.add_parser("bench", parents=[common], help="time engines on the bench families (TSV)")
    bn.add_argument("--sizes", default=DEFAULT_SIZES, help="comma-separated lengths")
    bn.add_argument("--families", default=None, help=f"subset of {','.join(BENCH_FAMILIES)}")
    bn.add_argument("--budget", type=float, default=None, help="seconds per run before giving up")
    sub.add_parser("selftest", parents=[common], help="quick end-to-end check")
    return p


COMMANDS = {
    "recognize": cmd_recognize,
    "trace": cmd_trace,
    "oracle": cmd_oracle,
    "fuzz": cmd_fuzz,
    "bench": cmd_bench,
    "selftest": cmd_selftest,
}


def main(argv=None, stdout=None, stderr=None):
    out = stdout if stdout is not None else sys.stdout.buffer
    err = stderr if stderr is not None else sys.stderr.buffer
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.engine_given = args.engine is not None
    if args.engine is None:
        args.engine = "linear"
    if args.k is None:
        args.k = 4 if args.command == "fuzz" else 1
    try:
        if args.k < 1:
            raise UsageError(f"--k must be at least 1, got {args.k}")
        return COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        err.write(f"palrec: {exc}\n".encode())
        return EXIT_USAGE
    except OSError as exc:
        err.write(f"palrec: {exc}\n".encode())
        return EXIT_USAGE
    finally:
        out.flush()
