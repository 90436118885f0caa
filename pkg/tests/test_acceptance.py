"""Acceptance checks, one per criterion, each printing a PASS/FAIL line.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
All sampling is seeded, so every run sees the same cases.
"""
from __future__ import annotations

import os
import random
import subprocess
import sys
import tempfile
import time
import warnings
from pathlib import Path
from typing import NamedTuple

import pytest

from shapetop import sampling
from shapetop.connectedness import find_separation, is_totally_disconnected, report
from shapetop.errors import AlreadyOpen, TooManyFragments
from shapetop.mappings import (Add, Affine, Mapping, Subtract, check_closure_image,
                               image, is_continuous, preimage, rotation90, translation)
from shapetop.oracles import (bases_of, brute_closure, brute_preimage, brute_separation,
                              enumerate_set_topologies, expression_closure, u0_oracle)
from shapetop.shape import U0, U1, Shape, segments, sum_all
from shapetop.space import check_isomorphism, star_topology
from shapetop.topology import (Topology, closure, generate_from_basis, generate_topology,
                               interior, is_topology, reduce_basis, refine,
                               subshape_basis, subshape_topology)

FIXTURES = Path(__file__).parent / "fixtures"


class Outcome(NamedTuple):
    ok: bool
    detail: str


def _line(n, title, outcome, seconds):
    word = "PASS" if outcome.ok else "FAIL"
    return f"{word} [{n:2d}] {title}: {outcome.detail} ({seconds:.1f}s)"


def seg(*c):
    return segments(c)


# -- 1 ---------------------------------------------------------------------

def algebra_laws(cases=1000, seed=1, budget=10.0):
    rng = random.Random(seed)
    start = time.perf_counter()
    bad = []
    for i in range(cases):
        a, b, c = (sampling.random_u1_shape(rng, max_segments=6) for _ in range(3))
        laws = [
            a + a == a and a * a == a,
            a + b == b + a and a * b == b * a,
            (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c),
            a + a * b == a and a * (a + b) == a,
            a * (b + c) == a * b + a * c and a + b * c == (a + b) * (a + c),
            a - (a - b) == a * b,
        ]
        if not all(laws):
            bad.append(i)
    elapsed = time.perf_counter() - start
    return Outcome(not bad and elapsed < budget,
                   f"{cases - len(bad)}/{cases} cases in {elapsed:.2f}s (limit {budget:.0f}s)")


# -- 2 ---------------------------------------------------------------------

def u0_agreement(cases=1000, seed=2):
    rng = random.Random(seed)
    bad = 0
    for _ in range(cases):
        a, b = sampling.random_u0_shape(rng), sampling.random_u0_shape(rng)
        ok = (u0_oracle("sum", a, b) == a + b
              and u0_oracle("product", a, b) == a * b
              and u0_oracle("difference", a, b) == a - b
              and u0_oracle("part_of", a, b) == (a <= b))
        bad += not ok
    return Outcome(bad == 0, f"{cases - bad}/{cases} pairs")


# -- 3 ---------------------------------------------------------------------

def generated_topologies(cases=200, seed=3):
    rng = random.Random(seed)
    bad = 0
    for _ in range(cases):
        base = sampling.random_carrier(rng)
        parts = {sampling.random_part(rng, base) for _ in range(rng.randint(1, 3))}
        carrier = sum_all(parts, U1)  # the parts exhaust their own sum
        t = generate_topology(parts, carrier)
        ok = (bool(is_topology(t.opens, carrier)) and parts <= t.opens
              and t.opens == expression_closure(parts, U1))
        bad += not ok
    return Outcome(bad == 0, f"{cases - bad}/{cases} generator sets")


# -- 4 ---------------------------------------------------------------------

def reduced_basis_uniqueness(cases=200, seed=4):
    rng = random.Random(seed)
    bad, bases = 0, 0
    for _ in range(cases):
        t = sampling.random_small_topology(rng, max_opens=10)
        found = bases_of(t)
        bases += len(found)
        reduced = {frozenset(reduce_basis(b, t.carrier).elements) for b in found}
        bad += reduced != {frozenset(reduce_basis(t).elements)}
    return Outcome(bad == 0, f"{cases - bad}/{cases} topologies, {bases} bases reduced")


# -- 5 ---------------------------------------------------------------------

def subshape_bases(cases=200, seed=5):
    rng = random.Random(seed)
    bad = 0
    for _ in range(cases):
        t = sampling.random_topology(rng)
        x = sampling.random_part(rng, t.carrier)
        b = subshape_basis(reduce_basis(t), x)
        bad += generate_from_basis(b).opens != subshape_topology(t, x).opens
    return Outcome(bad == 0, f"{cases - bad}/{cases} pairs")


# -- 6 ---------------------------------------------------------------------

def interior_closure(cases=500, seed=6):
    rng = random.Random(seed)
    bad = opens_seen = 0
    for _ in range(cases):
        t = sampling.random_topology(rng)
        roll = rng.random()
        if roll < 0.3:
            x = rng.choice(t.members)
        elif roll < 0.35:
            x = Shape.empty(U1)
        else:
            x = sampling.random_part(rng, t.carrier)
        opens_seen += x in t.opens
        i, c = interior(x, t), closure(x, t)
        ok = (i <= x <= c and (x in t.opens) == (x == c)
              and c == brute_closure(x, t))
        bad += not ok
    return Outcome(bad == 0, f"{cases - bad}/{cases} pairs ({opens_seen} open)")


# -- 7 ---------------------------------------------------------------------

def _erase_middle():
    s, b = seg(0, 0, 3, 0), seg(1, 0, 2, 0)
    f = Mapping((Subtract(b),))
    source = generate_topology([seg(0, 0, 2, 0), seg(1, 0, 3, 0), b], s)
    target = generate_topology([seg(0, 0, 1, 0), seg(2, 0, 3, 0)], image(f, s))
    return f, source, target


def _image_topology(f, t):
    return Topology(image(f, t.carrier), {image(f, c) for c in t.opens})


def continuity(pairs=100, samples=200, seed=7):
    rng = random.Random(seed)
    notes = []
    # identity: continuous exactly when the target is coarser
    bad = comparable = 0
    ident = Mapping()
    for k in range(pairs):
        t1 = sampling.random_topology(rng)
        if k % 2:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", AlreadyOpen)
                t2 = refine(t1, [sampling.random_part(rng, t1.carrier)])
            if rng.random() < 0.5:
                t1, t2 = t2, t1
        else:
            t2 = sampling.random_topology(rng, carrier=t1.carrier)
        comparable += t1.opens <= t2.opens or t2.opens <= t1.opens
        bad += bool(is_continuous(ident, t1, t2)) != (t2.opens <= t1.opens)
    notes.append(f"identity {pairs - bad}/{pairs} ({comparable} comparable)")
    ok = bad == 0 and 0 < comparable < pairs

    f, source, target = _erase_middle()
    rep = is_continuous(f, source, target)
    bottom = rep.pullback(Shape.empty(U1))
    ex = rep.continuous and bottom.shape == seg(1, 0, 2, 0) and not bottom.shape.is_empty
    notes.append(f"x - B continuous with f*(0) = B: {ex}")
    ok = ok and ex

    # closure-image inequality under a fixed set of continuous mappings
    five = generate_topology([seg(0, 0, 2, 0), seg(1, 0, 3, 0)], seg(0, 0, 3, 0))
    rich = sampling.random_topology(random.Random(70))
    mappings = [
        (f, source, target),
        (ident, five, Topology.trivial(five.carrier)),
        (ident, refine(five, [seg(0, 0, 1, 0)]), five),
        (Mapping((rotation90(),)), rich, _image_topology(Mapping((rotation90(),)), rich)),
        (Mapping((translation(1, 2),)), rich,
         _image_topology(Mapping((translation(1, 2),)), rich)),
    ]
    bad = 0
    for g, src, tgt in mappings:
        if not is_continuous(g, src, tgt):
            bad += samples
            continue
        for _ in range(samples):
            x = sampling.random_part(rng, src.carrier)
            bad += not check_closure_image(g, x, src, tgt)
    total = samples * len(mappings)
    notes.append(f"closure-image {total - bad}/{total}")
    return Outcome(ok and bad == 0, "; ".join(notes))


# -- 8 ---------------------------------------------------------------------

def _random_mapping(rng, carrier):
    steps = []
    for _ in range(rng.randint(1, 3)):
        kind = rng.choice(["affine", "add", "sub"])
        if kind == "affine":
            steps.append(rng.choice([rotation90(), translation(1, 0),
                                     Affine(((1, 0), (0, -1))),
                                     Affine(((2, 0), (0, 2)), ("1/2", 0))]))
        else:
            part = sampling.random_part(rng, carrier)
            steps.append(Add(part) if kind == "add" else Subtract(part))
    return Mapping(tuple(steps))


def preimages(cases=300, min_undefined=50, seed=8):
    rng = random.Random(seed)
    bad = undefined = skipped = 0
    done = 0
    while done < cases:
        carrier = sampling.random_carrier(rng, max_segments=2)
        f = _random_mapping(rng, carrier)
        room = image(f, carrier) + carrier
        y = sampling.random_part(rng, room) if rng.random() < 0.9 else Shape.empty(U1)
        try:
            brute = brute_preimage(f, y, carrier, max_fragments=14)
        except TooManyFragments:
            skipped += 1
            continue
        done += 1
        closed = preimage(f, y, carrier)
        undefined += not closed.defined
        bad += closed != brute
    ok = bad == 0 and undefined >= min_undefined
    return Outcome(ok, f"{cases - bad}/{cases} cases, {undefined} undefined "
                       f"(need {min_undefined}), {skipped} too fragmented")


# -- 9 ---------------------------------------------------------------------

def _fixtures_2x2():
    plus = seg(-1, 0, 1, 0) + seg(0, -1, 0, 1)
    gap = seg(0, 0, 1, 0) + seg(2, 0, 3, 0)
    return {
        "plus, trivial topology": ((True, True), Topology.trivial(plus)),
        "plus, arms as parts": ((True, False),
                                generate_topology([seg(-1, 0, 1, 0), seg(0, -1, 0, 1)], plus)),
        "gapped line, trivial topology": ((False, True), Topology.trivial(gap)),
        "gapped line, halves as parts": ((False, False),
                                         generate_topology([seg(0, 0, 1, 0),
                                                            seg(2, 0, 3, 0)], gap)),
    }


def connectedness(cases=300, each=100, seed=9):
    rng = random.Random(seed)
    bad_sep = 0
    for _ in range(cases):
        t = sampling.random_topology(rng)
        sep = find_separation(t)
        pairs = brute_separation(t)
        bad_sep += (sep is None) != (not pairs) or (sep is not None and tuple(sep) not in pairs)
    bad_disjoint = 0
    for _ in range(each):
        rep = is_totally_disconnected(sampling.random_disjoint_topology(rng))
        bad_disjoint += not all(rep.conditions)
    bad_general = true_general = 0
    for _ in range(each):
        rep = is_totally_disconnected(sampling.random_topology(rng))
        bad_general += not rep.agree
        true_general += rep.definition
    bad_fix = 0
    for want, t in _fixtures_2x2().values():
        r = report(t.carrier, t)
        bad_fix += (r.visually_connected, r.structurally_connected) != want
    ok = not (bad_sep or bad_disjoint or bad_general or bad_fix)
    return Outcome(ok, f"separation {cases - bad_sep}/{cases}; disjoint-basis "
                       f"{each - bad_disjoint}/{each} all true; general "
                       f"{each - bad_general}/{each} agree ({true_general} true); "
                       f"visual x structural {4 - bad_fix}/4")


# -- 10 --------------------------------------------------------------------

def space_isomorphism(cases=200, seed=10):
    rng = random.Random(seed)
    catalog = {n: {s.family for s in enumerate_set_topologies(n)} for n in (1, 2, 3)}
    counts = [len(enumerate_set_topologies(n)) for n in (1, 2, 3)]
    bad = small = missing = 0
    for _ in range(cases):
        t = sampling.random_topology(rng)
        st = star_topology(t)
        bad += not check_isomorphism(t, st)
        n = len(st.points)
        if n <= 3:
            small += 1
            missing += st.family not in catalog[n]
    ok = bad == 0 and missing == 0 and small > 0 and counts == [1, 4, 29]
    return Outcome(ok, f"{cases - bad}/{cases} isomorphic; {small - missing}/{small} "
                       f"small stars in catalog; counts {'/'.join(map(str, counts))}")


# -- 11 --------------------------------------------------------------------

def _commands():
    # (argv, files written with -o)
    return [
        (["normalize", "a.shape"], []),
        (["alg", "sum", "a.shape", "b.shape"], []),
        (["alg", "product", "a.shape", "b.shape"], []),
        (["alg", "diff", "a.shape", "b.shape"], []),
        (["alg", "partof", "b.shape", "a.shape"], []),
        (["topo", "gen", "line_parts.lst", "--carrier", "line.shape", "-o", "gen.topo"],
         ["gen.topo"]),
        (["topo", "check", "line.topo"], []),
        (["topo", "reduce", "line.topo"], []),
        (["topo", "refine", "line.topo", "extra_parts.lst"], []),
        (["topo", "compare", "line.topo", "fine.topo"], []),
        (["topo", "sub", "line.topo", "b.shape"], []),
        (["topo", "classify", "line.topo", "half.shape"], []),
        (["topo", "dot", "line.topo", "-o", "line.dot"], ["line.dot"]),
        (["space", "build", "line.topo"], []),
        (["space", "build", "line.topo", "--dot", "-o", "space.dot"], ["space.dot"]),
        (["space", "check", "line.topo"], []),
        (["map", "image", "shift.map", "line.shape"], []),
        (["map", "preimage", "shift.map", "b.shape", "--domain", "line.shape"], []),
        (["map", "continuous", "identity.map", "fine.topo", "line.topo"], []),
        (["conn", "report", "line.shape", "line.topo"], []),
        (["conn", "report", "gap.shape", "gap.topo", "--dot", "-o", "gap.dot"], ["gap.dot"]),
        (["conn", "totally", "gap.topo"], []),
    ]


def _run_all(workdir, hash_seed):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    outputs = []
    for argv, written in _commands():
        proc = subprocess.run([sys.executable, "-m", "shapetop", *argv], cwd=workdir,
                              env=env, capture_output=True)
        blobs = [(Path(workdir) / w).read_bytes() for w in written]
        outputs.append((proc.returncode, proc.stdout, proc.stderr, blobs))
    return outputs


def cli_determinism():
    with tempfile.TemporaryDirectory() as d:
        for f in FIXTURES.iterdir():
            (Path(d) / f.name).write_bytes(f.read_bytes())
        first = _run_all(d, 1)
        second = _run_all(d, 2)
    cmds = _commands()
    same = sum(a == b for a, b in zip(first, second))
    crashed = [" ".join(argv) for (argv, _), out in zip(cmds, first) if out[0] not in (0, 1)]
    ok = same == len(cmds) and not crashed
    detail = f"{same}/{len(cmds)} commands byte-identical across runs"
    if crashed:
        detail += f"; failed: {crashed}"
    return Outcome(ok, detail)


CRITERIA = [
    (1, "algebra laws on U1 shapes", algebra_laws),
    (2, "U0 operations match set operations", u0_agreement),
    (3, "generated topologies", generated_topologies),
    (4, "reduced basis is unique", reduced_basis_uniqueness),
    (5, "subshape basis generates subshape topology", subshape_bases),
    (6, "interior and closure", interior_closure),
    (7, "continuity", continuity),
    (8, "closed-form preimage matches brute force", preimages),
    (9, "connectedness", connectedness),
    (10, "space isomorphism", space_isomorphism),
    (11, "CLI determinism", cli_determinism),
]


def evaluate(n, title, check):
    start = time.perf_counter()
    outcome = check()
    return outcome, _line(n, title, outcome, time.perf_counter() - start)


@pytest.mark.parametrize("n, title, check", CRITERIA, ids=[f"c{n}" for n, _, _ in CRITERIA])
def test_criterion(n, title, check, capsys):
    outcome, line = evaluate(n, title, check)
    with capsys.disabled():
        print("\n" + line)
    assert outcome.ok, line


if __name__ == "__main__":
    failures = 0
    for n, title, check in CRITERIA:
        outcome, line = evaluate(n, title, check)
        failures += not outcome.ok
        print(line, flush=True)
    sys.exit(1 if failures else 0)
