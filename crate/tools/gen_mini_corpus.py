#!/usr/bin/env python3
"""One-off generator for the bundled mini-corpus of pianoform kern excerpts.

Deterministic: re-running reproduces the same 36 files. Each file is a
single-system, two-spine excerpt with a meter, clefs, a key signature and a
few measures of rhythmically simple content drawing on the full symbol
palette (durations, dots, accidentals, beams, slurs, ties, ornaments, rests,
null placeholders).
"""
import random
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "data", "mini_corpus")

METERS = ["*M4/4", "*M3/4", "*M2/4", "*M6/8"]
BEATS = {"*M4/4": 4, "*M3/4": 3, "*M2/4": 2, "*M6/8": 3}
KEYS = ["*k[]", "*k[f#]", "*k[b-]", "*k[b-e-]", "*k[f#c#]"]
LOW = ["C", "D", "E", "F", "G", "A", "B", "c", "d", "e", "f", "g"]
HIGH = ["c", "d", "e", "f", "g", "a", "b", "cc", "dd", "ee", "ff", "gg", "aa"]
ACCS = ["", "", "", "", "-", "#", "n"]
ORNS = ["", "", "", "", "", ";", "'", "^", "t", "T", "m"]


def note(rng, pool, dur, extra_marks=True):
    if rng.random() < 0.08:
        return f"{dur}r"
    p = rng.choice(pool)
    acc = rng.choice(ACCS)
    orn = rng.choice(ORNS) if extra_marks else ""
    return f"{dur}{p}{acc}{orn}"


def beat_cells(rng, pool):
    """Cells for one beat of one spine: either one quarter or a beamed pair."""
    style = rng.random()
    if style < 0.45:
        d = "4." if rng.random() < 0.15 else "4"
        return [note(rng, pool, d)]
    if style < 0.85:
        a = note(rng, pool, "8", extra_marks=False) + "L"
        b = note(rng, pool, "8", extra_marks=False) + "J"
        return [a, b]
    a = note(rng, pool, "16", extra_marks=False) + "L"
    b = note(rng, pool, "16", extra_marks=False) + "J"
    return [a, b, ".", "."][:2] + []


def measure(rng, beats):
    left_cols, right_cols = [], []
    for _ in range(beats):
        lc = beat_cells(rng, LOW)
        rc = beat_cells(rng, HIGH)
        n = max(len(lc), len(rc))
        lc += ["."] * (n - len(lc))
        rc += ["."] * (n - len(rc))
        left_cols += lc
        right_cols += rc
    return list(zip(left_cols, right_cols))


def decorate_slurs(rows, rng):
    """Wrap a random run of right-hand notes in a slur, a left pair in a tie."""
    notes = [i for i, (_, r) in enumerate(rows) if r[0].isdigit() and "r" not in r]
    if len(notes) >= 3 and rng.random() < 0.7:
        a, b = sorted(rng.sample(notes, 2))
        if a != b:
            la, ra = rows[a]
            lb, rb = rows[b]
            rows[a] = (la, ra + "(") if "(" not in ra else rows[a]
            rows[b] = (lb, rb + ")") if ")" not in rb else rows[b]
    lnotes = [i for i, (l, _) in enumerate(rows) if l[0].isdigit() and "r" not in l]
    if len(lnotes) >= 2 and rng.random() < 0.4:
        i = rng.choice(lnotes[:-1])
        j = min(k for k in lnotes if k > i)
        li, ri = rows[i]
        lj, rj = rows[j]
        rows[i] = (li + "[", ri)
        rows[j] = (lj + "]", rj)
    return rows


def gen_file(idx, rng):
    meter = METERS[idx % len(METERS)]
    key = KEYS[rng.randrange(len(KEYS))]
    measures = rng.randrange(2, 5)
    lines = [
        "**kern\t**kern",
        "*clefF4\t*clefG2",
        f"{key}\t{key}",
        f"{meter}\t{meter}",
    ]
    for m in range(1, measures + 1):
        lines.append(f"={m}\t={m}")
        rows = decorate_slurs(measure(rng, BEATS[meter]), rng)
        for left, right in rows:
            lines.append(f"{left}\t{right}")
    lines.append("*-\t*-")
    return "\n".join(lines) + "\n"


def main():
    os.makedirs(OUT, exist_ok=True)
    rng = random.Random(20240917)
    for idx in range(36):
        text = gen_file(idx, rng)
        with open(os.path.join(OUT, f"excerpt_{idx:03d}.krn"), "w") as f:
            f.write(text)
    print(f"wrote 36 files to {OUT}")


if __name__ == "__main__":
    main()
