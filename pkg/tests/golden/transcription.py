"""Hand transcription of the printed example tables.

Entries are copied from the typeset tables, not computed by the package.
``render_goldens`` turns them into the exact bytes the ``table`` command
should print, and ``python tests/golden/transcription.py`` rewrites the
golden files from this transcription.
"""

from __future__ import annotations

from pathlib import Path

E, ONE_, TWO, ONE2 = (), (1,), (2,), (1, 1)

L1 = [(E, ONE_), (ONE_, E)]
L1_DUAL = [(ONE_, E), (E, ONE_)]
L2 = [(E, TWO), (E, ONE2), (ONE_, ONE_), (TWO, E), (ONE2, E)]
L2_DUAL = [(TWO, E), (ONE2, E), (ONE_, ONE_), (E, TWO), (E, ONE2)]

ALPHA = {
    1: (L1, L1, [
        ["1", "-q*u2/t"],
        ["1", "-q*u1/t"],
    ]),
    2: (L2, L2, [
        ["(q-1)*u2*(t*u1*q^2-u1*q^2+t*u2*q^2-u2*q^2-u2*q+t*u1)/t^2", "1", "-q*(q+1)*u2/t",
         "-(q-1)*q^2*u2^2*(-q*u1+q*t*u1+t*u1-q*u2)/t^3", "q^3*u2^2/t^2"],
        ["q*(t-1)*u2*(-u1*t^2+q*u2*t+q*u1-u1+q*u2-u2)/t^3", "1", "-q*(t+1)*u2/t^2",
         "-q^2*(t-1)*u2^2*(q*u1-t*u1-u1+q*u2)/t^4", "q^2*u2^2/t^3"],
        ["(q-1)*q*(t-1)*(u1^2+u2*u1+u2^2)/t^2", "1", "-q*(u1+u2)/t",
         "-(q-1)*q^2*(t-1)*u1*u2*(u1+u2)/t^3", "q^2*u1*u2/t^2"],
        ["(q-1)*u1*(t*u1*q^2-u1*q^2+t*u2*q^2-u2*q^2-u1*q+t*u2)/t^2", "1", "-q*(q+1)*u1/t",
         "-(q-1)*q^2*u1^2*(-q*u1-q*u2+q*t*u2+t*u2)/t^3", "q^3*u1^2/t^2"],
        ["q*(t-1)*u1*(-u2*t^2+q*u1*t+q*u1-u1+q*u2-u2)/t^3", "1", "-q*(t+1)*u1/t^2",
         "-q^2*(t-1)*u1^2*(q*u1+q*u2-t*u2-u2)/t^4", "q^2*u1^2/t^3"],
    ]),
}

C_TILDE = {
    1: (L1, L1, [
        ["1", "u2/(u1-u2)"],
        ["0", "1"],
    ]),
    2: (L2, L2, [
        ["1", "0", "0", "u2/(u1-u2)", "0"],
        ["0", "1", "u2/(t*u1-u2)", "-u2/(t*u1-u2)", "t*u2^2/((u1-u2)*(t*u1-u2))"],
        ["0", "0", "1", "-1", "-t*(1+t)*u2/(-u1+t*u2)"],
        ["0", "0", "0", "1", "0"],
        ["0", "0", "0", "0", "1"],
    ]),
}

C_TILDE_STAR = {
    1: (L1_DUAL, L1_DUAL, [
        ["1", "-u2/(u1-u2)"],
        ["0", "1"],
    ]),
    2: (L2_DUAL, L2_DUAL, [
        ["1", "0", "1-t", "-u2/(u1-u2)", "0"],
        ["0", "1", "t*u2/(t*u2-u1)", "0", "t*u2^2/((u1-u2)*(u1-t*u2))"],
        ["0", "0", "1", "0", "-(t+1)*u2/(t*u1-u2)"],
        ["0", "0", "0", "1", "0"],
        ["0", "0", "0", "0", "1"],
    ]),
}

TRANSCRIBED = {"alpha": ALPHA, "c_tilde": C_TILDE, "c_tilde_star": C_TILDE_STAR}
GOLDEN_DIR = Path(__file__).parent


def golden_path(kind: str) -> Path:
    return GOLDEN_DIR / f"{kind}_L1_2.json"


def transcribed_tables(kind: str):
    from crystalagt.cli import Table
    from crystalagt.exactfield import from_text

    out = []
    for level, (rows, cols, entries) in sorted(TRANSCRIBED[kind].items()):
        out.append(Table(kind, level, 2, rows, cols, [[from_text(x) for x in r] for r in entries]))
    return out


def render_goldens(kind: str) -> str:
    from crystalagt.cli import dump_table_json

    tabs = transcribed_tables(kind)
    return "[\n" + ",\n".join(dump_table_json(tb.to_json()) for tb in tabs) + "\n]\n"


if __name__ == "__main__":
    for kind in TRANSCRIBED:
        golden_path(kind).write_text(render_goldens(kind))
