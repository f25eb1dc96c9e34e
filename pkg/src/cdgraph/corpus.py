"""Builtin group corpora and corpus files.

``T1`` holds groups of order at most 2000 on which brute-force oracles are
affordable; ``T2`` holds larger groups (up to a few times 10^4) checked by
the theorem checks only.  2F4(2)' and the O+_n(2) socles are beyond desk scale
and are not included.
"""

from __future__ import annotations

from pathlib import Path

from .constructors import parse_spec

__all__ = [
    "T1",
    "T2",
    "ALMOST_SIMPLE",
    "SIMPLE",
    "QUASI_FROBENIUS",
    "ORACLE",
    "COPRIME_RICH",
    "BUILTIN",
    "load_corpus",
]

T1: list[str] = [
    "Cyclic(1)", "Cyclic(2)", "Cyclic(3)", "Cyclic(4)", "Cyclic(6)", "Cyclic(12)",
    "Sym(3)", "Sym(4)", "Sym(5)", "Sym(6)",
    "Alt(4)", "Alt(5)", "Alt(6)",
    "Dihedral(2)", "Dihedral(3)", "Dihedral(4)", "Dihedral(5)", "Dihedral(6)",
    "Dihedral(7)", "Dihedral(9)", "Dihedral(12)",
    "Frobenius(5,2)", "Frobenius(5,4)", "Frobenius(7,3)", "Frobenius(7,6)",
    "Frobenius(11,5)", "Frobenius(13,3)", "Frobenius(13,4)", "Frobenius(13,6)",
    "Frobenius(8,7)", "Frobenius(9,4)", "Frobenius(9,8)",
    "PSL2(7)", "PSL2(8)", "PSL2(11)", "PSL2(13)",
    "PGL2(5)", "PGL2(7)", "PGL2(9)",
    "File(q8.gens)",
    "Direct(Cyclic(2),Cyclic(2))",
    "Direct(Sym(3),Cyclic(2))",
    "Direct(Cyclic(5),Sym(3))",
    "Direct(Sym(3),Sym(3))",
    "Direct(Alt(4),Cyclic(2))",
    "Direct(Alt(4),Cyclic(3))",
    "Direct(Dihedral(4),Cyclic(3))",
    "Direct(Frobenius(7,3),Cyclic(2))",
    "Direct(Frobenius(11,5),Cyclic(3))",
    "Direct(Frobenius(5,4),Cyclic(3))",
    "Direct(File(q8.gens),Cyclic(3))",
    "Direct(File(q8.gens),Sym(3))",
    "Direct(Alt(5),Cyclic(2))",
]

T2: list[str] = [
    "Alt(7)", "Alt(8)", "Sym(7)", "Sym(8)",
    "PSL2(16)", "PSL2(17)", "PSL2(19)", "PSL2(23)", "PSL2(25)", "PSL2(27)",
    "PSL2(29)", "PSL2(31)", "PSL2(32)", "PSL2(37)", "PSL2(41)",
    "File(psu3_3.gens)",
]

ALMOST_SIMPLE: list[str] = (
    [f"Alt({n})" for n in range(5, 9)]
    + [f"Sym({n})" for n in range(5, 9)]
    + [f"PSL2({q})" for q in (7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41)]
    + ["PGL2(7)", "PGL2(9)"]
)

SIMPLE: list[str] = (
    [f"Alt({n})" for n in range(5, 9)]
    + [f"PSL2({q})" for q in (7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41)]
    + ["File(psu3_3.gens)", "Cyclic(2)", "Cyclic(3)"]
)

# groups satisfying the hypotheses of the disconnected-graph corollaries for some p
QUASI_FROBENIUS: list[str] = [
    "Sym(3)", "Alt(4)", "Dihedral(5)",
    "Frobenius(7,3)", "Frobenius(11,5)", "Frobenius(5,4)", "Frobenius(13,4)",
    "Direct(Sym(3),Cyclic(2))",
    "Direct(Cyclic(5),Sym(3))",
    "Direct(Frobenius(7,3),Cyclic(2))",
    "Direct(Frobenius(11,5),Cyclic(3))",
    "Direct(Alt(4),Cyclic(3))",
]

# groups with at least one pair of nontrivial classes of coprime sizes
COPRIME_RICH: list[str] = [
    "Sym(3)", "Alt(4)", "Frobenius(7,3)", "Frobenius(11,5)", "Frobenius(13,4)",
    "Direct(Sym(3),Cyclic(2))", "Direct(Cyclic(5),Sym(3))", "Direct(Alt(4),Cyclic(2))",
]

# 30 groups of order at most 2000 for the brute-force oracle comparison
ORACLE: list[str] = [
    "Cyclic(1)", "Cyclic(6)", "Cyclic(12)",
    "Sym(3)", "Sym(4)", "Sym(5)",
    "Alt(4)", "Alt(5)", "Alt(6)",
    "Dihedral(2)", "Dihedral(4)", "Dihedral(5)", "Dihedral(6)", "Dihedral(9)",
    "Frobenius(5,4)", "Frobenius(7,3)", "Frobenius(7,6)", "Frobenius(11,5)",
    "Frobenius(13,4)", "Frobenius(8,7)", "Frobenius(9,8)",
    "PSL2(7)", "PSL2(8)", "PGL2(5)",
    "File(q8.gens)",
    "Direct(Sym(3),Cyclic(2))", "Direct(Cyclic(5),Sym(3))", "Direct(Alt(4),Cyclic(2))",
    "Direct(Sym(3),Sym(3))", "Direct(Dihedral(4),Cyclic(3))",
]

BUILTIN: dict[str, list[str]] = {
    "builtin": T1 + T2,
    "T1": T1,
    "T2": T2,
    "almost_simple": ALMOST_SIMPLE,
    "simple": SIMPLE,
    "quasi_frobenius": QUASI_FROBENIUS,
    "coprime": COPRIME_RICH,
    "oracle": ORACLE,
}


def load_corpus(name_or_path: str) -> list[str]:
    """Specs of a builtin corpus (``builtin``, ``builtin:T1``, ``T2``, ...) or a file.

    A corpus file lists one group spec per line; blank lines and ``#``
    comments are ignored.
    """
    key = name_or_path.split(":", 1)[1] if name_or_path.startswith("builtin:") else name_or_path
    if key in BUILTIN:
        return list(BUILTIN[key])
    path = Path(name_or_path)
    if not path.is_file():
        raise FileNotFoundError(f"no builtin corpus or file named {name_or_path!r}")
    specs = []
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            specs.append(str(parse_spec(line)))
    return specs
