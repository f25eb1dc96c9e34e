"""
Generator files and the command line
====================================

A generator file starts with ``degree N`` and lists one permutation per line;
``#`` lines are comments.  The same commands are available as ``cdgraph ...``.
"""

import tempfile
from pathlib import Path

from cdgraph import build_group, dump_generators, load_generators
from cdgraph.cli import main

tmp = Path(tempfile.mkdtemp())
path = tmp / "psl2_8.gens"
dump_generators(build_group("PSL2(8)"), path)
print(path.read_text())
print("reloaded order:", load_generators(path).order())

main(["classes", f"File({path})", "--no-cache"])
main(["graph", "Sym(3)", "--kind", "gamma"])
main(["verify", "File(psu3_3.gens)", "--check", "theorem_A"])
main(["suite", "--corpus", "coprime", "--report", str(tmp / "report.json"), "--no-timing"])
